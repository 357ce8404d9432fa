#include "vqcnet/cost.hpp"

#include <stdexcept>

#include "vqcnet/dense.hpp"

namespace vqcnet {

double local_cost(const StateVector& state) {
    const int n = state.n_qubits();
    double sum = 0.0;
    for (int q = 0; q < n; ++q) {
        sum += state.prob_zero(q);
    }
    return 1.0 - sum / n;
}

double observable_cost(const StateVector& state, const Eigen::MatrixXcd& observable) {
    return expectation(state, observable);
}

double dataset_cost(std::span<const StateVector> states,
                    std::span<const Eigen::MatrixXcd> observables) {
    if (states.empty() || states.size() != observables.size()) {
        throw std::invalid_argument("dataset cost needs equal-length nonempty lists");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        sum += observable_cost(states[i], observables[i]);
    }
    return sum / static_cast<double>(states.size());
}

Eigen::MatrixXcd local_cost_observable(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 6) {
        throw std::invalid_argument("dense local cost observable limited to 6 qubits");
    }
    const auto dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(dim, dim);
    for (int q = 0; q < n_qubits; ++q) {
        h -= embed_one_qubit(dense_projector0(), q, n_qubits) / static_cast<double>(n_qubits);
    }
    return h;
}

}  // namespace vqcnet
