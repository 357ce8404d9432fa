#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vqcnet/ansatz.hpp"
#include "vqcnet/cost.hpp"
#include "vqcnet/mlp.hpp"
#include "vqcnet/statevector.hpp"

namespace vqcnet {

// Packages one circuit-cost evaluation: fixed input state, fixed ansatz,
// theta in, cost out. Copies share the evaluation counter so call budgets
// can be asserted across the training loop.
class CircuitEvaluator {
public:
    CircuitEvaluator(StateVector input, AnsatzSpec spec)
        : input_(std::move(input)),
          spec_(spec),
          evals_(std::make_shared<std::atomic<std::int64_t>>(0)) {
        if (input_.n_qubits() != spec_.n_qubits) {
            throw std::invalid_argument("evaluator input does not match ansatz");
        }
    }

    CircuitEvaluator(StateVector input, AnsatzSpec spec, Eigen::MatrixXcd observable)
        : CircuitEvaluator(std::move(input), spec) {
        observable_ = std::move(observable);
    }

    double operator()(std::span<const double> theta) const {
        evals_->fetch_add(1, std::memory_order_relaxed);
        StateVector state = input_;
        apply_ansatz(state, spec_, theta);
        return observable_ ? observable_cost(state, *observable_) : local_cost(state);
    }

    std::int64_t evaluations() const noexcept { return evals_->load(); }
    void reset_evaluations() const noexcept { evals_->store(0); }
    const AnsatzSpec& spec() const noexcept { return spec_; }
    int parameter_count() const { return param_count(spec_); }

private:
    StateVector input_;
    AnsatzSpec spec_;
    std::optional<Eigen::MatrixXcd> observable_;
    std::shared_ptr<std::atomic<std::int64_t>> evals_;
};

// Exact gradient for exp(-i*theta*sigma/2) gates: half the difference of
// the cost at +-pi/2 shifts, per component. 2p evaluations.
template <typename CostFn>
std::vector<double> param_shift_grad(const CostFn& cost, std::span<const double> theta) {
    std::vector<double> shifted(theta.begin(), theta.end());
    std::vector<double> grad(theta.size());
    constexpr double shift = std::numbers::pi / 2.0;
    for (std::size_t k = 0; k < theta.size(); ++k) {
        shifted[k] = theta[k] + shift;
        const double plus = cost(std::span<const double>(shifted));
        shifted[k] = theta[k] - shift;
        const double minus = cost(std::span<const double>(shifted));
        shifted[k] = theta[k];
        grad[k] = (plus - minus) / 2.0;
    }
    return grad;
}

// Central differences; the test-side oracle for the shift rule.
template <typename CostFn>
std::vector<double> finite_diff_grad(const CostFn& cost, std::span<const double> theta,
                                     double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("finite difference step must be positive");
    }
    std::vector<double> shifted(theta.begin(), theta.end());
    std::vector<double> grad(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        shifted[k] = theta[k] + step;
        const double plus = cost(std::span<const double>(shifted));
        shifted[k] = theta[k] - step;
        const double minus = cost(std::span<const double>(shifted));
        shifted[k] = theta[k];
        grad[k] = (plus - minus) / (2.0 * step);
    }
    return grad;
}

struct HybridGradResult {
    MlpGradients grads;
    std::vector<double> theta;
    double cost = 0.0;
};

// Chain rule through network and circuit: forward to theta, shift-rule
// upstream, reverse mode back to every weight, bias, and input entry.
// 2p + 1 cost evaluations.
HybridGradResult hybrid_grad(const MlpModel& model, std::span<const double> alpha,
                             const CircuitEvaluator& eval);

}  // namespace vqcnet
