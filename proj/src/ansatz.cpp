#include "vqcnet/ansatz.hpp"

#include <stdexcept>
#include <string>

namespace vqcnet {

RotationAxis parse_rotation_axis(std::string_view name) {
    if (name == "X" || name == "x") return RotationAxis::X;
    if (name == "Y" || name == "y") return RotationAxis::Y;
    if (name == "Z" || name == "z") return RotationAxis::Z;
    throw std::invalid_argument("unknown rotation axis: " + std::string(name));
}

EntanglerLayout parse_entangler(std::string_view name) {
    if (name == "linear-cnot-ladder") return EntanglerLayout::LinearCnotLadder;
    if (name == "none") return EntanglerLayout::None;
    throw std::invalid_argument("unknown entangler layout: " + std::string(name));
}

std::string axis_name(RotationAxis axis) {
    switch (axis) {
        case RotationAxis::X: return "X";
        case RotationAxis::Y: return "Y";
        case RotationAxis::Z: return "Z";
    }
    return "?";
}

std::string entangler_name(EntanglerLayout layout) {
    return layout == EntanglerLayout::LinearCnotLadder ? "linear-cnot-ladder" : "none";
}

namespace {

void check_spec(const AnsatzSpec& spec) {
    if (spec.n_qubits < 1 || spec.n_qubits > kMaxQubits) {
        throw std::invalid_argument("ansatz qubit count out of range");
    }
    if (spec.depth < 1) {
        throw std::invalid_argument("ansatz depth must be positive");
    }
}

void apply_rotation(StateVector& state, RotationAxis axis, double theta, int qubit) {
    switch (axis) {
        case RotationAxis::X: state.apply_rx(theta, qubit); break;
        case RotationAxis::Y: state.apply_ry(theta, qubit); break;
        case RotationAxis::Z: state.apply_rz(theta, qubit); break;
    }
}

}  // namespace

int param_count(const AnsatzSpec& spec) {
    check_spec(spec);
    return spec.n_qubits * spec.depth;
}

void apply_entangler(StateVector& state, const AnsatzSpec& spec) {
    check_spec(spec);
    if (state.n_qubits() != spec.n_qubits) {
        throw std::invalid_argument("state does not match ansatz qubit count");
    }
    if (spec.entangler == EntanglerLayout::None) return;
    for (int j = 0; j + 1 < spec.n_qubits; ++j) {
        state.apply_cnot(j, j + 1);
    }
}

void apply_ansatz(StateVector& state, const AnsatzSpec& spec,
                  std::span<const double> theta) {
    check_spec(spec);
    if (state.n_qubits() != spec.n_qubits) {
        throw std::invalid_argument("state does not match ansatz qubit count");
    }
    if (theta.size() != static_cast<std::size_t>(param_count(spec))) {
        throw std::invalid_argument("parameter vector length does not match ansatz");
    }
    const int n = spec.n_qubits;
    for (int layer = 0; layer < spec.depth; ++layer) {
        for (int j = 0; j < n; ++j) {
            apply_rotation(state, spec.axis, theta[static_cast<std::size_t>(layer) * n + j], j);
        }
        apply_entangler(state, spec);
    }
}

Eigen::MatrixXcd build_unitary(const AnsatzSpec& spec, std::span<const double> theta) {
    check_spec(spec);
    if (spec.n_qubits > 6) {
        throw std::invalid_argument("dense circuit matrices limited to 6 qubits");
    }
    const auto dim = std::size_t{1} << spec.n_qubits;
    Eigen::MatrixXcd unitary(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> basis(dim, Complex{0.0, 0.0});
        basis[col] = Complex{1.0, 0.0};
        StateVector state(spec.n_qubits, std::move(basis));
        apply_ansatz(state, spec, theta);
        for (std::size_t row = 0; row < dim; ++row) {
            unitary(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = state[row];
        }
    }
    return unitary;
}

}  // namespace vqcnet
