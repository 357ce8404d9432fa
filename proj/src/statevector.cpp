#include "vqcnet/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vqcnet {

namespace {
constexpr Complex kI{0.0, 1.0};
}

bool GateMatrix2::is_unitary(double tol) const {
    // Rows of M^dagger M against the identity.
    const Complex a = std::conj(m00) * m00 + std::conj(m10) * m10;
    const Complex b = std::conj(m00) * m01 + std::conj(m10) * m11;
    const Complex c = std::conj(m01) * m00 + std::conj(m11) * m10;
    const Complex d = std::conj(m01) * m01 + std::conj(m11) * m11;
    return std::abs(a - 1.0) <= tol && std::abs(b) <= tol &&
           std::abs(c) <= tol && std::abs(d - 1.0) <= tol;
}

GateMatrix2 GateMatrix2::identity() { return {1.0, 0.0, 0.0, 1.0}; }
GateMatrix2 GateMatrix2::pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
GateMatrix2 GateMatrix2::pauli_y() { return {0.0, -kI, kI, 0.0}; }
GateMatrix2 GateMatrix2::pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

GateMatrix2 GateMatrix2::hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}

GateMatrix2 GateMatrix2::rx(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {c, -kI * s, -kI * s, c};
}

GateMatrix2 GateMatrix2::ry(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {c, -s, s, c};
}

GateMatrix2 GateMatrix2::rz(double theta) {
    return {std::exp(-kI * (theta / 2.0)), 0.0, 0.0, std::exp(kI * (theta / 2.0))};
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : StateVector(n_qubits) {
    if (amplitudes.size() != amps_.size()) {
        throw std::invalid_argument("amplitude vector size does not match qubit count");
    }
    amps_ = std::move(amplitudes);
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

void StateVector::check_target(int target) const {
    if (target < 0 || target >= n_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(target) +
                                " out of range for " + std::to_string(n_qubits_) +
                                " qubits");
    }
}

void StateVector::apply_gate(const GateMatrix2& gate, int target) {
    check_target(target);
    if (!gate.is_unitary()) {
        throw std::invalid_argument("gate matrix is not unitary");
    }
    const std::size_t step = std::size_t{1} << target;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + step];
            amps_[i] = gate.m00 * a0 + gate.m01 * a1;
            amps_[i + step] = gate.m10 * a0 + gate.m11 * a1;
        }
    }
}

void StateVector::apply_rx(double theta, int target) {
    apply_gate(GateMatrix2::rx(theta), target);
}

// Real-valued rotation; kept as a dedicated kernel since it dominates the
// training loops.
void StateVector::apply_ry(double theta, int target) {
    check_target(target);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::size_t step = std::size_t{1} << target;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + step];
            amps_[i] = c * a0 - s * a1;
            amps_[i + step] = s * a0 + c * a1;
        }
    }
}

void StateVector::apply_rz(double theta, int target) {
    apply_gate(GateMatrix2::rz(theta), target);
}

void StateVector::apply_cnot(int control, int target) {
    check_target(control);
    check_target(target);
    if (control == target) {
        throw std::out_of_range("cnot control and target must differ");
    }
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

double StateVector::prob_zero(int qubit) const {
    check_target(qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double sum = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) sum += std::norm(amps_[i]);
    }
    return sum;
}

StateVector zero_state(int n_qubits) { return StateVector(n_qubits); }

double norm_of_difference(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("state dimensions differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::norm(a[i] - b[i]);
    }
    return std::sqrt(sum);
}

double expectation(const StateVector& state, const Eigen::MatrixXcd& hamiltonian) {
    const auto dim = static_cast<Eigen::Index>(state.dim());
    if (hamiltonian.rows() != dim || hamiltonian.cols() != dim) {
        throw std::invalid_argument("observable dimension does not match state");
    }
    if (state.n_qubits() > kMaxDenseObservableQubits) {
        throw std::invalid_argument("dense observables limited to " +
                                    std::to_string(kMaxDenseObservableQubits) + " qubits");
    }
    if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("observable is not Hermitian");
    }
    const Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(), dim);
    const Complex value = psi.dot(hamiltonian * psi);
    if (std::abs(value.imag()) >= 1e-10) {
        throw std::runtime_error("expectation value has non-negligible imaginary part");
    }
    return value.real();
}

}  // namespace vqcnet
