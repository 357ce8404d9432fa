#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace vqcnet {

using Complex = std::complex<double>;

// Dense pure-state simulator caps. Gate application is O(2^n); the
// experiments here never go past 10 qubits, dense observables past 8.
inline constexpr int kMaxQubits = 14;
inline constexpr int kMaxDenseObservableQubits = 8;

/// Single-qubit unitary, row-major 2x2.
struct GateMatrix2 {
    Complex m00, m01, m10, m11;

    bool is_unitary(double tol = 1e-12) const;

    static GateMatrix2 identity();
    static GateMatrix2 pauli_x();
    static GateMatrix2 pauli_y();
    static GateMatrix2 pauli_z();
    static GateMatrix2 hadamard();
    // Rotations exp(-i*theta*sigma/2) about each Pauli axis.
    static GateMatrix2 rx(double theta);
    static GateMatrix2 ry(double theta);
    static GateMatrix2 rz(double theta);
};

// Pure state of n qubits as 2^n complex amplitudes. Qubit j is bit j
// (least significant) of the amplitude index.
class StateVector {
public:
    // Starts in |0...0>. Throws std::invalid_argument outside [1, kMaxQubits].
    explicit StateVector(int n_qubits);

    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const noexcept { return amps_; }
    Complex& operator[](std::size_t i) { return amps_[i]; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;

    void apply_gate(const GateMatrix2& gate, int target);
    void apply_rx(double theta, int target);
    void apply_ry(double theta, int target);
    void apply_rz(double theta, int target);
    void apply_cnot(int control, int target);

    // Probability of reading |0> on one qubit, summed exactly.
    double prob_zero(int qubit) const;

private:
    void check_target(int target) const;

    int n_qubits_;
    std::vector<Complex> amps_;
};

StateVector zero_state(int n_qubits);

// Euclidean norm of the amplitude difference; dimensions must match.
double norm_of_difference(const StateVector& a, const StateVector& b);

// <psi|H|psi> for a dense Hermitian H (checked to 1e-10). The imaginary
// part is verified below 1e-10 and discarded.
double expectation(const StateVector& state, const Eigen::MatrixXcd& hamiltonian);

}  // namespace vqcnet
