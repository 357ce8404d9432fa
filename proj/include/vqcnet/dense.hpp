#pragma once

#include <Eigen/Dense>

#include "vqcnet/ansatz.hpp"

namespace vqcnet {

// Small dense-operator helpers shared by the diagnostics and tests.
// The amplitude-index convention matches StateVector: qubit j is bit j.

Eigen::Matrix2cd dense_pauli(RotationAxis axis);
Eigen::Matrix2cd dense_projector0();

// Operator acting as `op` on one qubit and identity elsewhere.
Eigen::MatrixXcd embed_one_qubit(const Eigen::Matrix2cd& op, int qubit, int n_qubits);

bool is_hermitian(const Eigen::MatrixXcd& m, double tol = 1e-10);
bool is_unitary_matrix(const Eigen::MatrixXcd& m, double tol = 1e-10);

}  // namespace vqcnet
