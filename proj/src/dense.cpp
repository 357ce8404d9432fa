#include "vqcnet/dense.hpp"

#include <stdexcept>

namespace vqcnet {

Eigen::Matrix2cd dense_pauli(RotationAxis axis) {
    Eigen::Matrix2cd m;
    switch (axis) {
        case RotationAxis::X:
            m << 0.0, 1.0, 1.0, 0.0;
            break;
        case RotationAxis::Y:
            m << Complex{0.0, 0.0}, Complex{0.0, -1.0}, Complex{0.0, 1.0}, Complex{0.0, 0.0};
            break;
        case RotationAxis::Z:
            m << 1.0, 0.0, 0.0, -1.0;
            break;
    }
    return m;
}

Eigen::Matrix2cd dense_projector0() {
    Eigen::Matrix2cd m;
    m << 1.0, 0.0, 0.0, 0.0;
    return m;
}

Eigen::MatrixXcd embed_one_qubit(const Eigen::Matrix2cd& op, int qubit, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseObservableQubits) {
        throw std::invalid_argument("dense embedding limited to 8 qubits");
    }
    if (qubit < 0 || qubit >= n_qubits) {
        throw std::out_of_range("embed qubit index out of range");
    }
    const auto dim = Eigen::Index{1} << n_qubits;
    const auto bit = Eigen::Index{1} << qubit;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const Eigen::Index col_bit = (col & bit) ? 1 : 0;
        for (Eigen::Index row_bit = 0; row_bit < 2; ++row_bit) {
            const Eigen::Index row = (col & ~bit) | (row_bit << qubit);
            full(row, col) = op(row_bit, col_bit);
        }
    }
    return full;
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
    return m.rows() == m.cols() &&
           (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary_matrix(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const Eigen::MatrixXcd gram = m.adjoint() * m;
    return (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace vqcnet
