#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "vqcnet/statevector.hpp"

namespace vqcnet {

enum class RotationAxis { X, Y, Z };
enum class EntanglerLayout { LinearCnotLadder, None };

RotationAxis parse_rotation_axis(std::string_view name);
EntanglerLayout parse_entangler(std::string_view name);
std::string axis_name(RotationAxis axis);
std::string entangler_name(EntanglerLayout layout);

// Layered circuit shape: per layer, one rotation per qubit followed by the
// entangler. theta[i*n + j] belongs to layer i, qubit j.
struct AnsatzSpec {
    int n_qubits = 1;
    int depth = 1;
    RotationAxis axis = RotationAxis::Y;
    EntanglerLayout entangler = EntanglerLayout::LinearCnotLadder;
};

int param_count(const AnsatzSpec& spec);

// CNOT(j -> j+1) for j ascending; identity on a single qubit.
void apply_entangler(StateVector& state, const AnsatzSpec& spec);

void apply_ansatz(StateVector& state, const AnsatzSpec& spec,
                  std::span<const double> theta);

// Full circuit as a dense matrix, columns built from basis states.
// Limited to 6 qubits.
Eigen::MatrixXcd build_unitary(const AnsatzSpec& spec, std::span<const double> theta);

}  // namespace vqcnet
