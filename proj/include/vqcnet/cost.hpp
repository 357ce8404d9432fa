#pragma once

#include <span>

#include <Eigen/Dense>

#include "vqcnet/statevector.hpp"

namespace vqcnet {

// Training cost: one minus the average probability of |0> per qubit.
// Lands in [0, 1] for any state.
double local_cost(const StateVector& state);

// General expectation cost for a dense Hermitian observable.
double observable_cost(const StateVector& state, const Eigen::MatrixXcd& observable);

// Mean of per-sample observable costs over paired states/observables.
double dataset_cost(std::span<const StateVector> states,
                    std::span<const Eigen::MatrixXcd> observables);

// Dense form of the local cost observable, I - (1/n) sum_i |0><0|_i x I,
// for cross-checks against local_cost (6 qubits at most).
Eigen::MatrixXcd local_cost_observable(int n_qubits);

}  // namespace vqcnet
