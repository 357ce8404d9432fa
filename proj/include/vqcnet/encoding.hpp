#pragma once

#include <span>

#include "vqcnet/statevector.hpp"

namespace vqcnet {

// One data value per qubit: the product state over cos(x_j)|0> + sin(x_j)|1>.
StateVector qubit_encode(std::span<const double> x);

// Data written directly into the amplitudes, normalized to unit length.
// Length must be a power of two and the vector nonzero.
StateVector wavefunction_encode(std::span<const double> x);

}  // namespace vqcnet
