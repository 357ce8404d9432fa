#include "vqcnet/encoding.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace vqcnet {

StateVector qubit_encode(std::span<const double> x) {
    if (x.empty()) {
        throw std::invalid_argument("qubit encoding needs at least one value");
    }
    const int n = static_cast<int>(x.size());
    if (n > kMaxQubits) {
        throw std::invalid_argument("qubit encoding input exceeds the qubit cap");
    }
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("qubit encoding input must be finite");
        }
    }
    std::vector<Complex> amps(std::size_t{1} << n, Complex{1.0, 0.0});
    // Grow the tensor product one qubit at a time; qubit j is bit j.
    std::size_t filled = 1;
    for (int j = 0; j < n; ++j) {
        const double c = std::cos(x[j]);
        const double s = std::sin(x[j]);
        for (std::size_t i = 0; i < filled; ++i) {
            amps[i | (std::size_t{1} << j)] = amps[i] * s;
            amps[i] *= c;
        }
        filled <<= 1;
    }
    return StateVector(n, std::move(amps));
}

StateVector wavefunction_encode(std::span<const double> x) {
    if (x.empty() || !std::has_single_bit(x.size())) {
        throw std::invalid_argument("wavefunction encoding needs a power-of-two length");
    }
    const int n = std::countr_zero(x.size());
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("wavefunction encoding length out of range");
    }
    double norm_sq = 0.0;
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("wavefunction encoding input must be finite");
        }
        norm_sq += v * v;
    }
    if (norm_sq <= 0.0) {
        throw std::invalid_argument("wavefunction encoding input must be nonzero");
    }
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    std::vector<Complex> amps(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        amps[i] = Complex{x[i] * inv_norm, 0.0};
    }
    return StateVector(n, std::move(amps));
}

}  // namespace vqcnet
