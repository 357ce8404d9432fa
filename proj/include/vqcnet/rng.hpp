#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

namespace vqcnet {

// Named sub-streams let one run seed drive several independent random
// sequences (parameter draws, network init, Monte-Carlo sampling) without
// the draws of one stream shifting another.

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream) noexcept {
    return splitmix64(seed ^ splitmix64(fnv1a64(stream)));
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::string_view stream) {
    return std::mt19937_64(derive_seed(seed, stream));
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_double(rng);
}

// Box-Muller standard normals, hand-rolled so the sequence depends only on
// the engine and not on a library's distribution internals. Stateless: both
// values of the pair come from the same two engine draws.
inline std::pair<double, double> normal_pair(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform_double(rng);  // (0, 1]; keeps log finite
    const double u2 = uniform_double(rng);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace vqcnet
