#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "vqcnet/encoding.hpp"
#include "vqcnet/rng.hpp"

using namespace vqcnet;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("qubit_encode maps angles to per-qubit cos/sin factors")
{
    // x = 0 everywhere -> |00>
    const StateVector zeros = qubit_encode(std::vector<double>{0.0, 0.0});
    CHECK(zeros[0] == Complex{1.0, 0.0});
    CHECK(zeros[1] == Complex{0.0, 0.0});

    // x = pi/2 everywhere -> |11...1>
    const StateVector ones = qubit_encode(std::vector<double>{kPi / 2.0, kPi / 2.0});
    CHECK(std::abs(ones[3] - 1.0) < 1e-15);
    CHECK(std::abs(ones[0]) < 1e-15);

    // x = pi/4 everywhere -> every amplitude 1/2 at n=2
    const StateVector flat = qubit_encode(std::vector<double>{kPi / 4.0, kPi / 4.0});
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(flat[i] - 0.5) < 1e-15);
    }
}

TEST_CASE("qubit_encode follows the product formula on random angles")
{
    auto rng = make_stream(21, "encode");
    std::vector<double> x(3);
    for (double& v : x) v = uniform_in(rng, -kPi, kPi);
    const StateVector state = qubit_encode(x);
    for (std::size_t index = 0; index < state.dim(); ++index) {
        double expected = 1.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            expected *= (index >> j) & 1 ? std::sin(x[j]) : std::cos(x[j]);
        }
        CHECK(std::abs(state[index] - expected) < 1e-14);
    }
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("qubit_encode validates its input")
{
    CHECK_THROWS_AS(qubit_encode(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(qubit_encode(std::vector<double>(15, 0.1)), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(qubit_encode(std::vector<double>{0.1, inf}), std::invalid_argument);
}

TEST_CASE("wavefunction_encode writes normalized data into the amplitudes")
{
    const StateVector basis = wavefunction_encode(std::vector<double>{1.0, 0.0, 0.0, 0.0});
    CHECK(basis.n_qubits() == 2);
    CHECK(basis[0] == Complex{1.0, 0.0});

    const StateVector flat = wavefunction_encode(std::vector<double>{1.0, 1.0, 1.0, 1.0});
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(flat[i] - 0.5) < 1e-15);
    }

    const StateVector mixed = wavefunction_encode(std::vector<double>{3.0, -4.0});
    CHECK(std::abs(mixed[0] - 0.6) < 1e-15);
    CHECK(std::abs(mixed[1] + 0.8) < 1e-15);
    CHECK(mixed.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("wavefunction_encode validates length and magnitude")
{
    CHECK_THROWS_AS(wavefunction_encode(std::vector<double>{1.0, 2.0, 3.0}),
                    std::invalid_argument);  // not a power of two
    CHECK_THROWS_AS(wavefunction_encode(std::vector<double>{1.0}),
                    std::invalid_argument);  // would need zero qubits
    CHECK_THROWS_AS(wavefunction_encode(std::vector<double>{0.0, 0.0, 0.0, 0.0}),
                    std::invalid_argument);  // no direction to normalize
    CHECK_THROWS_AS(wavefunction_encode(std::vector<double>(std::size_t{1} << 15, 1.0)),
                    std::invalid_argument);  // above the qubit cap
}

TEST_CASE("normalization is by the Euclidean norm")
{
    // Components keep their ratios; only the overall scale changes.
    const std::vector<double> data{2.0, 0.0, -1.0, 2.0};
    const StateVector state = wavefunction_encode(data);
    const double norm = 3.0;  // sqrt(4 + 0 + 1 + 4)
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(state[i] - data[i] / norm) < 1e-15);
    }
}
