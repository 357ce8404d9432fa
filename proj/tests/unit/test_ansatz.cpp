#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "vqcnet/ansatz.hpp"
#include "vqcnet/dense.hpp"
#include "vqcnet/encoding.hpp"
#include "vqcnet/rng.hpp"

using namespace vqcnet;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2cd dense_ry(double theta)
{
    Eigen::Matrix2cd m;
    m << std::cos(theta / 2.0), -std::sin(theta / 2.0),  //
        std::sin(theta / 2.0), std::cos(theta / 2.0);
    return m;
}

}  // namespace

TEST_CASE("axis and entangler names parse and round-trip")
{
    CHECK(parse_rotation_axis("y") == RotationAxis::Y);
    CHECK(parse_rotation_axis(axis_name(RotationAxis::X)) == RotationAxis::X);
    CHECK(parse_entangler("linear-cnot-ladder") == EntanglerLayout::LinearCnotLadder);
    CHECK(parse_entangler(entangler_name(EntanglerLayout::None)) ==
          EntanglerLayout::None);
    CHECK_THROWS_AS(parse_rotation_axis("w"), std::invalid_argument);
    CHECK_THROWS_AS(parse_entangler("ring"), std::invalid_argument);
}

TEST_CASE("param_count is qubits times depth")
{
    CHECK(param_count({2, 3, RotationAxis::Y, EntanglerLayout::LinearCnotLadder}) == 6);
    CHECK(param_count({1, 1, RotationAxis::Y, EntanglerLayout::None}) == 1);
    CHECK(param_count({10, 20, RotationAxis::Y, EntanglerLayout::LinearCnotLadder})
          == 200);
}

TEST_CASE("entangler is the ascending cnot ladder")
{
    AnsatzSpec spec;
    spec.n_qubits = 3;

    auto rng = make_stream(17, "ladder");
    StateVector state = zero_state(3);
    for (int q = 0; q < 3; ++q) state.apply_ry(uniform_in(rng, 0.0, 2.0 * kPi), q);

    StateVector manual = state;
    manual.apply_cnot(0, 1);
    manual.apply_cnot(1, 2);
    apply_entangler(state, spec);
    CHECK(norm_of_difference(state, manual) < 1e-14);
}

TEST_CASE("entangler order matters: the ladder is not an involution at n=3")
{
    AnsatzSpec spec;
    spec.n_qubits = 3;
    StateVector state = qubit_encode(std::vector<double>{0.3, 0.9, 1.4});
    const StateVector before = state;
    apply_entangler(state, spec);
    apply_entangler(state, spec);
    // CNOT(0->1) and CNOT(1->2) do not commute, so the double ladder moves
    // the state; a per-gate involution argument does not apply to the chain.
    CHECK(norm_of_difference(state, before) > 0.1);
}

TEST_CASE("entangler is a no-op for one qubit and for layout none")
{
    AnsatzSpec single;
    single.n_qubits = 1;
    StateVector one = qubit_encode(std::vector<double>{0.7});
    const StateVector one_before = one;
    apply_entangler(one, single);
    CHECK(norm_of_difference(one, one_before) == 0.0);

    AnsatzSpec off;
    off.n_qubits = 3;
    off.entangler = EntanglerLayout::None;
    StateVector three = qubit_encode(std::vector<double>{0.1, 0.2, 0.3});
    const StateVector three_before = three;
    apply_entangler(three, off);
    CHECK(norm_of_difference(three, three_before) == 0.0);
}

TEST_CASE("apply_ansatz runs rotations before the entangler, layer by layer")
{
    AnsatzSpec spec;
    spec.n_qubits = 2;
    spec.depth = 2;
    const std::vector<double> theta{0.4, 1.1, -0.6, 2.2};

    StateVector state = qubit_encode(std::vector<double>{kPi / 4.0, kPi / 8.0});
    StateVector manual = state;

    manual.apply_ry(theta[0], 0);
    manual.apply_ry(theta[1], 1);
    manual.apply_cnot(0, 1);
    manual.apply_ry(theta[2], 0);
    manual.apply_ry(theta[3], 1);
    manual.apply_cnot(0, 1);

    apply_ansatz(state, spec, theta);
    CHECK(norm_of_difference(state, manual) < 1e-14);
}

TEST_CASE("apply_ansatz validates the parameter count and state size")
{
    AnsatzSpec spec;
    spec.n_qubits = 2;
    spec.depth = 2;
    StateVector state = zero_state(2);
    CHECK_THROWS_AS(apply_ansatz(state, spec, std::vector<double>{0.1, 0.2, 0.3}),
                    std::invalid_argument);
    StateVector wrong = zero_state(3);
    CHECK_THROWS_AS(apply_ansatz(wrong, spec, std::vector<double>(4, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("rotation axis selects the gate family")
{
    AnsatzSpec spec;
    spec.n_qubits = 1;
    spec.depth = 1;
    spec.entangler = EntanglerLayout::None;
    const std::vector<double> theta{1.3};

    spec.axis = RotationAxis::X;
    StateVector x = zero_state(1);
    apply_ansatz(x, spec, theta);
    StateVector x_manual = zero_state(1);
    x_manual.apply_rx(1.3, 0);
    CHECK(norm_of_difference(x, x_manual) == 0.0);

    spec.axis = RotationAxis::Z;
    StateVector z = zero_state(1);
    apply_ansatz(z, spec, theta);
    StateVector z_manual = zero_state(1);
    z_manual.apply_rz(1.3, 0);
    CHECK(norm_of_difference(z, z_manual) == 0.0);
}

TEST_CASE("build_unitary reproduces the state evolution")
{
    AnsatzSpec spec;
    spec.n_qubits = 3;
    spec.depth = 2;
    auto rng = make_stream(29, "unitary");
    std::vector<double> theta(static_cast<std::size_t>(param_count(spec)));
    for (double& t : theta) t = uniform_in(rng, 0.0, 2.0 * kPi);

    const Eigen::MatrixXcd u = build_unitary(spec, theta);
    CHECK(is_unitary_matrix(u));

    StateVector state = qubit_encode(std::vector<double>{0.2, 0.9, 1.7});
    Eigen::VectorXcd amps(8);
    for (int i = 0; i < 8; ++i) amps(i) = state[static_cast<std::size_t>(i)];
    const Eigen::VectorXcd evolved = u * amps;

    apply_ansatz(state, spec, theta);
    for (int i = 0; i < 8; ++i) {
        CHECK(std::abs(evolved(i) - state[static_cast<std::size_t>(i)]) < 1e-13);
    }
}

TEST_CASE("build_unitary matches the dense per-layer product at n=2")
{
    AnsatzSpec spec;
    spec.n_qubits = 2;
    spec.depth = 1;
    const std::vector<double> theta{0.8, -1.9};

    Eigen::MatrixXcd cnot01 = Eigen::MatrixXcd::Identity(4, 4);
    cnot01(1, 1) = 0.0;
    cnot01(3, 3) = 0.0;
    cnot01(1, 3) = 1.0;
    cnot01(3, 1) = 1.0;  // control qubit 0 set: swap target bit 1

    const Eigen::MatrixXcd expected = cnot01
                                      * embed_one_qubit(dense_ry(theta[1]), 1, 2)
                                      * embed_one_qubit(dense_ry(theta[0]), 0, 2);
    const Eigen::MatrixXcd actual = build_unitary(spec, theta);
    CHECK((expected - actual).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("build_unitary enforces the dense cap")
{
    AnsatzSpec spec;
    spec.n_qubits = 7;
    spec.depth = 1;
    CHECK_THROWS_AS(build_unitary(spec, std::vector<double>(7, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("zero angles with no entangler is the identity circuit")
{
    AnsatzSpec spec;
    spec.n_qubits = 2;
    spec.depth = 3;
    spec.entangler = EntanglerLayout::None;
    StateVector state = qubit_encode(std::vector<double>{0.5, 1.2});
    const StateVector before = state;
    apply_ansatz(state, spec, std::vector<double>(6, 0.0));
    CHECK(norm_of_difference(state, before) < 1e-15);
}
