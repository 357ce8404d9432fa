#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "vqcnet/diagnostics.hpp"
#include "vqcnet/cost.hpp"
#include "vqcnet/dense.hpp"
#include "vqcnet/encoding.hpp"
#include "vqcnet/gradients.hpp"
#include "vqcnet/rng.hpp"

using namespace vqcnet;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

MatrixXcd dense_state(const StateVector& state)
{
    VectorXcd v(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) v(static_cast<Eigen::Index>(i)) = state[i];
    return v * v.adjoint();
}

// One-sample Kolmogorov-Smirnov distance against a CDF given as a callable.
template <typename Cdf>
double ks_distance(std::vector<double> samples, const Cdf& cdf)
{
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

}  // namespace

TEST_CASE("haar draws are unitary, deterministic per stream, and bounded in size")
{
    for (int d : {2, 5, 16}) {
        auto rng = make_stream(3, "haar");
        const MatrixXcd u = haar_unitary(d, rng);
        const MatrixXcd gram = u.adjoint() * u;
        CHECK((gram - MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
    }

    auto rng_a = make_stream(7, "haar");
    auto rng_b = make_stream(7, "haar");
    const MatrixXcd a = haar_unitary(4, rng_a);
    const MatrixXcd b = haar_unitary(4, rng_b);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    const MatrixXcd c = haar_unitary(4, rng_a);  // next draw from the same stream
    CHECK((a - c).cwiseAbs().maxCoeff() > 1e-3);

    auto rng = make_stream(0, "haar");
    CHECK_THROWS_AS(haar_unitary(1, rng), std::invalid_argument);
    CHECK_THROWS_AS(haar_unitary(65, rng), std::invalid_argument);
}

TEST_CASE("haar entry statistics match the known distribution")
{
    // |U00|^2 of a Haar 2x2 unitary is uniform on [0, 1]; check with a
    // one-sample Kolmogorov-Smirnov test at the 1% level.
    const int trials = 4000;
    auto rng = make_stream(12, "haar-ks");
    std::vector<double> plain(trials), rotated(trials);
    MatrixXcd v(2, 2);  // fixed unitary for the invariance variant
    const double s = 1.0 / std::numbers::sqrt2;
    v << std::complex<double>(s, 0.0), std::complex<double>(s, 0.0),
        std::complex<double>(0.0, s), std::complex<double>(0.0, -s);
    for (int i = 0; i < trials; ++i) {
        const MatrixXcd u = haar_unitary(2, rng);
        plain[static_cast<std::size_t>(i)] = std::norm(u(0, 0));
        rotated[static_cast<std::size_t>(i)] = std::norm((v * u)(0, 0));
    }
    const auto uniform_cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
    const double threshold = 1.628 / std::sqrt(static_cast<double>(trials));
    CHECK(ks_distance(plain, uniform_cdf) < threshold);
    // left-invariance: a fixed rotation must not change the distribution
    CHECK(ks_distance(rotated, uniform_cdf) < threshold);

    // mean of |U00|^2 for d = 4 is 1/4
    auto rng4 = make_stream(12, "haar-mean");
    double sum = 0.0;
    const int trials4 = 5000;
    for (int i = 0; i < trials4; ++i) sum += std::norm(haar_unitary(4, rng4)(0, 0));
    CHECK(std::abs(sum / trials4 - 0.25) < 0.015);
}

TEST_CASE("first-moment identity is exact for identities and matches closed forms")
{
    const MatrixXcd eye2 = MatrixXcd::Identity(2, 2);
    auto rng = make_stream(5, "lemma");

    // W I W^dag = I for every W, so the estimate has zero spread
    const LemmaCheckReport exact = mc_lemma1(eye2, eye2, 2, 200, rng);
    CHECK(exact.analytic.real() == doctest::Approx(2.0));
    CHECK(exact.abs_error < 1e-12);
    CHECK(exact.std_error < 1e-12);
    CHECK(exact.conclusive);

    // closed form: Tr[A] Tr[B] / d
    const MatrixXcd z = dense_pauli(RotationAxis::Z);
    const MatrixXcd p0 = dense_projector0();
    CHECK(lemma1_analytic(z, p0, 2) == std::complex<double>(0.0, 0.0));
    CHECK(lemma1_analytic(p0, p0, 2).real() == doctest::Approx(0.5));
}

TEST_CASE("second- and fourth-moment identities hit the known 1/3 values")
{
    const MatrixXcd z = dense_pauli(RotationAxis::Z);
    const MatrixXcd p0 = dense_projector0();

    CHECK(lemma2_analytic(z, p0, z, p0, 2).real() == doctest::Approx(1.0 / 3.0));
    CHECK(lemma2_analytic(z, p0, z, p0, 2).imag() == doctest::Approx(0.0));
    CHECK(lemma3_analytic(p0, p0, p0, p0, 2).real() == doctest::Approx(1.0 / 3.0));

    auto rng = make_stream(9, "lemma-mc");
    const LemmaCheckReport r2 = mc_lemma2(z, p0, z, p0, 2, 20000, rng);
    CHECK(r2.analytic.real() == doctest::Approx(1.0 / 3.0));
    CHECK(r2.abs_error < 4.0 * r2.std_error);
    const LemmaCheckReport r3 = mc_lemma3(p0, p0, p0, p0, 2, 20000, rng);
    CHECK(r3.analytic.real() == doctest::Approx(1.0 / 3.0));
    CHECK(r3.abs_error < 4.0 * r3.std_error);
}

TEST_CASE("moment identities hold for random hermitian operators at d = 4")
{
    auto op_rng = make_stream(31, "lemma-ops");
    const auto random_hermitian = [&]() {
        MatrixXcd g(4, 4);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                const auto [re, im] = normal_pair(op_rng);
                g(r, c) = std::complex<double>(re, im);
            }
        }
        return MatrixXcd((g + g.adjoint()) / 2.0);
    };
    const MatrixXcd a = random_hermitian();
    const MatrixXcd b = random_hermitian();
    const MatrixXcd c = random_hermitian();
    const MatrixXcd e = random_hermitian();

    auto rng = make_stream(32, "lemma-mc4");
    const LemmaCheckReport r1 = mc_lemma1(a, b, 4, 20000, rng);
    CHECK(r1.abs_error < 4.0 * std::max(r1.std_error, 1e-12));
    const LemmaCheckReport r2 = mc_lemma2(a, b, c, e, 4, 20000, rng);
    CHECK(r2.abs_error < 4.0 * std::max(r2.std_error, 1e-12));
    const LemmaCheckReport r3 = mc_lemma3(a, b, c, e, 4, 20000, rng);
    CHECK(r3.abs_error < 4.0 * std::max(r3.std_error, 1e-12));
}

TEST_CASE("moment checks validate arguments and flag thin sampling")
{
    const MatrixXcd eye2 = MatrixXcd::Identity(2, 2);
    const MatrixXcd eye3 = MatrixXcd::Identity(3, 3);
    auto rng = make_stream(1, "lemma-val");

    CHECK_THROWS_AS(mc_lemma1(eye2, eye2, 1, 100, rng), std::invalid_argument);
    CHECK_THROWS_AS(mc_lemma1(eye2, eye2, 65, 100, rng), std::invalid_argument);
    CHECK_THROWS_AS(mc_lemma1(eye2, eye2, 2, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(mc_lemma1(eye3, eye3, 2, 100, rng), std::invalid_argument);
    CHECK_THROWS_AS(mc_lemma2(eye2, eye2, eye3, eye2, 2, 100, rng), std::invalid_argument);

    const LemmaCheckReport thin = mc_lemma1(eye2, eye2, 2, 10, rng);
    CHECK_FALSE(thin.conclusive);
    const LemmaCheckReport thick = mc_lemma1(eye2, eye2, 2, 100, rng);
    CHECK(thick.conclusive);
}

TEST_CASE("commutator derivative closed forms")
{
    const MatrixXcd p0 = dense_projector0();
    const MatrixXcd sy = dense_pauli(RotationAxis::Y);
    const MatrixXcd sx = dense_pauli(RotationAxis::X);
    const MatrixXcd eye = MatrixXcd::Identity(2, 2);

    // d<sigma_x>/dtheta of RY(theta)|0> at theta = 0 is cos(0) = 1
    const std::complex<double> deriv = commutator_derivative(p0, sy, sx);
    CHECK(deriv.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(deriv.imag()) < 1e-14);

    // H = I commutes out: the trace of a commutator vanishes
    CHECK(std::abs(commutator_derivative(p0, sy, eye)) < 1e-14);
}

TEST_CASE("randomized single-gate derivative has zero mean")
{
    const int n = 2;
    const int d = 4;
    const StateVector phi = zero_state(n);
    const MatrixXcd rho = dense_state(phi);
    const MatrixXcd h = embed_one_qubit(dense_projector0(), 1, n);

    auto rng = make_stream(77, "zero-mean");
    const VarianceReport both = zero_mean_gradient_check(n, rho, h, RotationAxis::Y,
                                                         4000, rng);
    CHECK(both.samples == 4000);
    CHECK(std::abs(both.mean) < 4.0 * both.std_error);
    CHECK(both.max_abs_imag < 1e-10);
    CHECK(both.variance > 0.0);

    // with only the right side randomized the mean still vanishes, because
    // the averaged state is maximally mixed and commutes with the generator
    const VarianceReport right_only = zero_mean_gradient_check(
        n, rho, h, RotationAxis::Y, 4000, rng, 1, false);
    CHECK(std::abs(right_only.mean) < 4.0 * right_only.std_error);

    // H = I zeroes the derivative up to roundoff (U_L^dag I U_L is identity
    // only to machine precision)
    const VarianceReport flat = zero_mean_gradient_check(
        n, rho, MatrixXcd::Identity(d, d), RotationAxis::Y, 100, rng);
    CHECK(std::abs(flat.mean) < 1e-15);
    CHECK(flat.variance < 1e-25);
}

TEST_CASE("randomized derivative check validates arguments")
{
    const MatrixXcd rho = dense_state(zero_state(2));
    const MatrixXcd h = MatrixXcd::Identity(4, 4);
    auto rng = make_stream(1, "zm-val");

    CHECK_THROWS_AS(zero_mean_gradient_check(5, rho, h, RotationAxis::Y, 10, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(zero_mean_gradient_check(2, rho, h, RotationAxis::Y, 1, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(zero_mean_gradient_check(2, rho, h, RotationAxis::Y, 10, rng, 2),
                    std::out_of_range);
    const MatrixXcd wrong = MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS(zero_mean_gradient_check(2, wrong, h, RotationAxis::Y, 10, rng),
                    std::invalid_argument);
    MatrixXcd skew = MatrixXcd::Zero(4, 4);
    skew(0, 1) = std::complex<double>(0.0, 1.0);
    skew(1, 0) = std::complex<double>(0.0, 1.0);  // not Hermitian
    CHECK_THROWS_AS(zero_mean_gradient_check(2, rho, skew, RotationAxis::Y, 10, rng),
                    std::invalid_argument);
}

TEST_CASE("commutator form reproduces the shift-rule gradient of a layered circuit")
{
    const int n = 2;
    const AnsatzSpec full{n, 2, RotationAxis::Y, EntanglerLayout::LinearCnotLadder};
    const AnsatzSpec rot_layer{n, 1, RotationAxis::Y, EntanglerLayout::None};
    const AnsatzSpec ent_layer{n, 1, RotationAxis::Y, EntanglerLayout::LinearCnotLadder};

    auto rng = make_stream(19, "eq-layers");
    std::vector<double> theta(static_cast<std::size_t>(param_count(full)));
    for (double& t : theta) t = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);

    const std::vector<double> zeros(static_cast<std::size_t>(n), 0.0);
    const MatrixXcd rot1 =
        build_unitary(rot_layer, std::vector<double>{theta[0], theta[1]});
    const MatrixXcd rot2 =
        build_unitary(rot_layer, std::vector<double>{theta[2], theta[3]});
    const MatrixXcd ent = build_unitary(ent_layer, zeros);

    // the layer factors recompose the full circuit
    const MatrixXcd u_full = build_unitary(full, theta);
    CHECK((u_full - ent * rot2 * ent * rot1).cwiseAbs().maxCoeff() < 1e-12);

    const StateVector phi = training_input_state(n);
    const MatrixXcd rho = dense_state(phi);
    const MatrixXcd h = local_cost_observable(n);
    const CircuitEvaluator eval(phi, full);
    const std::vector<double> grad = param_shift_grad(eval, theta);

    // theta[0]: first-layer rotation on qubit 0; everything after it is U_L
    {
        const MatrixXcd sigma = embed_one_qubit(dense_pauli(RotationAxis::Y), 0, n);
        const MatrixXcd u_l = ent * rot2 * ent;
        const std::complex<double> deriv =
            commutator_derivative(rot1 * rho * rot1.adjoint(), sigma,
                                  u_l.adjoint() * h * u_l);
        CHECK(std::abs(deriv.real() - grad[0]) < 1e-8);
        CHECK(std::abs(deriv.imag()) < 1e-12);
    }
    // theta[3]: second-layer rotation on qubit 1; only the last entangler is U_L
    {
        const MatrixXcd sigma = embed_one_qubit(dense_pauli(RotationAxis::Y), 1, n);
        const MatrixXcd u_r = rot2 * ent * rot1;
        const std::complex<double> deriv =
            commutator_derivative(u_r * rho * u_r.adjoint(), sigma,
                                  ent.adjoint() * h * ent);
        CHECK(std::abs(deriv.real() - grad[3]) < 1e-8);
        CHECK(std::abs(deriv.imag()) < 1e-12);
    }
}

TEST_CASE("sample statistics match hand-computed values")
{
    const std::vector<double> values{1.0, 2.0, 3.0, 4.0};
    const VarianceReport report = statistics_from_samples(values, 3, 1);
    CHECK(report.n_qubits == 3);
    CHECK(report.param_index == 1);
    CHECK(report.samples == 4);
    CHECK(report.mean == doctest::Approx(2.5));
    CHECK(report.variance == doctest::Approx(5.0 / 3.0));
    CHECK(report.std_error == doctest::Approx(std::sqrt(5.0 / 12.0)));
    CHECK(report.variance_std_error > 0.0);

    const std::vector<double> one{1.0};
    CHECK_THROWS_AS(statistics_from_samples(one, 1, 0), std::invalid_argument);
}

TEST_CASE("variance scan reproduces the single-qubit closed form")
{
    // n = 1, depth 1: derivative of the cost is sin(theta)/2, whose variance
    // over theta ~ U[0, 2pi] is 1/8.
    VarianceScanConfig config;
    config.samples = 2000;
    config.seed = 4;
    const std::vector<int> sizes{1};
    const std::vector<VarianceReport> reports = ansatz_variance_scan(sizes, config);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].n_qubits == 1);
    CHECK(reports[0].samples == 2000);
    CHECK(std::abs(reports[0].variance - 0.125) < 4.0 * reports[0].variance_std_error);
    CHECK(std::abs(reports[0].mean) < 4.0 * reports[0].std_error);
}

TEST_CASE("variance scan decays with qubit count and is deterministic")
{
    VarianceScanConfig config;
    config.samples = 300;
    config.seed = 11;
    const std::vector<int> sizes{2, 4, 6};
    const std::vector<VarianceReport> reports = ansatz_variance_scan(sizes, config);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].variance > reports[2].variance);
    CHECK(fit_log_variance_slope(reports) < 0.0);

    const std::vector<VarianceReport> again = ansatz_variance_scan(sizes, config);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].mean == again[i].mean);
        CHECK(reports[i].variance == again[i].variance);
    }
}

TEST_CASE("variance scan validates its configuration")
{
    VarianceScanConfig config;
    const std::vector<int> sizes{2};

    config.samples = 1;
    CHECK_THROWS_AS(ansatz_variance_scan(sizes, config), std::invalid_argument);
    config.samples = 10;

    config.param_index = 4;  // p = n * L = 4 at n = depth = 2, so 4 is out of range
    CHECK_THROWS_AS(ansatz_variance_scan(sizes, config), std::invalid_argument);
    config.param_index = -1;
    CHECK_THROWS_AS(ansatz_variance_scan(sizes, config), std::invalid_argument);
    config.param_index = 0;

    const std::vector<int> empty;
    CHECK_THROWS_AS(ansatz_variance_scan(empty, config), std::invalid_argument);
}

TEST_CASE("log-variance slope fit recovers a synthetic decay rate")
{
    std::vector<VarianceReport> reports(3);
    for (int i = 0; i < 3; ++i) {
        reports[static_cast<std::size_t>(i)].n_qubits = 2 + 2 * i;
        reports[static_cast<std::size_t>(i)].variance = std::exp(-(2.0 + 2.0 * i));
    }
    CHECK(fit_log_variance_slope(reports) == doctest::Approx(-1.0).epsilon(1e-12));

    std::vector<VarianceReport> single(1);
    single[0].n_qubits = 2;
    single[0].variance = 0.1;
    CHECK_THROWS_AS(fit_log_variance_slope(single), std::invalid_argument);

    std::vector<VarianceReport> degenerate(2);
    degenerate[0].n_qubits = 2;
    degenerate[0].variance = 0.1;
    degenerate[1].n_qubits = 2;
    degenerate[1].variance = 0.2;
    CHECK_THROWS_AS(fit_log_variance_slope(degenerate), std::invalid_argument);

    degenerate[1].n_qubits = 3;
    degenerate[1].variance = 0.0;
    CHECK_THROWS_AS(fit_log_variance_slope(degenerate), std::invalid_argument);
}

TEST_CASE("input-angle helpers produce the documented patterns")
{
    const std::vector<double> flat = constant_input(3);
    REQUIRE(flat.size() == 3);
    for (double a : flat) CHECK(a == doctest::Approx(std::numbers::pi / 4.0));

    const std::vector<double> alt = alternating_input(4);
    REQUIRE(alt.size() == 4);
    CHECK(alt[0] == doctest::Approx(std::numbers::pi / 4.0));
    CHECK(alt[1] == doctest::Approx(std::numbers::pi / 8.0));
    CHECK(alt[2] == doctest::Approx(std::numbers::pi / 4.0));
    CHECK(alt[3] == doctest::Approx(std::numbers::pi / 8.0));
}

TEST_CASE("identity proximity is zero only for a do-nothing circuit")
{
    // mu = ||U|phi> - |phi>|| via the same math the report uses
    const StateVector phi = qubit_encode(alternating_input(2));

    AnsatzSpec inert{2, 1, RotationAxis::Y, EntanglerLayout::None};
    StateVector evolved = phi;
    const std::vector<double> zeros{0.0, 0.0};
    apply_ansatz(evolved, inert, zeros);
    CHECK(norm_of_difference(evolved, phi) == 0.0);

    // a nonzero rotation moves the state
    StateVector rotated = phi;
    const std::vector<double> small{0.3, 0.0};
    apply_ansatz(rotated, inert, small);
    CHECK(norm_of_difference(rotated, phi) > 0.01);

    // a global phase on the input does not change mu
    const AnsatzSpec spec{2, 2, RotationAxis::Y, EntanglerLayout::LinearCnotLadder};
    const std::vector<double> theta = draw_initial_theta(2, 2, 6);
    const std::complex<double> phase = std::polar(1.0, 0.9);
    std::vector<Complex> scaled(phi.dim());
    for (std::size_t i = 0; i < phi.dim(); ++i) scaled[i] = phase * phi[i];
    const StateVector phi_phase(2, scaled);

    StateVector moved = phi;
    apply_ansatz(moved, spec, theta);
    StateVector moved_phase = phi_phase;
    apply_ansatz(moved_phase, spec, theta);
    CHECK(norm_of_difference(moved, phi)
          == doctest::Approx(norm_of_difference(moved_phase, phi_phase)).epsilon(1e-12));
}

TEST_CASE("identity proximity reports cover every seed and stay bounded")
{
    const std::vector<double> input = alternating_input(3);
    const IdentityProximityReport net =
        identity_proximity(Scheme::Net, 3, 3, 5, 100, input);
    CHECK(net.scheme == Scheme::Net);
    CHECK(net.n_qubits == 3);
    CHECK(net.depth == 3);
    REQUIRE(net.mu.size() == 5);
    REQUIRE(net.seeds.size() == 5);
    CHECK(net.seeds.front() == 100);
    CHECK(net.seeds.back() == 104);
    double sum = 0.0;
    for (double m : net.mu) {
        CHECK(m >= 0.0);
        CHECK(m <= 2.0);  // triangle inequality bound for unit vectors
        sum += m;
    }
    CHECK(net.mean_mu == doctest::Approx(sum / 5.0));
    CHECK(net.min_mu == *std::min_element(net.mu.begin(), net.mu.end()));
    CHECK(net.max_mu == *std::max_element(net.mu.begin(), net.mu.end()));
    CHECK(net.mean_mu > 0.1);

    const IdentityProximityReport model =
        identity_proximity(Scheme::Model1, 3, 3, 5, 100, input);
    CHECK(model.mean_mu > 0.1);

    CHECK_THROWS_AS(identity_proximity(Scheme::Net, 3, 3, 0, 1, input),
                    std::invalid_argument);
    const std::vector<double> short_input{0.5};
    CHECK_THROWS_AS(identity_proximity(Scheme::Net, 3, 3, 2, 1, short_input),
                    std::invalid_argument);
}
