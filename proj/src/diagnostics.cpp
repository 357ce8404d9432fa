#include "vqcnet/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vqcnet/cost.hpp"
#include "vqcnet/dense.hpp"
#include "vqcnet/encoding.hpp"
#include "vqcnet/gradients.hpp"
#include "vqcnet/rng.hpp"

namespace vqcnet {

namespace {

using Eigen::MatrixXcd;

void check_dim(const MatrixXcd& m, int d, const char* name)
{
    if (m.rows() != d || m.cols() != d) {
        throw std::invalid_argument(std::string("lemma check: operator ") + name
                                    + " must be " + std::to_string(d) + "x"
                                    + std::to_string(d));
    }
}

std::complex<double> trace_product(const MatrixXcd& a, const MatrixXcd& b)
{
    // Tr[A B] without forming the full product.
    return (a.array() * b.transpose().array()).sum();
}

// Shared tail of the three mc_lemma* functions: given the per-sample values,
// fill in the estimate, error bars, and the conclusive flag.
LemmaCheckReport finish_report(int lemma, int d, std::vector<std::complex<double>> values,
                               std::complex<double> analytic, std::string label)
{
    const auto n = static_cast<std::int64_t>(values.size());
    std::complex<double> sum{0.0, 0.0};
    for (const auto& v : values) sum += v;
    const std::complex<double> mean = sum / static_cast<double>(n);

    double sq_dev = 0.0;
    for (const auto& v : values) sq_dev += std::norm(v - mean);
    const double variance = sq_dev / static_cast<double>(n - 1);

    LemmaCheckReport report;
    report.lemma = lemma;
    report.dim = d;
    report.samples = n;
    report.estimate = mean;
    report.analytic = analytic;
    report.abs_error = std::abs(mean - analytic);
    report.rel_error = std::abs(analytic) > 1e-12 ? report.abs_error / std::abs(analytic)
                                                  : report.abs_error;
    report.std_error = std::sqrt(variance / static_cast<double>(n));
    report.conclusive = n >= 100;
    report.label = std::move(label);
    return report;
}

void check_mc_args(int d, std::int64_t samples)
{
    if (d < 2 || d > kMaxHaarDim) {
        throw std::invalid_argument("lemma check: dimension must be in [2, "
                                    + std::to_string(kMaxHaarDim) + "], got "
                                    + std::to_string(d));
    }
    if (samples < 2) {
        throw std::invalid_argument("lemma check: need at least 2 samples, got "
                                    + std::to_string(samples));
    }
}

}  // namespace

MatrixXcd haar_unitary(int d, std::mt19937_64& rng)
{
    if (d < 2 || d > kMaxHaarDim) {
        throw std::invalid_argument("haar_unitary: dimension must be in [2, "
                                    + std::to_string(kMaxHaarDim) + "], got "
                                    + std::to_string(d));
    }
    MatrixXcd ginibre(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            const auto [re, im] = normal_pair(rng);
            ginibre(r, c) = std::complex<double>(re, im) / std::numbers::sqrt2;
        }
    }
    Eigen::HouseholderQR<MatrixXcd> qr(ginibre);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(d, d);
    const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the column phases from the R diagonal; without this the QR
    // convention biases the distribution away from Haar.
    for (int c = 0; c < d; ++c) {
        const std::complex<double> diag = r(c, c);
        const double mag = std::abs(diag);
        q.col(c) *= mag > 0.0 ? diag / mag : std::complex<double>(1.0, 0.0);
    }
    return q;
}

std::complex<double> lemma1_analytic(const MatrixXcd& a, const MatrixXcd& b, int d)
{
    return a.trace() * b.trace() / static_cast<double>(d);
}

std::complex<double> lemma2_analytic(const MatrixXcd& a, const MatrixXcd& b,
                                     const MatrixXcd& c, const MatrixXcd& e, int d)
{
    const std::complex<double> ta = a.trace(), tb = b.trace(), tc = c.trace(),
                               te = e.trace();
    const std::complex<double> tac = trace_product(a, c), tbe = trace_product(b, e);
    const double dd = static_cast<double>(d);
    const double dsq_m1 = dd * dd - 1.0;
    return (ta * tc * tbe + tac * tb * te) / dsq_m1
           - (tac * tbe + ta * tb * tc * te) / (dd * dsq_m1);
}

std::complex<double> lemma3_analytic(const MatrixXcd& a, const MatrixXcd& b,
                                     const MatrixXcd& c, const MatrixXcd& e, int d)
{
    const std::complex<double> ta = a.trace(), tb = b.trace(), tc = c.trace(),
                               te = e.trace();
    const std::complex<double> tac = trace_product(a, c), tbe = trace_product(b, e);
    const double dd = static_cast<double>(d);
    const double dsq_m1 = dd * dd - 1.0;
    return (ta * tb * tc * te + tac * tbe) / dsq_m1
           - (tac * tb * te + ta * tc * tbe) / (dd * dsq_m1);
}

LemmaCheckReport mc_lemma1(const MatrixXcd& a, const MatrixXcd& b, int d,
                           std::int64_t samples, std::mt19937_64& rng, std::string label)
{
    check_mc_args(d, samples);
    check_dim(a, d, "A");
    check_dim(b, d, "B");
    std::vector<std::complex<double>> values(static_cast<std::size_t>(samples));
    for (auto& v : values) {
        const MatrixXcd w = haar_unitary(d, rng);
        v = trace_product(w * a * w.adjoint(), b);
    }
    return finish_report(1, d, std::move(values), lemma1_analytic(a, b, d),
                         std::move(label));
}

LemmaCheckReport mc_lemma2(const MatrixXcd& a, const MatrixXcd& b, const MatrixXcd& c,
                           const MatrixXcd& e, int d, std::int64_t samples,
                           std::mt19937_64& rng, std::string label)
{
    check_mc_args(d, samples);
    check_dim(a, d, "A");
    check_dim(b, d, "B");
    check_dim(c, d, "C");
    check_dim(e, d, "D");
    std::vector<std::complex<double>> values(static_cast<std::size_t>(samples));
    for (auto& v : values) {
        const MatrixXcd w = haar_unitary(d, rng);
        const MatrixXcd wa = w * a * w.adjoint();
        const MatrixXcd wc = w * c * w.adjoint();
        v = trace_product(wa * b * wc, e);
    }
    return finish_report(2, d, std::move(values), lemma2_analytic(a, b, c, e, d),
                         std::move(label));
}

LemmaCheckReport mc_lemma3(const MatrixXcd& a, const MatrixXcd& b, const MatrixXcd& c,
                           const MatrixXcd& e, int d, std::int64_t samples,
                           std::mt19937_64& rng, std::string label)
{
    check_mc_args(d, samples);
    check_dim(a, d, "A");
    check_dim(b, d, "B");
    check_dim(c, d, "C");
    check_dim(e, d, "D");
    std::vector<std::complex<double>> values(static_cast<std::size_t>(samples));
    for (auto& v : values) {
        const MatrixXcd w = haar_unitary(d, rng);
        v = trace_product(w * a * w.adjoint(), b) * trace_product(w * c * w.adjoint(), e);
    }
    return finish_report(3, d, std::move(values), lemma3_analytic(a, b, c, e, d),
                         std::move(label));
}

std::complex<double> commutator_derivative(const MatrixXcd& rho_r,
                                           const MatrixXcd& sigma_op,
                                           const MatrixXcd& h_l)
{
    const MatrixXcd commutator = rho_r * sigma_op - sigma_op * rho_r;
    return std::complex<double>(0.0, 0.5) * trace_product(commutator, h_l);
}

VarianceReport statistics_from_samples(std::span<const double> values, int n_qubits,
                                       int param_index)
{
    if (values.size() < 2) {
        throw std::invalid_argument("statistics_from_samples: need at least 2 samples");
    }
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;

    double m2 = 0.0;
    double m4 = 0.0;
    for (double v : values) {
        const double dev = v - mean;
        m2 += dev * dev;
        m4 += dev * dev * dev * dev;
    }
    const double variance = m2 / (n - 1.0);
    m4 /= n;

    VarianceReport report;
    report.n_qubits = n_qubits;
    report.param_index = param_index;
    report.samples = static_cast<std::int64_t>(values.size());
    report.mean = mean;
    report.variance = variance;
    report.std_error = std::sqrt(variance / n);
    // stderr of the unbiased variance estimator via the fourth central moment
    const double var_of_var = m4 / n - variance * variance * (n - 3.0) / (n * (n - 1.0));
    report.variance_std_error = std::sqrt(std::max(0.0, var_of_var));
    return report;
}

VarianceReport zero_mean_gradient_check(int n_qubits, const MatrixXcd& rho,
                                        const MatrixXcd& h, RotationAxis sigma_axis,
                                        std::int64_t samples, std::mt19937_64& rng,
                                        int qubit, bool randomize_left)
{
    if (n_qubits < 1 || n_qubits > 4) {
        throw std::invalid_argument("zero_mean_gradient_check: n_qubits must be in [1, 4]");
    }
    if (samples < 2) {
        throw std::invalid_argument("zero_mean_gradient_check: need at least 2 samples");
    }
    if (qubit < 0 || qubit >= n_qubits) {
        throw std::out_of_range("zero_mean_gradient_check: qubit out of range");
    }
    const int d = 1 << n_qubits;
    check_dim(rho, d, "rho");
    check_dim(h, d, "H");
    if (!is_hermitian(h)) {
        throw std::invalid_argument("zero_mean_gradient_check: H must be Hermitian");
    }

    const MatrixXcd sigma_full = embed_one_qubit(dense_pauli(sigma_axis), qubit, n_qubits);
    std::vector<double> derivs(static_cast<std::size_t>(samples));
    double max_abs_imag = 0.0;
    for (auto& out : derivs) {
        const MatrixXcd u_r = haar_unitary(d, rng);
        const MatrixXcd rho_r = u_r * rho * u_r.adjoint();
        MatrixXcd h_l;
        if (randomize_left) {
            const MatrixXcd u_l = haar_unitary(d, rng);
            h_l = u_l.adjoint() * h * u_l;
        } else {
            h_l = h;
        }
        const std::complex<double> deriv = commutator_derivative(rho_r, sigma_full, h_l);
        max_abs_imag = std::max(max_abs_imag, std::abs(deriv.imag()));
        if (std::abs(deriv.imag()) >= 1e-10) {
            throw std::runtime_error(
                "zero_mean_gradient_check: derivative sample has imaginary part "
                + std::to_string(deriv.imag()));
        }
        out = deriv.real();
    }

    VarianceReport report = statistics_from_samples(derivs, n_qubits, qubit);
    report.max_abs_imag = max_abs_imag;
    return report;
}

std::vector<VarianceReport> ansatz_variance_scan(std::span<const int> n_values,
                                                 const VarianceScanConfig& config)
{
    if (n_values.empty()) {
        throw std::invalid_argument("variance scan: no qubit counts given");
    }
    if (config.samples < 2) {
        throw std::invalid_argument("variance scan: need at least 2 samples");
    }
    if (config.param_index < 0) {
        throw std::invalid_argument("variance scan: param_index must be non-negative");
    }

    std::vector<VarianceReport> reports;
    reports.reserve(n_values.size());
    for (int n : n_values) {
        AnsatzSpec spec;
        spec.n_qubits = n;
        spec.depth = config.depth_rule.depth_for(n);
        spec.axis = config.axis;
        spec.entangler = config.entangler;
        if (config.param_index >= param_count(spec)) {
            throw std::invalid_argument("variance scan: param_index "
                                        + std::to_string(config.param_index)
                                        + " out of range for n=" + std::to_string(n));
        }

        CircuitEvaluator eval(zero_state(n), spec);
        auto rng = make_stream(config.seed, "variance-scan-n" + std::to_string(n));
        const std::size_t p = static_cast<std::size_t>(param_count(spec));
        const auto k = static_cast<std::size_t>(config.param_index);

        std::vector<double> derivs(static_cast<std::size_t>(config.samples));
        std::vector<double> theta(p);
        for (auto& out : derivs) {
            for (double& t : theta) t = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
            const double saved = theta[k];
            theta[k] = saved + std::numbers::pi / 2.0;
            const double plus = eval(theta);
            theta[k] = saved - std::numbers::pi / 2.0;
            const double minus = eval(theta);
            theta[k] = saved;
            out = (plus - minus) / 2.0;
        }
        reports.push_back(statistics_from_samples(derivs, n, config.param_index));
    }
    return reports;
}

double fit_log_variance_slope(std::span<const VarianceReport> reports)
{
    if (reports.size() < 2) {
        throw std::invalid_argument("slope fit: need at least 2 scan points");
    }
    double sx = 0.0, sy = 0.0;
    for (const VarianceReport& r : reports) {
        if (!(r.variance > 0.0)) {
            throw std::invalid_argument("slope fit: variance must be positive at n="
                                        + std::to_string(r.n_qubits));
        }
        sx += r.n_qubits;
        sy += std::log(r.variance);
    }
    const double n = static_cast<double>(reports.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const VarianceReport& r : reports) {
        const double dx = r.n_qubits - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(r.variance) - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("slope fit: all scan points share the same n");
    }
    return sxy / sxx;
}

std::vector<double> constant_input(int n_qubits)
{
    return std::vector<double>(static_cast<std::size_t>(n_qubits), std::numbers::pi / 4.0);
}

std::vector<double> alternating_input(int n_qubits)
{
    std::vector<double> angles(static_cast<std::size_t>(n_qubits));
    for (std::size_t j = 0; j < angles.size(); ++j) {
        angles[j] = (j % 2 == 0) ? std::numbers::pi / 4.0 : std::numbers::pi / 8.0;
    }
    return angles;
}

IdentityProximityReport identity_proximity(Scheme scheme, int n_qubits, int depth,
                                           int num_seeds, std::uint64_t seed_base,
                                           std::span<const double> input_angles)
{
    if (num_seeds < 1) {
        throw std::invalid_argument("identity proximity: need at least 1 seed");
    }
    if (static_cast<int>(input_angles.size()) != n_qubits) {
        throw std::invalid_argument("identity proximity: expected "
                                    + std::to_string(n_qubits) + " input angles, got "
                                    + std::to_string(input_angles.size()));
    }

    AnsatzSpec spec;
    spec.n_qubits = n_qubits;
    spec.depth = depth;
    const StateVector phi = qubit_encode(input_angles);

    IdentityProximityReport report;
    report.scheme = scheme;
    report.n_qubits = n_qubits;
    report.depth = depth;
    report.seeds.reserve(static_cast<std::size_t>(num_seeds));
    report.mu.reserve(static_cast<std::size_t>(num_seeds));

    double sum = 0.0;
    for (int i = 0; i < num_seeds; ++i) {
        const std::uint64_t seed = seed_base + static_cast<std::uint64_t>(i);
        const std::vector<double> theta =
            initial_circuit_parameters(scheme, n_qubits, depth, seed);
        StateVector evolved = phi;
        apply_ansatz(evolved, spec, theta);
        const double mu = norm_of_difference(evolved, phi);
        report.seeds.push_back(seed);
        report.mu.push_back(mu);
        sum += mu;
    }
    report.mean_mu = sum / num_seeds;
    report.min_mu = *std::min_element(report.mu.begin(), report.mu.end());
    report.max_mu = *std::max_element(report.mu.begin(), report.mu.end());
    return report;
}

}  // namespace vqcnet
