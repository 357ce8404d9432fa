#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqcnet/ansatz.hpp"
#include "vqcnet/statevector.hpp"
#include "vqcnet/trainer.hpp"

namespace vqcnet {

inline constexpr int kMaxHaarDim = 64;

// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
// R-diagonal phase folded back into Q so the distribution is exactly
// rotation-invariant, not just orthonormal.
Eigen::MatrixXcd haar_unitary(int d, std::mt19937_64& rng);

// Monte-Carlo check of one Haar moment identity against its closed form.
struct LemmaCheckReport {
    int lemma = 0;          // 1, 2, or 3
    int dim = 0;
    std::int64_t samples = 0;
    std::complex<double> estimate{0.0, 0.0};
    std::complex<double> analytic{0.0, 0.0};
    double abs_error = 0.0;
    double rel_error = 0.0;  // abs_error / |analytic|, or abs_error when |analytic| ~ 0
    double std_error = 0.0;  // combined real+imag stderr of the sample mean
    bool conclusive = false; // false when samples < 100: too few for the error bars
    std::string label;       // describes the operator inputs
};

std::complex<double> lemma1_analytic(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                     int d);
std::complex<double> lemma2_analytic(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                     const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& e,
                                     int d);
std::complex<double> lemma3_analytic(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                     const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& e,
                                     int d);

LemmaCheckReport mc_lemma1(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int d,
                           std::int64_t samples, std::mt19937_64& rng,
                           std::string label = {});
LemmaCheckReport mc_lemma2(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                           const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& e, int d,
                           std::int64_t samples, std::mt19937_64& rng,
                           std::string label = {});
LemmaCheckReport mc_lemma3(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                           const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& e, int d,
                           std::int64_t samples, std::mt19937_64& rng,
                           std::string label = {});

// Derivative of Tr[U rho U^dag H] in commutator form, for U = U_L U_R with
// the differentiated gate's generator sigma_op sitting between the halves:
//   (i/2) Tr[[rho_r, sigma_op] h_l]
// where rho_r = U_R rho U_R^dag and h_l = U_L^dag H U_L. Returned complex;
// the imaginary part is an error indicator (exact value is real).
std::complex<double> commutator_derivative(const Eigen::MatrixXcd& rho_r,
                                           const Eigen::MatrixXcd& sigma_op,
                                           const Eigen::MatrixXcd& h_l);

// Sample statistics of one gradient component.
struct VarianceReport {
    int n_qubits = 0;
    int param_index = 0;
    std::int64_t samples = 0;
    double mean = 0.0;
    double variance = 0.0;           // unbiased sample variance
    double std_error = 0.0;          // stderr of the mean
    double variance_std_error = 0.0; // stderr of the variance estimate
    double max_abs_imag = 0.0;       // only populated by the commutator-form check
};

VarianceReport statistics_from_samples(std::span<const double> values, int n_qubits,
                                       int param_index);

// Draws Haar U_R (and U_L unless randomize_left is false) and evaluates the
// commutator-form derivative with sigma acting on `qubit`; the mean over
// draws should vanish. Throws if any sample's imaginary part reaches 1e-10
// or if H is not Hermitian.
VarianceReport zero_mean_gradient_check(int n_qubits, const Eigen::MatrixXcd& rho,
                                        const Eigen::MatrixXcd& h, RotationAxis sigma_axis,
                                        std::int64_t samples, std::mt19937_64& rng,
                                        int qubit = 0, bool randomize_left = true);

struct VarianceScanConfig {
    RotationAxis axis = RotationAxis::Y;
    EntanglerLayout entangler = EntanglerLayout::LinearCnotLadder;
    DepthRule depth_rule = DepthRule::equal();
    std::int64_t samples = 500;
    int param_index = 0;
    std::uint64_t seed = 0;
};

// Per qubit count: sample theta ~ U[0, 2pi]^{nL} and record the
// parameter-shift derivative of the local cost at param_index.
std::vector<VarianceReport> ansatz_variance_scan(std::span<const int> n_values,
                                                 const VarianceScanConfig& config);

// Least-squares slope of ln(variance) against n; a negative value is the
// exponential-decay signature.
double fit_log_variance_slope(std::span<const VarianceReport> reports);

// How far the freshly initialized circuit is from acting as the identity on
// the encoded input: mu = || U(theta) |phi> - |phi> ||, one value per seed.
struct IdentityProximityReport {
    Scheme scheme = Scheme::Net;
    int n_qubits = 0;
    int depth = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<double> mu;
    double mean_mu = 0.0;
    double min_mu = 0.0;
    double max_mu = 0.0;
};

std::vector<double> constant_input(int n_qubits);     // pi/4 everywhere
std::vector<double> alternating_input(int n_qubits);  // pi/4, pi/8, pi/4, ...

IdentityProximityReport identity_proximity(Scheme scheme, int n_qubits, int depth,
                                           int num_seeds, std::uint64_t seed_base,
                                           std::span<const double> input_angles);

}  // namespace vqcnet
