// Python face of the library: thin wrappers that parse the string enums,
// run the core routines, and hand results back as plain dicts and numpy
// arrays. Heavy calls drop the GIL; nothing here calls back into python.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqcnet/ansatz.hpp"
#include "vqcnet/diagnostics.hpp"
#include "vqcnet/cost.hpp"
#include "vqcnet/encoding.hpp"
#include "vqcnet/gradients.hpp"
#include "vqcnet/mlp.hpp"
#include "vqcnet/rng.hpp"
#include "vqcnet/statevector.hpp"
#include "vqcnet/trainer.hpp"

namespace py = pybind11;

namespace {

using namespace vqcnet;

Eigen::VectorXcd amplitudes_of(const StateVector& state)
{
    Eigen::VectorXcd v(static_cast<Eigen::Index>(state.dim()));
    for (std::size_t i = 0; i < state.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = state[i];
    }
    return v;
}

StateVector state_from(const Eigen::VectorXcd& amplitudes)
{
    const auto dim = static_cast<std::size_t>(amplitudes.size());
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    std::vector<Complex> amps(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        amps[i] = amplitudes(static_cast<Eigen::Index>(i));
    }
    return StateVector(n, std::move(amps));
}

AnsatzSpec spec_from(int qubits, int depth, const std::string& axis,
                     const std::string& entangler)
{
    return AnsatzSpec{qubits, depth, parse_rotation_axis(axis),
                      parse_entangler(entangler)};
}

StateVector input_state(int qubits, const std::optional<std::vector<double>>& angles)
{
    if (!angles) return training_input_state(qubits);
    if (static_cast<int>(angles->size()) != qubits) {
        throw std::invalid_argument("input_angles must hold one angle per qubit");
    }
    return qubit_encode(*angles);
}

py::dict run_to_dict(const RunResult& result)
{
    py::dict d;
    d["reached"] = result.reached;
    d["epochs_to_target"] = result.epochs_to_target;
    d["final_cost"] = result.final_cost;
    d["cost_evaluations"] = result.cost_evaluations;
    d["final_theta"] = result.final_theta;
    py::list trajectory;
    for (const auto& [epoch, cost] : result.trajectory) {
        trajectory.append(py::make_tuple(epoch, cost));
    }
    d["trajectory"] = trajectory;
    return d;
}

py::dict lemma_to_dict(const LemmaCheckReport& report)
{
    py::dict d;
    d["lemma"] = report.lemma;
    d["dim"] = report.dim;
    d["samples"] = report.samples;
    d["estimate"] = report.estimate;
    d["analytic"] = report.analytic;
    d["abs_error"] = report.abs_error;
    d["rel_error"] = report.rel_error;
    d["std_error"] = report.std_error;
    d["conclusive"] = report.conclusive;
    return d;
}

py::dict variance_to_dict(const VarianceReport& report)
{
    py::dict d;
    d["qubits"] = report.n_qubits;
    d["param_index"] = report.param_index;
    d["samples"] = report.samples;
    d["mean"] = report.mean;
    d["variance"] = report.variance;
    d["std_error"] = report.std_error;
    d["variance_std_error"] = report.variance_std_error;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Layered-circuit training core: encoding, costs, parameter-shift "
              "gradients, network-generated parameters, and the flat-gradient "
              "diagnostics.";

    m.attr("ALPHA_DIM") = kAlphaDim;
    m.attr("MAX_QUBITS") = kMaxQubits;

    m.def(
        "encode",
        [](const std::vector<double>& angles) {
            return amplitudes_of(qubit_encode(angles));
        },
        py::arg("angles"),
        "Product-state amplitudes of cos(a_j)|0> + sin(a_j)|1> per qubit.");

    m.def(
        "training_input",
        [](int qubits) { return amplitudes_of(training_input_state(qubits)); },
        py::arg("qubits"), "Amplitudes of the fixed pi/4-per-qubit training input.");

    m.def(
        "local_cost",
        [](const Eigen::VectorXcd& amplitudes) {
            return local_cost(state_from(amplitudes));
        },
        py::arg("amplitudes"),
        "One minus the mean per-qubit probability of |0> for the given state.");

    m.def(
        "circuit_state",
        [](const std::vector<double>& theta, int qubits, int depth,
           const std::string& axis, const std::string& entangler,
           const std::optional<std::vector<double>>& input_angles) {
            StateVector state = input_state(qubits, input_angles);
            apply_ansatz(state, spec_from(qubits, depth, axis, entangler), theta);
            return amplitudes_of(state);
        },
        py::arg("theta"), py::arg("qubits"), py::arg("depth"), py::arg("axis") = "y",
        py::arg("entangler") = "linear-cnot-ladder",
        py::arg("input_angles") = std::nullopt,
        "Amplitudes after the layered circuit; the input defaults to the "
        "training state.");

    m.def(
        "circuit_cost",
        [](const std::vector<double>& theta, int qubits, int depth,
           const std::string& axis, const std::string& entangler,
           const std::optional<std::vector<double>>& input_angles) {
            const CircuitEvaluator eval(input_state(qubits, input_angles),
                                        spec_from(qubits, depth, axis, entangler));
            return eval(theta);
        },
        py::arg("theta"), py::arg("qubits"), py::arg("depth"), py::arg("axis") = "y",
        py::arg("entangler") = "linear-cnot-ladder",
        py::arg("input_angles") = std::nullopt,
        "Local cost of the circuit output for one parameter vector.");

    m.def(
        "circuit_gradient",
        [](const std::vector<double>& theta, int qubits, int depth,
           const std::string& axis, const std::string& entangler,
           const std::optional<std::vector<double>>& input_angles) {
            const CircuitEvaluator eval(input_state(qubits, input_angles),
                                        spec_from(qubits, depth, axis, entangler));
            return param_shift_grad(eval, theta);
        },
        py::arg("theta"), py::arg("qubits"), py::arg("depth"), py::arg("axis") = "y",
        py::arg("entangler") = "linear-cnot-ladder",
        py::arg("input_angles") = std::nullopt,
        "Parameter-shift gradient of the local cost, one entry per theta.");

    m.def(
        "network_theta",
        [](const std::string& scheme, int qubits, int depth, std::uint64_t seed) {
            return initial_circuit_parameters(parse_scheme(scheme), qubits, depth,
                                              seed);
        },
        py::arg("scheme"), py::arg("qubits"), py::arg("depth"), py::arg("seed") = 0,
        "Circuit parameters at startup: a fresh uniform draw for 'net', the "
        "network's first output for the model schemes.");

    m.def(
        "train",
        [](const std::string& scheme, int qubits, int depth, double eta, double target,
           int max_epochs, std::uint64_t seed, const std::string& axis,
           const std::string& entangler) {
            TrainConfig config;
            config.scheme = parse_scheme(scheme);
            config.n_qubits = qubits;
            config.depth = depth;
            config.eta = eta;
            config.target_cost = target;
            config.max_epochs = max_epochs;
            config.seed = seed;
            config.axis = parse_rotation_axis(axis);
            config.entangler = parse_entangler(entangler);
            RunResult result;
            {
                py::gil_scoped_release release;
                result = train(config);
            }
            return run_to_dict(result);
        },
        py::arg("scheme"), py::arg("qubits"), py::arg("depth"), py::arg("eta") = 0.1,
        py::arg("target") = 0.001, py::arg("max_epochs") = 10000, py::arg("seed") = 0,
        py::arg("axis") = "y", py::arg("entangler") = "linear-cnot-ladder",
        "Gradient-descent run to the target cost; returns the trajectory and "
        "final parameters.");

    m.def(
        "sweep",
        [](const std::vector<std::string>& schemes, const std::vector<int>& qubits,
           const std::string& depth_rule, int reps, double eta, double target,
           int max_epochs, std::uint64_t seed_base, int threads) {
            std::vector<Scheme> parsed;
            parsed.reserve(schemes.size());
            for (const std::string& name : schemes) parsed.push_back(parse_scheme(name));
            const DepthRule rule = DepthRule::parse(depth_rule);
            TrainConfig base;
            base.eta = eta;
            base.target_cost = target;
            base.max_epochs = max_epochs;
            base.seed = seed_base;
            SweepResult result;
            {
                py::gil_scoped_release release;
                result = run_sweep(parsed, qubits, rule, reps, base, threads);
            }
            py::list rows;
            for (const RunRow& row : result.rows) {
                py::dict d;
                d["scheme"] = scheme_name(row.scheme);
                d["qubits"] = row.n_qubits;
                d["depth"] = row.depth;
                d["eta"] = row.eta;
                d["target"] = row.target;
                d["seed"] = row.seed;
                d["reached"] = row.reached;
                d["epochs"] = row.epochs;
                rows.append(d);
            }
            py::list cells;
            for (const SweepCell& cell : result.cells) {
                py::dict d;
                d["scheme"] = scheme_name(cell.scheme);
                d["qubits"] = cell.n_qubits;
                d["depth"] = cell.depth;
                d["reps"] = cell.reps;
                d["reached"] = cell.reached_count;
                d["failures"] = cell.failures;
                d["mean_epochs"] = cell.mean_epochs;
                d["min_epochs"] = cell.min_epochs;
                d["max_epochs"] = cell.max_epochs;
                cells.append(d);
            }
            py::dict out;
            out["rows"] = rows;
            out["cells"] = cells;
            return out;
        },
        py::arg("schemes"), py::arg("qubits"), py::arg("depth_rule") = "equal",
        py::arg("reps") = 10, py::arg("eta") = 0.1, py::arg("target") = 0.001,
        py::arg("max_epochs") = 10000, py::arg("seed_base") = 0, py::arg("threads") = 1,
        "Scheme-by-size training grid; per-run rows plus per-cell epoch "
        "statistics over the runs that reached the target.");

    m.def(
        "variance_scan",
        [](const std::vector<int>& qubits, std::int64_t samples, std::uint64_t seed,
           const std::string& depth_rule, const std::string& axis,
           const std::string& entangler, int param_index) {
            VarianceScanConfig config;
            config.axis = parse_rotation_axis(axis);
            config.entangler = parse_entangler(entangler);
            config.depth_rule = DepthRule::parse(depth_rule);
            config.samples = samples;
            config.param_index = param_index;
            config.seed = seed;
            std::vector<VarianceReport> reports;
            double slope = 0.0;
            {
                py::gil_scoped_release release;
                reports = ansatz_variance_scan(qubits, config);
                slope = qubits.size() >= 2 ? fit_log_variance_slope(reports) : 0.0;
            }
            py::list rows;
            for (const VarianceReport& report : reports) {
                rows.append(variance_to_dict(report));
            }
            py::dict out;
            out["rows"] = rows;
            out["log_variance_slope"] = slope;
            return out;
        },
        py::arg("qubits"), py::arg("samples") = 500, py::arg("seed") = 0,
        py::arg("depth_rule") = "equal", py::arg("axis") = "y",
        py::arg("entangler") = "linear-cnot-ladder", py::arg("param_index") = 0,
        "Variance of one gradient component over random parameter draws, per "
        "qubit count, with the fitted ln-variance slope.");

    m.def(
        "haar_unitary",
        [](int dim, std::uint64_t seed) {
            auto rng = make_stream(seed, "py-haar");
            return haar_unitary(dim, rng);
        },
        py::arg("dim"), py::arg("seed") = 0,
        "One Haar-distributed unitary as a complex matrix.");

    m.def(
        "lemma1",
        [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, std::int64_t samples,
           std::uint64_t seed) {
            auto rng = make_stream(seed, "py-lemma-mc");
            LemmaCheckReport report;
            {
                py::gil_scoped_release release;
                report = mc_lemma1(a, b, static_cast<int>(a.rows()), samples, rng);
            }
            return lemma_to_dict(report);
        },
        py::arg("a"), py::arg("b"), py::arg("samples") = 100000, py::arg("seed") = 0,
        "Monte-Carlo estimate of E[Tr(UAU^t B)] against its closed form.");

    m.def(
        "lemma2",
        [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
           const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& e, std::int64_t samples,
           std::uint64_t seed) {
            auto rng = make_stream(seed, "py-lemma-mc");
            LemmaCheckReport report;
            {
                py::gil_scoped_release release;
                report = mc_lemma2(a, b, c, e, static_cast<int>(a.rows()), samples, rng);
            }
            return lemma_to_dict(report);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("e"),
        py::arg("samples") = 200000, py::arg("seed") = 0,
        "Monte-Carlo estimate of E[Tr(UAU^t B UCU^t E)] against its closed form.");

    m.def(
        "lemma3",
        [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
           const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& e, std::int64_t samples,
           std::uint64_t seed) {
            auto rng = make_stream(seed, "py-lemma-mc");
            LemmaCheckReport report;
            {
                py::gil_scoped_release release;
                report = mc_lemma3(a, b, c, e, static_cast<int>(a.rows()), samples, rng);
            }
            return lemma_to_dict(report);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("e"),
        py::arg("samples") = 200000, py::arg("seed") = 0,
        "Monte-Carlo estimate of E[Tr(UAU^t B) Tr(UCU^t E)] against its closed "
        "form.");

    m.def(
        "identity_proximity",
        [](const std::string& scheme, int qubits, int depth, int seeds,
           std::uint64_t seed_base, const std::string& input) {
            std::vector<double> angles;
            if (input == "constant") {
                angles = constant_input(qubits);
            } else if (input == "alternating") {
                angles = alternating_input(qubits);
            } else {
                throw std::invalid_argument(
                    "input must be 'constant' or 'alternating'");
            }
            IdentityProximityReport report;
            {
                py::gil_scoped_release release;
                report = identity_proximity(parse_scheme(scheme), qubits, depth, seeds,
                                            seed_base, angles);
            }
            py::dict d;
            d["scheme"] = scheme_name(report.scheme);
            d["qubits"] = report.n_qubits;
            d["depth"] = report.depth;
            d["seeds"] = report.seeds;
            d["mu"] = report.mu;
            d["mean_mu"] = report.mean_mu;
            d["min_mu"] = report.min_mu;
            d["max_mu"] = report.max_mu;
            return d;
        },
        py::arg("scheme"), py::arg("qubits"), py::arg("depth"), py::arg("seeds") = 10,
        py::arg("seed_base") = 0, py::arg("input") = "alternating",
        "Distance || U(theta)|phi> - |phi> || of freshly initialized circuits "
        "from the identity, one value per seed.");
}
