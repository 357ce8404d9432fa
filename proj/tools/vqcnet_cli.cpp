// Command-line front end: training runs, epoch sweeps, gradient-variance
// scans, Haar-lemma checks, and identity-proximity studies, all persisted as
// plot-ready CSV plus a JSON summary.

#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vqcnet/diagnostics.hpp"
#include "vqcnet/io.hpp"
#include "vqcnet/rng.hpp"
#include "vqcnet/trainer.hpp"

namespace {

using nlohmann::json;
using namespace vqcnet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotReached = 2;

// Distinguishes bad invocations (exit 1) from genuine runtime failures.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int_strict(const std::string& text)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw UsageError("'" + text + "' is not an integer");
    }
    if (used != text.size()) throw UsageError("'" + text + "' is not an integer");
    return value;
}

// Accepts "4", "2:10", "2:10:2", or a comma list "2,4,6".
std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> values;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = text.find(',', start);
            const std::size_t end = comma == std::string::npos ? text.size() : comma;
            values.push_back(parse_int_strict(text.substr(start, end - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return values;
    }
    const std::size_t first = text.find(':');
    if (first == std::string::npos) {
        values.push_back(parse_int_strict(text));
        return values;
    }
    const std::size_t second = text.find(':', first + 1);
    const int lo = parse_int_strict(text.substr(0, first));
    const int hi = parse_int_strict(
        text.substr(first + 1, (second == std::string::npos ? text.size() : second)
                                   - first - 1));
    const int step =
        second == std::string::npos ? 1 : parse_int_strict(text.substr(second + 1));
    if (step < 1) throw UsageError("range step must be >= 1 in '" + text + "'");
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    for (int v = lo; v <= hi; v += step) values.push_back(v);
    return values;
}

std::vector<Scheme> parse_scheme_list(const std::string& text)
{
    std::vector<Scheme> schemes;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        const std::string name = text.substr(start, end - start);
        if (!name.empty()) schemes.push_back(parse_scheme(name));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return schemes;
}

// Fills flag variables from a flat JSON config; values given on the command
// line win over the file.
class FlagMerger {
public:
    FlagMerger(CLI::App& cmd, const json& config) : cmd_(cmd), config_(config) {}

    template <typename T>
    void merge(const std::string& key, T& var) const
    {
        if (!config_.contains(key)) return;
        if (cmd_.count("--" + key) > 0) return;
        try {
            var = config_.at(key).get<T>();
        } catch (const json::exception&) {
            throw UsageError("config key '" + key + "' has the wrong type");
        }
    }

private:
    CLI::App& cmd_;
    const json& config_;
};

json maybe_config(const std::string& path)
{
    if (path.empty()) return json::object();
    try {
        return load_flat_config(path);
    } catch (const std::runtime_error& err) {
        throw UsageError(err.what());
    }
}

void check_config_keys(const json& config, std::initializer_list<std::string_view> keys)
{
    const std::vector<std::string_view> allowed(keys);
    try {
        reject_unknown_keys(config, allowed);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const
    {
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        return elapsed.count();
    }
};

// Wall-clock data is never written into the deterministic outputs; callers
// opt in and it lands in a clearly separated summary block.
void attach_timings(json& summary, bool enabled, const Timer& timer)
{
    if (!enabled) return;
    summary["timings"] = {{"wall_seconds", timer.seconds()},
                          {"timestamp", iso_timestamp()}};
}

// ---------------------------------------------------------------- train ---

struct TrainArgs {
    std::string scheme;
    int qubits = 2;
    int depth = 0;  // 0 means "same as qubit count"
    double eta = 0.1;
    double target = 0.001;
    int max_epochs = 10000;
    std::uint64_t seed = 0;
    std::string axis = "y";
    std::string entangler = "linear-cnot-ladder";
    std::string out;
    std::string config_path;
    bool timings = false;
};

int run_train(CLI::App& cmd, TrainArgs& args)
{
    const json config = maybe_config(args.config_path);
    check_config_keys(config, {"scheme", "qubits", "depth", "eta", "target", "max-epochs",
                               "seed", "axis", "entangler", "out", "timings"});
    const FlagMerger merger(cmd, config);
    merger.merge("scheme", args.scheme);
    merger.merge("qubits", args.qubits);
    merger.merge("depth", args.depth);
    merger.merge("eta", args.eta);
    merger.merge("target", args.target);
    merger.merge("max-epochs", args.max_epochs);
    merger.merge("seed", args.seed);
    merger.merge("axis", args.axis);
    merger.merge("entangler", args.entangler);
    merger.merge("out", args.out);
    merger.merge("timings", args.timings);

    if (args.scheme.empty()) throw UsageError("--scheme is required");
    if (args.out.empty()) args.out = default_out_dir();

    TrainConfig train_config;
    try {
        train_config.scheme = parse_scheme(args.scheme);
        train_config.axis = parse_rotation_axis(args.axis);
        train_config.entangler = parse_entangler(args.entangler);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
    train_config.n_qubits = args.qubits;
    train_config.depth = args.depth == 0 ? args.qubits : args.depth;
    train_config.eta = args.eta;
    train_config.target_cost = args.target;
    train_config.max_epochs = args.max_epochs;
    train_config.seed = args.seed;

    Timer timer;
    RunResult result;
    try {
        result = train(train_config);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }

    const std::filesystem::path out_dir(args.out);
    ensure_dir(out_dir);
    write_text_file(out_dir / "trajectory.csv", trajectory_csv(result));

    json summary = {{"schema_version", kSchemaVersion},
                    {"command", "train"},
                    {"scheme", scheme_name(train_config.scheme)},
                    {"n_qubits", train_config.n_qubits},
                    {"depth", train_config.depth},
                    {"eta", train_config.eta},
                    {"target", train_config.target_cost},
                    {"max_epochs", train_config.max_epochs},
                    {"seed", train_config.seed},
                    {"axis", axis_name(train_config.axis)},
                    {"entangler", entangler_name(train_config.entangler)},
                    {"reached", result.reached},
                    {"epochs_to_target", result.epochs_to_target},
                    {"final_cost", result.final_cost},
                    {"cost_evaluations", result.cost_evaluations},
                    {"trajectory_len", result.trajectory.size()}};
    attach_timings(summary, args.timings, timer);
    write_json_file(out_dir / "summary.json", summary);

    std::cout << "train " << scheme_name(train_config.scheme) << " n="
              << train_config.n_qubits << " L=" << train_config.depth
              << (result.reached
                      ? " reached target in " + std::to_string(result.epochs_to_target)
                            + " epochs"
                      : " did not reach target in "
                            + std::to_string(train_config.max_epochs) + " epochs")
              << ", final cost " << g17(result.final_cost) << "\n";
    std::cout << "wrote " << (out_dir / "trajectory.csv").string() << " and "
              << (out_dir / "summary.json").string() << "\n";
    return result.reached ? kExitOk : kExitNotReached;
}

// ---------------------------------------------------------------- sweep ---

struct SweepArgs {
    std::string schemes;
    std::string qubits_range;
    std::string depth_rule = "equal";
    double target = 0.001;
    int reps = 10;
    double eta = 0.1;
    int max_epochs = 10000;
    std::uint64_t seed_base = 0;
    int threads = 1;
    std::string label = "sweep";
    std::string out;
    std::string config_path;
    bool timings = false;
};

int run_sweep_cmd(CLI::App& cmd, SweepArgs& args)
{
    const json config = maybe_config(args.config_path);
    check_config_keys(config,
                      {"schemes", "qubits-range", "depth-rule", "target", "reps", "eta",
                       "max-epochs", "seed-base", "threads", "label", "out", "timings"});
    const FlagMerger merger(cmd, config);
    merger.merge("schemes", args.schemes);
    merger.merge("qubits-range", args.qubits_range);
    merger.merge("depth-rule", args.depth_rule);
    merger.merge("target", args.target);
    merger.merge("reps", args.reps);
    merger.merge("eta", args.eta);
    merger.merge("max-epochs", args.max_epochs);
    merger.merge("seed-base", args.seed_base);
    merger.merge("threads", args.threads);
    merger.merge("label", args.label);
    merger.merge("out", args.out);
    merger.merge("timings", args.timings);

    if (args.qubits_range.empty()) throw UsageError("--qubits-range is required");
    if (args.out.empty()) args.out = default_out_dir();

    std::vector<Scheme> schemes;
    std::vector<int> n_values;
    DepthRule rule;
    try {
        schemes = parse_scheme_list(args.schemes);
        n_values = parse_int_list(args.qubits_range);
        rule = DepthRule::parse(args.depth_rule);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
    if (schemes.empty()) throw UsageError("--schemes must name at least one scheme");

    TrainConfig base;
    base.eta = args.eta;
    base.target_cost = args.target;
    base.max_epochs = args.max_epochs;
    base.seed = args.seed_base;

    Timer timer;
    SweepResult result;
    try {
        result = run_sweep(schemes, n_values, rule, args.reps, base, args.threads);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }

    const std::filesystem::path out_dir(args.out);
    ensure_dir(out_dir);
    write_text_file(out_dir / "records.csv", records_csv(result.rows, args.label));
    write_text_file(out_dir / "aggregate.csv", aggregate_csv(result.cells));

    json cells = json::array();
    for (const SweepCell& cell : result.cells) {
        cells.push_back({{"scheme", scheme_name(cell.scheme)},
                         {"n_qubits", cell.n_qubits},
                         {"depth", cell.depth},
                         {"reps", cell.reps},
                         {"reached", cell.reached_count},
                         {"failures", cell.failures},
                         {"mean_epochs", cell.mean_epochs},
                         {"min_epochs", cell.min_epochs},
                         {"max_epochs", cell.max_epochs}});
        std::cout << "sweep " << scheme_name(cell.scheme) << " n=" << cell.n_qubits
                  << " L=" << cell.depth << ": reached " << cell.reached_count << "/"
                  << cell.reps << ", mean epochs " << g17(cell.mean_epochs) << "\n";
    }
    json summary = {{"schema_version", kSchemaVersion},
                    {"command", "sweep"},
                    {"label", args.label},
                    {"depth_rule", rule.name()},
                    {"target", args.target},
                    {"reps", args.reps},
                    {"eta", args.eta},
                    {"max_epochs", args.max_epochs},
                    {"seed_base", args.seed_base},
                    {"cells", cells}};
    attach_timings(summary, args.timings, timer);
    write_json_file(out_dir / "summary.json", summary);

    std::cout << "wrote " << (out_dir / "records.csv").string() << ", "
              << (out_dir / "aggregate.csv").string() << ", "
              << (out_dir / "summary.json").string() << "\n";
    return kExitOk;
}

// ------------------------------------------------------------- variance ---

struct VarianceArgs {
    std::string qubits_range;
    std::string depth_rule = "equal";
    std::int64_t samples = 500;
    int param_index = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string config_path;
    bool timings = false;
};

int run_variance(CLI::App& cmd, VarianceArgs& args)
{
    const json config = maybe_config(args.config_path);
    check_config_keys(config, {"qubits-range", "depth-rule", "samples", "param-index",
                               "seed", "out", "timings"});
    const FlagMerger merger(cmd, config);
    merger.merge("qubits-range", args.qubits_range);
    merger.merge("depth-rule", args.depth_rule);
    merger.merge("samples", args.samples);
    merger.merge("param-index", args.param_index);
    merger.merge("seed", args.seed);
    merger.merge("out", args.out);
    merger.merge("timings", args.timings);

    if (args.qubits_range.empty()) throw UsageError("--qubits-range is required");
    if (args.samples < 2) throw UsageError("--samples must be at least 2");
    if (args.out.empty()) args.out = default_out_dir();

    VarianceScanConfig scan;
    std::vector<int> n_values;
    try {
        n_values = parse_int_list(args.qubits_range);
        scan.depth_rule = DepthRule::parse(args.depth_rule);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
    scan.samples = args.samples;
    scan.param_index = args.param_index;
    scan.seed = args.seed;

    Timer timer;
    std::vector<VarianceReport> reports;
    double slope = 0.0;
    try {
        reports = ansatz_variance_scan(n_values, scan);
        slope = n_values.size() >= 2 ? fit_log_variance_slope(reports) : 0.0;
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }

    const std::filesystem::path out_dir(args.out);
    ensure_dir(out_dir);
    write_text_file(out_dir / "variance.csv", variance_csv(reports));

    json rows = json::array();
    for (const VarianceReport& report : reports) {
        rows.push_back({{"n_qubits", report.n_qubits},
                        {"param_index", report.param_index},
                        {"samples", report.samples},
                        {"mean", report.mean},
                        {"variance", report.variance},
                        {"std_error", report.std_error},
                        {"variance_std_error", report.variance_std_error}});
        std::cout << "variance n=" << report.n_qubits << ": Var(dC/dtheta_"
                  << report.param_index << ") = " << g17(report.variance) << " (mean "
                  << g17(report.mean) << ", stderr " << g17(report.std_error) << ")\n";
    }
    json summary = {{"schema_version", kSchemaVersion},
                    {"command", "variance"},
                    {"depth_rule", args.depth_rule},
                    {"samples", args.samples},
                    {"param_index", args.param_index},
                    {"seed", args.seed},
                    {"log_variance_slope", slope},
                    {"rows", rows}};
    attach_timings(summary, args.timings, timer);
    write_json_file(out_dir / "summary.json", summary);

    std::cout << "fitted ln-variance slope vs n: " << g17(slope) << "\n";
    std::cout << "wrote " << (out_dir / "variance.csv").string() << " and "
              << (out_dir / "summary.json").string() << "\n";
    return kExitOk;
}

// --------------------------------------------------------------- lemmas ---

struct LemmasArgs {
    int dim = 2;
    std::int64_t samples = 100000;
    std::uint64_t seed = 0;
    std::string out;
    std::string config_path;
    bool timings = false;
};

Eigen::MatrixXcd random_hermitian(int d, std::mt19937_64& rng)
{
    Eigen::MatrixXcd g(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            const auto [re, im] = normal_pair(rng);
            g(r, c) = std::complex<double>(re, im);
        }
    }
    return (g + g.adjoint()) / 2.0;
}

int run_lemmas(CLI::App& cmd, LemmasArgs& args)
{
    const json config = maybe_config(args.config_path);
    check_config_keys(config, {"dim", "samples", "seed", "out", "timings"});
    const FlagMerger merger(cmd, config);
    merger.merge("dim", args.dim);
    merger.merge("samples", args.samples);
    merger.merge("seed", args.seed);
    merger.merge("out", args.out);
    merger.merge("timings", args.timings);

    if (args.dim < 2) throw UsageError("--dim must be at least 2");
    if (args.dim > kMaxHaarDim) {
        throw UsageError("--dim must be at most " + std::to_string(kMaxHaarDim));
    }
    if (args.samples < 2) throw UsageError("--samples must be at least 2");
    if (args.out.empty()) args.out = default_out_dir();

    const int d = args.dim;
    using Eigen::MatrixXcd;
    const MatrixXcd identity = MatrixXcd::Identity(d, d);
    MatrixXcd projector = MatrixXcd::Zero(d, d);
    projector(0, 0) = 1.0;
    MatrixXcd traceless = MatrixXcd::Zero(d, d);
    traceless(0, 0) = 1.0;
    traceless(1, 1) = -1.0;

    auto battery_rng = make_stream(args.seed, "lemma-battery");
    const MatrixXcd h1 = random_hermitian(d, battery_rng);
    const MatrixXcd h2 = random_hermitian(d, battery_rng);
    const MatrixXcd h3 = random_hermitian(d, battery_rng);
    const MatrixXcd h4 = random_hermitian(d, battery_rng);

    Timer timer;
    auto mc_rng = make_stream(args.seed, "lemmas-mc");
    const std::int64_t n = args.samples;
    std::vector<LemmaCheckReport> reports;
    reports.push_back(mc_lemma1(identity, identity, d, n, mc_rng, "identity"));
    reports.push_back(mc_lemma1(projector, projector, d, n, mc_rng, "projectors"));
    reports.push_back(mc_lemma1(traceless, projector, d, n, mc_rng, "traceless"));
    reports.push_back(mc_lemma1(h1, h2, d, n, mc_rng, "random-hermitian"));
    reports.push_back(
        mc_lemma2(identity, identity, identity, identity, d, n, mc_rng, "identity"));
    reports.push_back(
        mc_lemma2(traceless, projector, traceless, projector, d, n, mc_rng,
                  "traceless-projector"));
    reports.push_back(mc_lemma2(h1, h2, h3, h4, d, n, mc_rng, "random-hermitian"));
    reports.push_back(
        mc_lemma3(identity, projector, identity, projector, d, n, mc_rng,
                  "identity-reduction"));
    reports.push_back(
        mc_lemma3(projector, projector, projector, projector, d, n, mc_rng,
                  "projectors"));
    reports.push_back(mc_lemma3(h1, h2, h3, h4, d, n, mc_rng, "random-hermitian"));

    bool any_inconclusive = false;
    json checks = json::array();
    for (const LemmaCheckReport& report : reports) {
        any_inconclusive = any_inconclusive || !report.conclusive;
        checks.push_back({{"lemma", report.lemma},
                          {"label", report.label},
                          {"dim", report.dim},
                          {"samples", report.samples},
                          {"estimate_re", report.estimate.real()},
                          {"estimate_im", report.estimate.imag()},
                          {"analytic_re", report.analytic.real()},
                          {"analytic_im", report.analytic.imag()},
                          {"abs_error", report.abs_error},
                          {"rel_error", report.rel_error},
                          {"std_error", report.std_error},
                          {"conclusive", report.conclusive}});
        std::cout << "lemma " << report.lemma << " [" << report.label << "] d="
                  << report.dim << " N=" << report.samples << ": estimate "
                  << g17(report.estimate.real()) << (report.estimate.imag() < 0 ? "-" : "+")
                  << g17(std::abs(report.estimate.imag())) << "i, analytic "
                  << g17(report.analytic.real()) << ", |err| " << g17(report.abs_error)
                  << ", stderr " << g17(report.std_error)
                  << (report.conclusive ? "" : "  [statistically-inconclusive]") << "\n";
    }

    const std::filesystem::path out_dir(args.out);
    ensure_dir(out_dir);
    write_text_file(out_dir / "lemmas.csv", lemmas_csv(reports));
    json summary = {{"schema_version", kSchemaVersion},
                    {"command", "lemmas"},
                    {"dim", args.dim},
                    {"samples", args.samples},
                    {"seed", args.seed},
                    {"statistically_inconclusive", any_inconclusive},
                    {"checks", checks}};
    attach_timings(summary, args.timings, timer);
    write_json_file(out_dir / "summary.json", summary);

    std::cout << "wrote " << (out_dir / "lemmas.csv").string() << " and "
              << (out_dir / "summary.json").string() << "\n";
    return kExitOk;
}

// ------------------------------------------------------------- identity ---

struct IdentityArgs {
    std::string schemes;
    std::string qubits_range;
    std::string depth_rule = "equal";
    int seeds = 10;
    std::uint64_t seed_base = 0;
    std::string input = "constant";
    std::string out;
    std::string config_path;
    bool timings = false;
};

int run_identity(CLI::App& cmd, IdentityArgs& args)
{
    const json config = maybe_config(args.config_path);
    check_config_keys(config, {"schemes", "qubits-range", "depth-rule", "seeds",
                               "seed-base", "input", "out", "timings"});
    const FlagMerger merger(cmd, config);
    merger.merge("schemes", args.schemes);
    merger.merge("qubits-range", args.qubits_range);
    merger.merge("depth-rule", args.depth_rule);
    merger.merge("seeds", args.seeds);
    merger.merge("seed-base", args.seed_base);
    merger.merge("input", args.input);
    merger.merge("out", args.out);
    merger.merge("timings", args.timings);

    if (args.qubits_range.empty()) throw UsageError("--qubits-range is required");
    if (args.seeds < 1) throw UsageError("--seeds must be at least 1");
    if (args.input != "constant" && args.input != "alternating") {
        throw UsageError("--input must be 'constant' or 'alternating'");
    }
    if (args.out.empty()) args.out = default_out_dir();

    std::vector<Scheme> schemes;
    std::vector<int> n_values;
    DepthRule rule;
    try {
        schemes = parse_scheme_list(args.schemes);
        n_values = parse_int_list(args.qubits_range);
        rule = DepthRule::parse(args.depth_rule);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
    if (schemes.empty()) throw UsageError("--schemes must name at least one scheme");

    Timer timer;
    std::vector<IdentityProximityReport> reports;
    json cells = json::array();
    for (Scheme scheme : schemes) {
        for (int n : n_values) {
            const std::vector<double> angles =
                args.input == "constant" ? constant_input(n) : alternating_input(n);
            IdentityProximityReport report;
            try {
                report = identity_proximity(scheme, n, rule.depth_for(n), args.seeds,
                                            args.seed_base, angles);
            } catch (const std::invalid_argument& err) {
                throw UsageError(err.what());
            }
            int below = 0;
            for (double mu : report.mu) {
                if (mu <= 0.1) ++below;
            }
            cells.push_back({{"scheme", scheme_name(report.scheme)},
                             {"n_qubits", report.n_qubits},
                             {"depth", report.depth},
                             {"seeds", args.seeds},
                             {"mean_mu", report.mean_mu},
                             {"min_mu", report.min_mu},
                             {"max_mu", report.max_mu},
                             {"count_mu_below_0.1", below}});
            std::cout << "identity " << scheme_name(report.scheme) << " n="
                      << report.n_qubits << " L=" << report.depth << ": mu in ["
                      << g17(report.min_mu) << ", " << g17(report.max_mu) << "], mean "
                      << g17(report.mean_mu) << "\n";
            reports.push_back(std::move(report));
        }
    }

    const std::filesystem::path out_dir(args.out);
    ensure_dir(out_dir);
    write_text_file(out_dir / "identity.csv", identity_csv(reports));
    json summary = {{"schema_version", kSchemaVersion},
                    {"command", "identity"},
                    {"depth_rule", rule.name()},
                    {"seeds", args.seeds},
                    {"seed_base", args.seed_base},
                    {"input", args.input},
                    {"cells", cells}};
    attach_timings(summary, args.timings, timer);
    write_json_file(out_dir / "summary.json", summary);

    std::cout << "wrote " << (out_dir / "identity.csv").string() << " and "
              << (out_dir / "summary.json").string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"variational-circuit training and gradient-statistics diagnostics"};
    app.require_subcommand(1);

    TrainArgs train_args;
    CLI::App* train_cmd =
        app.add_subcommand("train", "run one gradient-descent training");
    train_cmd->add_option("--scheme", train_args.scheme,
                          "net, model1, model2, or model3");
    train_cmd->add_option("--qubits", train_args.qubits, "qubit count");
    train_cmd->add_option("--depth", train_args.depth,
                          "circuit depth L (default: same as qubit count)");
    train_cmd->add_option("--eta", train_args.eta, "learning rate");
    train_cmd->add_option("--target", train_args.target, "cost threshold to reach");
    train_cmd->add_option("--max-epochs", train_args.max_epochs, "epoch cap");
    train_cmd->add_option("--seed", train_args.seed, "run seed");
    train_cmd->add_option("--axis", train_args.axis, "rotation axis: x, y, or z");
    train_cmd->add_option("--entangler", train_args.entangler,
                          "linear-cnot-ladder or none");
    train_cmd->add_option("--out", train_args.out, "output directory");
    train_cmd->add_option("--config", train_args.config_path, "flat JSON config file");
    train_cmd->add_flag("--timings", train_args.timings,
                        "add wall-clock data to summary.json");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "epochs-to-target over schemes and qubit counts");
    sweep_cmd->add_option("--schemes", sweep_args.schemes, "comma list of schemes");
    sweep_cmd->add_option("--qubits-range", sweep_args.qubits_range,
                          "qubit counts, e.g. 2:10 or 2,4,6");
    sweep_cmd->add_option("--depth-rule", sweep_args.depth_rule,
                          "equal, fixed:K, or a bare integer K");
    sweep_cmd->add_option("--target", sweep_args.target, "cost threshold");
    sweep_cmd->add_option("--reps", sweep_args.reps, "repetitions per cell");
    sweep_cmd->add_option("--eta", sweep_args.eta, "learning rate");
    sweep_cmd->add_option("--max-epochs", sweep_args.max_epochs, "epoch cap");
    sweep_cmd->add_option("--seed-base", sweep_args.seed_base,
                          "repetition r uses seed-base + r");
    sweep_cmd->add_option("--threads", sweep_args.threads, "worker threads");
    sweep_cmd->add_option("--label", sweep_args.label, "experiment id in records.csv");
    sweep_cmd->add_option("--out", sweep_args.out, "output directory");
    sweep_cmd->add_option("--config", sweep_args.config_path, "flat JSON config file");
    sweep_cmd->add_flag("--timings", sweep_args.timings,
                        "add wall-clock data to summary.json");

    VarianceArgs variance_args;
    CLI::App* variance_cmd = app.add_subcommand(
        "variance", "gradient-component variance scan over qubit counts");
    variance_cmd->add_option("--qubits-range", variance_args.qubits_range,
                             "qubit counts, e.g. 2:10:2");
    variance_cmd->add_option("--depth-rule", variance_args.depth_rule,
                             "equal, fixed:K, or a bare integer K");
    variance_cmd->add_option("--samples", variance_args.samples,
                             "theta draws per qubit count");
    variance_cmd->add_option("--param-index", variance_args.param_index,
                             "which gradient component to sample");
    variance_cmd->add_option("--seed", variance_args.seed, "scan seed");
    variance_cmd->add_option("--out", variance_args.out, "output directory");
    variance_cmd->add_option("--config", variance_args.config_path,
                             "flat JSON config file");
    variance_cmd->add_flag("--timings", variance_args.timings,
                           "add wall-clock data to summary.json");

    LemmasArgs lemmas_args;
    CLI::App* lemmas_cmd = app.add_subcommand(
        "lemmas", "Monte-Carlo checks of the Haar moment identities");
    lemmas_cmd->add_option("--dim", lemmas_args.dim, "unitary dimension d");
    lemmas_cmd->add_option("--samples", lemmas_args.samples, "Haar draws per check");
    lemmas_cmd->add_option("--seed", lemmas_args.seed, "sampling seed");
    lemmas_cmd->add_option("--out", lemmas_args.out, "output directory");
    lemmas_cmd->add_option("--config", lemmas_args.config_path, "flat JSON config file");
    lemmas_cmd->add_flag("--timings", lemmas_args.timings,
                         "add wall-clock data to summary.json");

    IdentityArgs identity_args;
    CLI::App* identity_cmd = app.add_subcommand(
        "identity", "how far fresh initializations are from the identity circuit");
    identity_cmd->add_option("--schemes", identity_args.schemes,
                             "comma list of schemes");
    identity_cmd->add_option("--qubits-range", identity_args.qubits_range,
                             "qubit counts, e.g. 2:10");
    identity_cmd->add_option("--depth-rule", identity_args.depth_rule,
                             "equal, fixed:K, or a bare integer K");
    identity_cmd->add_option("--seeds", identity_args.seeds, "seeds per cell");
    identity_cmd->add_option("--seed-base", identity_args.seed_base,
                             "seed i uses seed-base + i");
    identity_cmd->add_option("--input", identity_args.input,
                             "encoder angles: constant or alternating");
    identity_cmd->add_option("--out", identity_args.out, "output directory");
    identity_cmd->add_option("--config", identity_args.config_path,
                             "flat JSON config file");
    identity_cmd->add_flag("--timings", identity_args.timings,
                           "add wall-clock data to summary.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*train_cmd) return run_train(*train_cmd, train_args);
        if (*sweep_cmd) return run_sweep_cmd(*sweep_cmd, sweep_args);
        if (*variance_cmd) return run_variance(*variance_cmd, variance_args);
        if (*lemmas_cmd) return run_lemmas(*lemmas_cmd, lemmas_args);
        if (*identity_cmd) return run_identity(*identity_cmd, identity_args);
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
