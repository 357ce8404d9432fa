#include "vqcnet/trainer.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "vqcnet/cost.hpp"
#include "vqcnet/encoding.hpp"
#include "vqcnet/gradients.hpp"
#include "vqcnet/rng.hpp"

namespace vqcnet {

namespace {

void validate_config(const TrainConfig& config)
{
    if (config.n_qubits < 1 || config.n_qubits > kMaxQubits) {
        throw std::invalid_argument("train: n_qubits must be in [1, "
                                    + std::to_string(kMaxQubits) + "], got "
                                    + std::to_string(config.n_qubits));
    }
    if (config.depth < 1) {
        throw std::invalid_argument("train: depth must be >= 1, got "
                                    + std::to_string(config.depth));
    }
    if (!(config.eta > 0.0)) {
        throw std::invalid_argument("train: learning rate must be positive");
    }
    // target 0 is allowed: the run then exhausts max_epochs and reports
    // reached=false, which the CLI maps to its non-convergence exit code.
    if (!(config.target_cost >= 0.0)) {
        throw std::invalid_argument("train: target cost must be non-negative");
    }
    if (config.max_epochs < 0) {
        throw std::invalid_argument("train: max_epochs must be non-negative");
    }
}

}  // namespace

Scheme parse_scheme(std::string_view name)
{
    if (name == "net") return Scheme::Net;
    if (name == "model1") return Scheme::Model1;
    if (name == "model2") return Scheme::Model2;
    if (name == "model3") return Scheme::Model3;
    throw std::invalid_argument("unknown scheme '" + std::string(name)
                                + "' (expected net|model1|model2|model3)");
}

std::string scheme_name(Scheme scheme)
{
    switch (scheme) {
    case Scheme::Net: return "net";
    case Scheme::Model1: return "model1";
    case Scheme::Model2: return "model2";
    case Scheme::Model3: return "model3";
    }
    throw std::invalid_argument("unknown scheme enumerator");
}

MlpKind scheme_mlp_kind(Scheme scheme)
{
    switch (scheme) {
    case Scheme::Model1: return MlpKind::Model1;
    case Scheme::Model2: return MlpKind::Model2;
    case Scheme::Model3: return MlpKind::Model3;
    case Scheme::Net:
        throw std::invalid_argument("scheme 'net' has no network attached");
    }
    throw std::invalid_argument("unknown scheme enumerator");
}

StateVector training_input_state(int n_qubits)
{
    std::vector<double> angles(static_cast<std::size_t>(n_qubits),
                               std::numbers::pi / 4.0);
    return qubit_encode(angles);
}

AnsatzSpec ansatz_for(const TrainConfig& config)
{
    AnsatzSpec spec;
    spec.n_qubits = config.n_qubits;
    spec.depth = config.depth;
    spec.axis = config.axis;
    spec.entangler = config.entangler;
    return spec;
}

std::vector<double> draw_initial_theta(int n_qubits, int depth, std::uint64_t seed)
{
    auto rng = make_stream(seed, "theta");
    std::vector<double> theta(static_cast<std::size_t>(n_qubits)
                              * static_cast<std::size_t>(depth));
    for (double& t : theta) t = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
    return theta;
}

std::vector<double> draw_initial_alpha(std::uint64_t seed)
{
    auto rng = make_stream(seed, "alpha");
    std::vector<double> alpha(kAlphaDim);
    for (double& a : alpha) a = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
    return alpha;
}

std::vector<double> initial_circuit_parameters(Scheme scheme, int n_qubits, int depth,
                                               std::uint64_t seed)
{
    if (scheme == Scheme::Net) {
        return draw_initial_theta(n_qubits, depth, seed);
    }
    MlpArchitecture arch = make_architecture(scheme_mlp_kind(scheme), n_qubits, depth);
    MlpModel model = init_model(arch, seed);
    std::vector<double> alpha = draw_initial_alpha(seed);
    return forward(model, alpha).theta;
}

RunResult train_baseline(const TrainConfig& config)
{
    validate_config(config);
    if (config.scheme != Scheme::Net) {
        throw std::invalid_argument("train_baseline expects scheme 'net'");
    }

    const AnsatzSpec spec = ansatz_for(config);
    CircuitEvaluator eval(training_input_state(config.n_qubits), spec);
    std::vector<double> theta =
        draw_initial_theta(config.n_qubits, config.depth, config.seed);

    RunResult result;
    double cost = eval(theta);
    result.trajectory.emplace_back(0, cost);
    if (cost <= config.target_cost) {
        result.reached = true;
        result.epochs_to_target = 0;
    }

    for (int epoch = 1; !result.reached && epoch <= config.max_epochs; ++epoch) {
        const std::vector<double> grad = param_shift_grad(eval, theta);
        for (std::size_t k = 0; k < theta.size(); ++k) {
            theta[k] -= config.eta * grad[k];
        }
        cost = eval(theta);
        result.trajectory.emplace_back(epoch, cost);
        if (cost <= config.target_cost) {
            result.reached = true;
            result.epochs_to_target = epoch;
        }
    }

    result.final_theta = std::move(theta);
    result.final_cost = cost;
    result.cost_evaluations = eval.evaluations();
    return result;
}

RunResult train_hybrid(const TrainConfig& config)
{
    validate_config(config);
    if (config.scheme == Scheme::Net) {
        throw std::invalid_argument("train_hybrid expects a model scheme");
    }

    const AnsatzSpec spec = ansatz_for(config);
    CircuitEvaluator eval(training_input_state(config.n_qubits), spec);

    MlpArchitecture arch =
        make_architecture(scheme_mlp_kind(config.scheme), config.n_qubits, config.depth);
    MlpModel model = init_model(arch, config.seed);
    std::vector<double> alpha = draw_initial_alpha(config.seed);

    RunResult result;
    ForwardResult fr = forward(model, alpha);
    double cost = eval(fr.theta);
    result.trajectory.emplace_back(0, cost);
    if (cost <= config.target_cost) {
        result.reached = true;
        result.epochs_to_target = 0;
    }

    for (int epoch = 1; !result.reached && epoch <= config.max_epochs; ++epoch) {
        const std::vector<double> upstream = param_shift_grad(eval, fr.theta);
        const MlpGradients grads = backward(model, fr.cache, upstream);
        sgd_step(model, alpha, grads, config.eta);
        fr = forward(model, alpha);
        cost = eval(fr.theta);
        result.trajectory.emplace_back(epoch, cost);
        if (cost <= config.target_cost) {
            result.reached = true;
            result.epochs_to_target = epoch;
        }
    }

    result.final_theta = std::move(fr.theta);
    result.final_cost = cost;
    result.cost_evaluations = eval.evaluations();
    return result;
}

RunResult train(const TrainConfig& config)
{
    return config.scheme == Scheme::Net ? train_baseline(config) : train_hybrid(config);
}

DepthRule DepthRule::fixed(int depth)
{
    if (depth < 1) {
        throw std::invalid_argument("depth rule: fixed depth must be >= 1, got "
                                    + std::to_string(depth));
    }
    return {false, depth};
}

DepthRule DepthRule::parse(std::string_view text)
{
    if (text == "equal") return DepthRule::equal();
    std::string_view digits = text;
    if (digits.starts_with("fixed:")) digits.remove_prefix(6);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("depth rule must be 'equal', 'fixed:K', or an integer; got '"
                                    + std::string(text) + "'");
    }
    return DepthRule::fixed(value);
}

std::string DepthRule::name() const
{
    return equal_n ? "equal" : "fixed:" + std::to_string(fixed_depth);
}

SweepResult run_sweep(std::span<const Scheme> schemes, std::span<const int> n_values,
                      const DepthRule& depth_rule, int reps, const TrainConfig& base,
                      int threads)
{
    if (schemes.empty()) throw std::invalid_argument("sweep: no schemes given");
    if (n_values.empty()) throw std::invalid_argument("sweep: no qubit counts given");
    if (reps < 1) throw std::invalid_argument("sweep: reps must be >= 1");

    struct Task {
        Scheme scheme;
        int n_qubits;
        int rep;
    };
    std::vector<Task> tasks;
    tasks.reserve(schemes.size() * n_values.size() * static_cast<std::size_t>(reps));
    for (Scheme scheme : schemes) {
        for (int n : n_values) {
            for (int rep = 0; rep < reps; ++rep) {
                tasks.push_back({scheme, n, rep});
            }
        }
    }

    SweepResult result;
    result.rows.resize(tasks.size());

    // Workers pull task indices from a shared counter and write into fixed
    // slots, so the row order (and every value in it except wall_seconds)
    // does not depend on the thread count.
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];

            TrainConfig config = base;
            config.scheme = task.scheme;
            config.n_qubits = task.n_qubits;
            config.depth = depth_rule.depth_for(task.n_qubits);
            config.seed = base.seed + static_cast<std::uint64_t>(task.rep);

            const auto start = std::chrono::steady_clock::now();
            const RunResult run = train(config);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;

            RunRow& row = result.rows[i];
            row.scheme = task.scheme;
            row.n_qubits = task.n_qubits;
            row.depth = config.depth;
            row.eta = config.eta;
            row.target = config.target_cost;
            row.seed = config.seed;
            row.reached = run.reached;
            row.epochs = run.epochs_to_target;
            row.wall_seconds = elapsed.count();
        }
    };

    const int worker_count = std::max(1, threads);
    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // Aggregate in the same (scheme, n) order the rows were laid out in.
    for (Scheme scheme : schemes) {
        for (int n : n_values) {
            SweepCell cell;
            cell.scheme = scheme;
            cell.n_qubits = n;
            cell.depth = depth_rule.depth_for(n);
            double epoch_sum = 0.0;
            for (const RunRow& row : result.rows) {
                if (row.scheme != scheme || row.n_qubits != n) continue;
                ++cell.reps;
                if (row.reached) {
                    ++cell.reached_count;
                    epoch_sum += row.epochs;
                    if (cell.min_epochs < 0 || row.epochs < cell.min_epochs) {
                        cell.min_epochs = row.epochs;
                    }
                    if (row.epochs > cell.max_epochs) cell.max_epochs = row.epochs;
                } else {
                    ++cell.failures;
                }
            }
            if (cell.reached_count > 0) {
                cell.mean_epochs = epoch_sum / cell.reached_count;
            }
            result.cells.push_back(cell);
        }
    }
    return result;
}

}  // namespace vqcnet
