#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vqcnet/ansatz.hpp"
#include "vqcnet/mlp.hpp"
#include "vqcnet/statevector.hpp"

namespace vqcnet {

// "net" trains circuit parameters directly; the model schemes train a
// network that emits them.
enum class Scheme { Net, Model1, Model2, Model3 };

Scheme parse_scheme(std::string_view name);
std::string scheme_name(Scheme scheme);
MlpKind scheme_mlp_kind(Scheme scheme);  // throws for Net

struct TrainConfig {
    Scheme scheme = Scheme::Net;
    int n_qubits = 2;
    int depth = 2;
    double eta = 0.1;
    double target_cost = 0.001;
    int max_epochs = 10000;
    std::uint64_t seed = 0;
    RotationAxis axis = RotationAxis::Y;
    EntanglerLayout entangler = EntanglerLayout::LinearCnotLadder;
};

struct RunResult {
    bool reached = false;
    int epochs_to_target = -1;  // -1 when the target was never reached
    std::vector<std::pair<int, double>> trajectory;  // (epoch, cost), entry 0 pre-update
    std::vector<double> final_theta;
    double final_cost = 0.0;
    std::int64_t cost_evaluations = 0;
};

// Fixed training input: every qubit rotated by pi/4.
StateVector training_input_state(int n_qubits);

AnsatzSpec ansatz_for(const TrainConfig& config);

// Initial draws, shared with the diagnostics so both sides sample the same
// startup distribution for a given seed.
std::vector<double> draw_initial_theta(int n_qubits, int depth, std::uint64_t seed);
std::vector<double> draw_initial_alpha(std::uint64_t seed);
std::vector<double> initial_circuit_parameters(Scheme scheme, int n_qubits, int depth,
                                               std::uint64_t seed);

RunResult train_baseline(const TrainConfig& config);
RunResult train_hybrid(const TrainConfig& config);
RunResult train(const TrainConfig& config);

struct DepthRule {
    bool equal_n = true;
    int fixed_depth = 0;

    static DepthRule equal() { return {true, 0}; }
    static DepthRule fixed(int depth);
    static DepthRule parse(std::string_view text);

    int depth_for(int n_qubits) const { return equal_n ? n_qubits : fixed_depth; }
    std::string name() const;
};

struct RunRow {
    Scheme scheme = Scheme::Net;
    int n_qubits = 0;
    int depth = 0;
    double eta = 0.0;
    double target = 0.0;
    std::uint64_t seed = 0;
    bool reached = false;
    int epochs = -1;
    double wall_seconds = 0.0;
};

// Epoch statistics over the repetitions that reached the target; the rest
// are counted as failures.
struct SweepCell {
    Scheme scheme = Scheme::Net;
    int n_qubits = 0;
    int depth = 0;
    int reps = 0;
    int reached_count = 0;
    int failures = 0;
    double mean_epochs = 0.0;
    int min_epochs = -1;
    int max_epochs = -1;
};

struct SweepResult {
    std::vector<RunRow> rows;
    std::vector<SweepCell> cells;
};

// Runs reps repetitions per (scheme, n) cell with seeds seed + r. Worker
// threads only change scheduling; results land in fixed slots so the output
// is identical for any thread count.
SweepResult run_sweep(std::span<const Scheme> schemes, std::span<const int> n_values,
                      const DepthRule& depth_rule, int reps, const TrainConfig& base,
                      int threads = 1);

}  // namespace vqcnet
