#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace vqcnet {

inline constexpr int kAlphaDim = 4;

enum class MlpKind { Model1, Model2, Model3 };

MlpKind parse_mlp_kind(std::string_view name);

// Layer widths, input first. tanh follows every affine layer including the
// last, so the output always lands strictly inside (-1, 1).
struct MlpArchitecture {
    std::vector<int> layer_dims;

    int input_dim() const { return layer_dims.front(); }
    int output_dim() const { return layer_dims.back(); }
    std::size_t layer_count() const { return layer_dims.size() - 1; }
};

// model1: 4 -> 10 -> n*L, model2: 4 -> 30 -> n*L, model3: 4 -> 10 -> 20 -> n*L.
MlpArchitecture make_architecture(MlpKind kind, int n_qubits, int depth);

struct MlpModel {
    MlpArchitecture arch;
    std::vector<Eigen::MatrixXd> weights;  // out x in per layer
    std::vector<Eigen::VectorXd> biases;
};

// Weights and biases i.i.d. uniform on [-1/sqrt(fan_in), +1/sqrt(fan_in)].
MlpModel init_model(const MlpArchitecture& arch, std::uint64_t seed);

// Post-activation values per layer, input included; what backward consumes.
struct ForwardCache {
    std::vector<Eigen::VectorXd> activations;
};

struct ForwardResult {
    std::vector<double> theta;
    ForwardCache cache;
};

ForwardResult forward(const MlpModel& model, std::span<const double> alpha);

struct MlpGradients {
    std::vector<Eigen::MatrixXd> weight_grads;
    std::vector<Eigen::VectorXd> bias_grads;
    Eigen::VectorXd input_grad;
};

// Exact reverse-mode gradients given upstream dC/dtheta. The cache must come
// from a forward pass through the same model.
MlpGradients backward(const MlpModel& model, const ForwardCache& cache,
                      std::span<const double> upstream);

// Plain gradient-descent update of every parameter, alpha included.
void sgd_step(MlpModel& model, std::vector<double>& alpha,
              const MlpGradients& grads, double eta);

nlohmann::json model_to_json(const MlpModel& model);
MlpModel model_from_json(const nlohmann::json& j);

}  // namespace vqcnet
