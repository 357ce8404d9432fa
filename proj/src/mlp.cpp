#include "vqcnet/mlp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vqcnet/rng.hpp"

namespace vqcnet {

MlpKind parse_mlp_kind(std::string_view name) {
    if (name == "model1") return MlpKind::Model1;
    if (name == "model2") return MlpKind::Model2;
    if (name == "model3") return MlpKind::Model3;
    throw std::invalid_argument("unknown network kind: " + std::string(name));
}

MlpArchitecture make_architecture(MlpKind kind, int n_qubits, int depth) {
    if (n_qubits < 1 || depth < 1) {
        throw std::invalid_argument("architecture needs positive qubit count and depth");
    }
    const int p = n_qubits * depth;
    switch (kind) {
        case MlpKind::Model1: return {{kAlphaDim, 10, p}};
        case MlpKind::Model2: return {{kAlphaDim, 30, p}};
        case MlpKind::Model3: return {{kAlphaDim, 10, 20, p}};
    }
    throw std::invalid_argument("unknown network kind");
}

MlpModel init_model(const MlpArchitecture& arch, std::uint64_t seed) {
    if (arch.layer_dims.size() < 2) {
        throw std::invalid_argument("architecture needs at least one layer");
    }
    for (int d : arch.layer_dims) {
        if (d < 1) throw std::invalid_argument("layer dimensions must be positive");
    }
    MlpModel model{arch, {}, {}};
    std::mt19937_64 rng = make_stream(seed, "mlp-init");
    for (std::size_t l = 0; l + 1 < arch.layer_dims.size(); ++l) {
        const int fan_in = arch.layer_dims[l];
        const int fan_out = arch.layer_dims[l + 1];
        const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
        Eigen::MatrixXd w(fan_out, fan_in);
        for (int i = 0; i < fan_out; ++i) {
            for (int j = 0; j < fan_in; ++j) {
                w(i, j) = uniform_in(rng, -bound, bound);
            }
        }
        Eigen::VectorXd b(fan_out);
        for (int i = 0; i < fan_out; ++i) {
            b(i) = uniform_in(rng, -bound, bound);
        }
        model.weights.push_back(std::move(w));
        model.biases.push_back(std::move(b));
    }
    return model;
}

ForwardResult forward(const MlpModel& model, std::span<const double> alpha) {
    if (alpha.size() != static_cast<std::size_t>(model.arch.input_dim())) {
        throw std::invalid_argument("input vector length does not match architecture");
    }
    ForwardCache cache;
    Eigen::VectorXd a = Eigen::Map<const Eigen::VectorXd>(alpha.data(),
                                                          static_cast<Eigen::Index>(alpha.size()));
    cache.activations.push_back(a);
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
        a = (model.weights[l] * a + model.biases[l]).array().tanh();
        cache.activations.push_back(a);
    }
    std::vector<double> theta(a.data(), a.data() + a.size());
    return {std::move(theta), std::move(cache)};
}

MlpGradients backward(const MlpModel& model, const ForwardCache& cache,
                      std::span<const double> upstream) {
    const std::size_t layers = model.weights.size();
    if (cache.activations.size() != layers + 1) {
        throw std::invalid_argument("forward cache does not match model layer count");
    }
    for (std::size_t l = 0; l <= layers; ++l) {
        if (cache.activations[l].size() != model.arch.layer_dims[l]) {
            throw std::invalid_argument("forward cache shape does not match model");
        }
    }
    if (upstream.size() != static_cast<std::size_t>(model.arch.output_dim())) {
        throw std::invalid_argument("upstream gradient length does not match output");
    }

    MlpGradients grads;
    grads.weight_grads.resize(layers);
    grads.bias_grads.resize(layers);

    // delta = dC/dz through tanh: dC/dh .* (1 - h^2), with h the cached output.
    Eigen::VectorXd delta =
        Eigen::Map<const Eigen::VectorXd>(upstream.data(),
                                          static_cast<Eigen::Index>(upstream.size()))
            .cwiseProduct(Eigen::VectorXd::Ones(cache.activations[layers].size()) -
                          cache.activations[layers].cwiseProduct(cache.activations[layers]));
    for (std::size_t l = layers; l-- > 0;) {
        grads.weight_grads[l] = delta * cache.activations[l].transpose();
        grads.bias_grads[l] = delta;
        Eigen::VectorXd upstream_prev = model.weights[l].transpose() * delta;
        if (l == 0) {
            grads.input_grad = std::move(upstream_prev);
        } else {
            delta = upstream_prev.cwiseProduct(
                Eigen::VectorXd::Ones(cache.activations[l].size()) -
                cache.activations[l].cwiseProduct(cache.activations[l]));
        }
    }
    return grads;
}

void sgd_step(MlpModel& model, std::vector<double>& alpha,
              const MlpGradients& grads, double eta) {
    if (grads.weight_grads.size() != model.weights.size() ||
        grads.input_grad.size() != static_cast<Eigen::Index>(alpha.size())) {
        throw std::invalid_argument("gradient shapes do not match model");
    }
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
        if (grads.weight_grads[l].rows() != model.weights[l].rows() ||
            grads.weight_grads[l].cols() != model.weights[l].cols() ||
            grads.bias_grads[l].size() != model.biases[l].size()) {
            throw std::invalid_argument("gradient shapes do not match model");
        }
        model.weights[l] -= eta * grads.weight_grads[l];
        model.biases[l] -= eta * grads.bias_grads[l];
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        alpha[i] -= eta * grads.input_grad(static_cast<Eigen::Index>(i));
    }
}

nlohmann::json model_to_json(const MlpModel& model) {
    nlohmann::json layers = nlohmann::json::array();
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
        const Eigen::MatrixXd& w = model.weights[l];
        std::vector<double> flat;
        flat.reserve(static_cast<std::size_t>(w.size()));
        for (Eigen::Index i = 0; i < w.rows(); ++i) {
            for (Eigen::Index j = 0; j < w.cols(); ++j) {
                flat.push_back(w(i, j));
            }
        }
        std::vector<double> bias(model.biases[l].data(),
                                 model.biases[l].data() + model.biases[l].size());
        layers.push_back({{"weights", flat}, {"bias", bias}});
    }
    return {{"layer_dims", model.arch.layer_dims}, {"layers", layers}};
}

MlpModel model_from_json(const nlohmann::json& j) {
    MlpModel model;
    model.arch.layer_dims = j.at("layer_dims").get<std::vector<int>>();
    const auto& layers = j.at("layers");
    if (layers.size() + 1 != model.arch.layer_dims.size()) {
        throw std::invalid_argument("model snapshot layer count mismatch");
    }
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const int rows = model.arch.layer_dims[l + 1];
        const int cols = model.arch.layer_dims[l];
        const auto flat = layers[l].at("weights").get<std::vector<double>>();
        const auto bias = layers[l].at("bias").get<std::vector<double>>();
        if (flat.size() != static_cast<std::size_t>(rows) * cols ||
            bias.size() != static_cast<std::size_t>(rows)) {
            throw std::invalid_argument("model snapshot shape mismatch");
        }
        Eigen::MatrixXd w(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int c = 0; c < cols; ++c) {
                w(i, c) = flat[static_cast<std::size_t>(i) * cols + c];
            }
        }
        model.weights.push_back(std::move(w));
        model.biases.push_back(Eigen::Map<const Eigen::VectorXd>(bias.data(), rows));
    }
    return model;
}

}  // namespace vqcnet
