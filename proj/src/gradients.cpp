#include "vqcnet/gradients.hpp"

namespace vqcnet {

HybridGradResult hybrid_grad(const MlpModel& model, std::span<const double> alpha,
                             const CircuitEvaluator& eval) {
    if (model.arch.output_dim() != eval.parameter_count()) {
        throw std::invalid_argument("network output does not match circuit parameter count");
    }
    ForwardResult fwd = forward(model, alpha);
    const std::vector<double> upstream = param_shift_grad(eval, fwd.theta);
    HybridGradResult result;
    result.grads = backward(model, fwd.cache, upstream);
    result.cost = eval(fwd.theta);
    result.theta = std::move(fwd.theta);
    return result;
}

}  // namespace vqcnet
