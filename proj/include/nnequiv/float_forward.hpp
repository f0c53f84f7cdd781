#pragma once

#include <span>
#include <vector>

#include "nnequiv/kernels/dense.hpp"
#include "nnequiv/model.hpp"

namespace nnequiv {

/// Double-precision copy of a Network for fast approximate evaluation.
///
/// Never authoritative: it exists to cross-check the exact evaluator and to
/// give quick decimal previews. Weights are flattened row-major so the
/// kernels see contiguous destination columns.
class FloatNetwork {
public:
    explicit FloatNetwork(const Network& net);

    std::size_t input_dim() const { return input_dim_; }
    std::size_t output_dim() const { return layers_.empty() ? 0 : layers_.back().bias.size(); }

    /// Forward pass with the runtime-selected kernels.
    std::vector<double> forward(std::span<const double> x) const;
    /// Forward pass with an explicit kernel table (used by equivalence tests).
    std::vector<double> forward(std::span<const double> x, const kernels::KernelTable& table) const;

private:
    struct DenseLayer {
        std::vector<double> weights;
        std::vector<double> bias;
        Activation activation;
    };

    std::size_t input_dim_ = 0;
    std::vector<DenseLayer> layers_;
    double output_scale_ = 1.0;
    bool has_scale_ = false;
};

}  // namespace nnequiv
