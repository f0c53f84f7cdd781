#include "nnequiv/float_forward.hpp"

#include "nnequiv/error.hpp"

namespace nnequiv {

FloatNetwork::FloatNetwork(const Network& net) : input_dim_(net.input_dim) {
    for (const Layer& layer : net.layers) {
        DenseLayer dense;
        dense.weights.reserve(layer.input_size() * layer.output_size());
        for (const Vector& row : layer.weights.rows) {
            for (const Rational& w : row) {
                dense.weights.push_back(w.to_double());
            }
        }
        for (const Rational& b : layer.biases) {
            dense.bias.push_back(b.to_double());
        }
        dense.activation = layer.activation;
        layers_.push_back(std::move(dense));
    }
    if (net.output_scale) {
        has_scale_ = true;
        output_scale_ = net.output_scale->to_double();
    }
}

std::vector<double> FloatNetwork::forward(std::span<const double> x) const {
    return forward(x, kernels::active_kernels());
}

std::vector<double> FloatNetwork::forward(std::span<const double> x, const kernels::KernelTable& table) const {
    if (x.size() != input_dim_) {
        throw DimensionError("input has " + std::to_string(x.size()) + " values, expected " +
                             std::to_string(input_dim_));
    }
    std::vector<double> current(x.begin(), x.end());
    std::vector<double> next;
    for (const DenseLayer& layer : layers_) {
        next.assign(layer.bias.size(), 0.0);
        table.affine(current, layer.weights, layer.bias, next);
        switch (layer.activation) {
        case Activation::ReLU:
            table.relu(next);
            break;
        case Activation::HardTanh:
            table.hardtanh(next);
            break;
        case Activation::Linear:
            break;
        }
        current.swap(next);
    }
    if (has_scale_) {
        for (double& v : current) {
            v *= output_scale_;
        }
    }
    return current;
}

}  // namespace nnequiv
