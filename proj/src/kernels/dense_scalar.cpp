#include <cmath>
#include <stdexcept>

#include "nnequiv/kernels/dense.hpp"

namespace nnequiv::kernels {

void affine_scalar(std::span<const double> in, std::span<const double> weights, std::span<const double> bias,
                   std::span<double> out) {
    const std::size_t cols = out.size();
    if (bias.size() != cols || weights.size() != in.size() * cols) {
        throw std::invalid_argument("affine_scalar: shape mismatch");
    }
    for (std::size_t j = 0; j < cols; ++j) {
        out[j] = bias[j];
    }
    for (std::size_t k = 0; k < in.size(); ++k) {
        const double xk = in[k];
        const double* row = weights.data() + k * cols;
        for (std::size_t j = 0; j < cols; ++j) {
            out[j] = std::fma(xk, row[j], out[j]);
        }
    }
}

void relu_scalar(std::span<double> values) {
    for (double& v : values) {
        v = v > 0.0 ? v : 0.0;
    }
}

void hardtanh_scalar(std::span<double> values) {
    for (double& v : values) {
        const double lo = v > -1.0 ? v : -1.0;
        v = lo < 1.0 ? lo : 1.0;
    }
}

}  // namespace nnequiv::kernels
