#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <stdexcept>

#include "nnequiv/kernels/dense.hpp"

namespace nnequiv::kernels {

void affine_neon(std::span<const double> in, std::span<const double> weights, std::span<const double> bias,
                 std::span<double> out) {
    const std::size_t cols = out.size();
    if (bias.size() != cols || weights.size() != in.size() * cols) {
        throw std::invalid_argument("affine_neon: shape mismatch");
    }
    const std::size_t vec_end = cols - cols % 2;
    for (std::size_t j = 0; j < vec_end; j += 2) {
        float64x2_t acc = vld1q_f64(bias.data() + j);
        for (std::size_t k = 0; k < in.size(); ++k) {
            acc = vfmaq_f64(acc, vdupq_n_f64(in[k]), vld1q_f64(weights.data() + k * cols + j));
        }
        vst1q_f64(out.data() + j, acc);
    }
    for (std::size_t j = vec_end; j < cols; ++j) {
        double acc = bias[j];
        for (std::size_t k = 0; k < in.size(); ++k) {
            acc = std::fma(in[k], weights[k * cols + j], acc);
        }
        out[j] = acc;
    }
}

// vmaxq_f64 propagates NaN; compare-select keeps maxpd semantics.
void relu_neon(std::span<double> values) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    const std::size_t n = values.size();
    const std::size_t vec_end = n - n % 2;
    double* p = values.data();
    for (std::size_t i = 0; i < vec_end; i += 2) {
        const float64x2_t v = vld1q_f64(p + i);
        vst1q_f64(p + i, vbslq_f64(vcgtq_f64(v, zero), v, zero));
    }
    for (std::size_t i = vec_end; i < n; ++i) {
        p[i] = p[i] > 0.0 ? p[i] : 0.0;
    }
}

void hardtanh_neon(std::span<double> values) {
    const float64x2_t lo = vdupq_n_f64(-1.0);
    const float64x2_t hi = vdupq_n_f64(1.0);
    const std::size_t n = values.size();
    const std::size_t vec_end = n - n % 2;
    double* p = values.data();
    for (std::size_t i = 0; i < vec_end; i += 2) {
        float64x2_t v = vld1q_f64(p + i);
        v = vbslq_f64(vcgtq_f64(v, lo), v, lo);
        v = vbslq_f64(vcltq_f64(v, hi), v, hi);
        vst1q_f64(p + i, v);
    }
    for (std::size_t i = vec_end; i < n; ++i) {
        const double clamped = p[i] > -1.0 ? p[i] : -1.0;
        p[i] = clamped < 1.0 ? clamped : 1.0;
    }
}

}  // namespace nnequiv::kernels

#endif
