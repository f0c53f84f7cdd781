#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>
#include <stdexcept>

#include "nnequiv/kernels/dense.hpp"

namespace nnequiv::kernels {

__attribute__((target("avx2,fma"))) void affine_avx2(std::span<const double> in, std::span<const double> weights,
                                                     std::span<const double> bias, std::span<double> out) {
    const std::size_t cols = out.size();
    if (bias.size() != cols || weights.size() != in.size() * cols) {
        throw std::invalid_argument("affine_avx2: shape mismatch");
    }
    const std::size_t vec_end = cols - cols % 4;

    // Column blocks of 4 kept in a register across the whole k loop.
    for (std::size_t j = 0; j < vec_end; j += 4) {
        __m256d acc = _mm256_loadu_pd(bias.data() + j);
        for (std::size_t k = 0; k < in.size(); ++k) {
            const __m256d xk = _mm256_set1_pd(in[k]);
            const __m256d w = _mm256_loadu_pd(weights.data() + k * cols + j);
            acc = _mm256_fmadd_pd(xk, w, acc);
        }
        _mm256_storeu_pd(out.data() + j, acc);
    }
    for (std::size_t j = vec_end; j < cols; ++j) {
        double acc = bias[j];
        for (std::size_t k = 0; k < in.size(); ++k) {
            acc = std::fma(in[k], weights[k * cols + j], acc);
        }
        out[j] = acc;
    }
}

__attribute__((target("avx2"))) void relu_avx2(std::span<double> values) {
    const __m256d zero = _mm256_setzero_pd();
    const std::size_t n = values.size();
    const std::size_t vec_end = n - n % 4;
    double* p = values.data();
    for (std::size_t i = 0; i < vec_end; i += 4) {
        _mm256_storeu_pd(p + i, _mm256_max_pd(_mm256_loadu_pd(p + i), zero));
    }
    for (std::size_t i = vec_end; i < n; ++i) {
        p[i] = p[i] > 0.0 ? p[i] : 0.0;
    }
}

__attribute__((target("avx2"))) void hardtanh_avx2(std::span<double> values) {
    const __m256d lo = _mm256_set1_pd(-1.0);
    const __m256d hi = _mm256_set1_pd(1.0);
    const std::size_t n = values.size();
    const std::size_t vec_end = n - n % 4;
    double* p = values.data();
    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m256d v = _mm256_max_pd(_mm256_loadu_pd(p + i), lo);
        _mm256_storeu_pd(p + i, _mm256_min_pd(v, hi));
    }
    for (std::size_t i = vec_end; i < n; ++i) {
        const double clamped = p[i] > -1.0 ? p[i] : -1.0;
        p[i] = clamped < 1.0 ? clamped : 1.0;
    }
}

}  // namespace nnequiv::kernels

#endif
