#pragma once

#include <span>
#include <string_view>

// Double-precision kernels for the float cross-check evaluator.
//
// Every variant computes bit-identical results: the affine kernel accumulates
// out[j] = fma(in[k], w[k][j], out[j]) for k = 0, 1, ... starting from the
// bias, and the activations use compare-select semantics matching
// maxpd/minpd (so -0.0 and NaN map to the same bits everywhere).

namespace nnequiv::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// out[j] = bias[j] + sum_k in[k] * weights[k * out.size() + j]
using AffineFn = void (*)(std::span<const double> in, std::span<const double> weights,
                          std::span<const double> bias, std::span<double> out);
/// In-place activation.
using ActivationFn = void (*)(std::span<double> values);

struct KernelTable {
    Isa isa;
    AffineFn affine;
    ActivationFn relu;
    ActivationFn hardtanh;
};

void affine_scalar(std::span<const double> in, std::span<const double> weights, std::span<const double> bias,
                   std::span<double> out);
void relu_scalar(std::span<double> values);
void hardtanh_scalar(std::span<double> values);

#if defined(__x86_64__) || defined(__i386__)
void affine_avx2(std::span<const double> in, std::span<const double> weights, std::span<const double> bias,
                 std::span<double> out);
void relu_avx2(std::span<double> values);
void hardtanh_avx2(std::span<double> values);
#endif

#if defined(__aarch64__)
void affine_neon(std::span<const double> in, std::span<const double> weights, std::span<const double> bias,
                 std::span<double> out);
void relu_neon(std::span<double> values);
void hardtanh_neon(std::span<double> values);
#endif

/// Whether the running CPU can execute the given variant.
bool isa_available(Isa isa);

/// Table for a specific variant; throws std::runtime_error if unavailable.
const KernelTable& kernels_for(Isa isa);

/// Best available variant, chosen once per process. Setting the environment
/// variable NNEQUIV_KERNELS=scalar forces the reference kernels.
const KernelTable& active_kernels();

}  // namespace nnequiv::kernels
