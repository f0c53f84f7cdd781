#include <cstdlib>
#include <stdexcept>
#include <string>

#include "nnequiv/kernels/dense.hpp"

namespace nnequiv::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, affine_scalar, relu_scalar, hardtanh_scalar};
#if defined(__x86_64__) || defined(__i386__)
constexpr KernelTable kAvx2{Isa::Avx2, affine_avx2, relu_avx2, hardtanh_avx2};
#endif
#if defined(__aarch64__)
constexpr KernelTable kNeon{Isa::Neon, affine_neon, relu_neon, hardtanh_neon};
#endif

const KernelTable& pick() {
    if (const char* forced = std::getenv("NNEQUIV_KERNELS"); forced != nullptr && std::string(forced) == "scalar") {
        return kScalar;
    }
#if defined(__x86_64__) || defined(__i386__)
    if (isa_available(Isa::Avx2)) {
        return kAvx2;
    }
#endif
#if defined(__aarch64__)
    return kNeon;
#endif
    return kScalar;
}

}  // namespace

std::string_view to_string(Isa isa) {
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    case Isa::Neon:
        return "neon";
    }
    return "?";
}

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

const KernelTable& kernels_for(Isa isa) {
    if (!isa_available(isa)) {
        throw std::runtime_error("kernel variant '" + std::string(to_string(isa)) + "' not available on this CPU");
    }
    switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::Avx2:
        return kAvx2;
#endif
#if defined(__aarch64__)
    case Isa::Neon:
        return kNeon;
#endif
    default:
        return kScalar;
    }
}

const KernelTable& active_kernels() {
    static const KernelTable& table = pick();
    return table;
}

}  // namespace nnequiv::kernels
