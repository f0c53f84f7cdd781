#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nnequiv/model.hpp"

namespace nnequiv {

enum class MagnitudeSampling { Uniform, LogUniform };

/// How many parameters to alter and by how much.
struct PerturbationSpec {
    std::size_t count = 1;
    /// Absolute change is drawn from [lower, upper], then given a random sign.
    Rational lower = Rational::parse("1e-6");
    Rational upper = Rational::parse("1e-1");
    std::uint64_t seed = 0;
    bool weights_only = false;
    MagnitudeSampling sampling = MagnitudeSampling::Uniform;

    /// Throws RangeError unless 0 < lower <= upper, the interval contains a
    /// 9-digit decimal, and count does not exceed the eligible parameters.
    void check(const Network& net) const;
};

enum class ParamKind { Weight, Bias };

/// One altered scalar; indices are 1-based, row is 0 for biases.
struct ParameterChange {
    std::size_t layer = 0;
    ParamKind kind = ParamKind::Weight;
    std::size_t row = 0;
    std::size_t col = 0;
    Rational old_value;
    Rational new_value;
};

struct PerturbationResult {
    Network network;
    std::vector<ParameterChange> changes;
};

/// Copy of `net` with exactly spec.count distinct parameters changed by a
/// signed magnitude quantized to 9 fractional digits. Deterministic in
/// (net, spec). The copy's name gets a "_pert" suffix.
PerturbationResult perturb(const Network& net, const PerturbationSpec& spec);

/// JSON changelog (perturbation settings plus one entry per change), byte-stable.
std::string serialize_changelog(const PerturbationSpec& spec, const std::vector<ParameterChange>& changes);

}  // namespace nnequiv
