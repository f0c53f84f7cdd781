#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nnequiv/model.hpp"
#include "nnequiv/relation.hpp"

namespace nnequiv {

// Exact forward execution and the pointwise vector functions behind every
// equivalence relation. Indices in the public contracts are 1-based.

Rational apply_activation(Activation act, const Rational& value);

/// Per-layer values recorded during a forward pass.
struct ForwardTrace {
    std::vector<Vector> pre_activation;   // z of every layer
    std::vector<Vector> post_activation;  // h of every layer (before output scaling)
    Vector output;                        // y, after output_scale
};

/// Exact forward pass; x need not lie within the declared input bounds.
/// Throws DimensionError when x has the wrong length.
Vector forward(const Network& net, std::span<const Rational> x);
ForwardTrace forward_trace(const Network& net, std::span<const Rational> x);

/// 1-based index of the maximum; ties resolve to the lowest index.
/// Throws DimensionError on an empty vector.
std::size_t argmax(std::span<const Rational> y);

/// 1-based permutation sorting y in decreasing order, equal values ordered
/// by ascending index. Throws DimensionError on an empty vector.
std::vector<std::size_t> argsort(std::span<const Rational> y);

enum class Norm { L1, LInf };

/// L1 or L-infinity distance; throws DimensionError on length mismatch.
Rational distance(Norm p, std::span<const Rational> y, std::span<const Rational> y_other);

struct PointCheck {
    bool violated = false;
    /// Names the violating coordinate or rank position and its values.
    std::string witness;
};

/// Whether the output pair violates `rel` at this single point. For norm
/// relations a violation means distance >= epsilon.
/// Throws DimensionError or RangeError on bad inputs.
PointCheck relation_violated_at(const EquivalenceRelation& rel, std::span<const Rational> y,
                                std::span<const Rational> y_other);

/// Whether x lies inside every declared input bound.
bool within_bounds(const Network& net, std::span<const Rational> x);

}  // namespace nnequiv
