#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nnequiv/encoder.hpp"
#include "nnequiv/formula.hpp"
#include "nnequiv/model.hpp"
#include "nnequiv/relation.hpp"

namespace nnequiv {

// Negations of the equivalence relations over two output-variable lists.
// Indices are 1-based, as in the relation definitions.

/// OR_i yA_i != yB_i. Throws DimensionError on length mismatch.
Formula encode_strict_neq(std::span<const std::string> ya, std::span<const std::string> yb);

/// sum_i |yA_i - yB_i| >= eps, one abs auxiliary per coordinate.
Formula encode_l1_geq(std::span<const std::string> ya, std::span<const std::string> yb, const Rational& eps,
                      VariableNamer& namer);

/// OR_i |yA_i - yB_i| >= eps, one abs auxiliary per coordinate.
Formula encode_linf_geq(std::span<const std::string> ya, std::span<const std::string> yb, const Rational& eps,
                        VariableNamer& namer);

/// Index i is the argmax of y: strictly greater than every lower index,
/// at least every higher one. Throws RangeError unless 1 <= i <= m.
Formula encode_argmaxis(std::span<const std::string> y, std::size_t i);

/// OR_{i != i'} argmaxis(yA, i) and argmaxis(yB, i'). Throws RangeError for m < 2.
Formula encode_argmax_neq(std::span<const std::string> ya, std::span<const std::string> yb);

/// Exactly p-1 indices beat index i in y, where j beats i when y_j > y_i or
/// (y_j = y_i and j < i). Expanded over index subsets.
Formula encode_rankis(std::span<const std::string> y, std::size_t i, std::size_t p);

/// Negated top-k argsort equivalence:
/// OR_{p <= k} OR_{i != i'} rankis(yA, i, p) and rankis(yB, i', p).
/// Size grows like m^2 * 2^m; intended for m <= 10. Throws RangeError
/// unless 1 <= k <= m.
Formula encode_topk_neq(std::span<const std::string> ya, std::span<const std::string> yb, std::size_t k);

/// Dispatches to the negation matching rel.kind.
Formula encode_negated_relation(const EquivalenceRelation& rel, std::span<const std::string> ya,
                                std::span<const std::string> yb, VariableNamer& namer);

/// Per-feature finite value sets (grid mode); restricts the query's inputs
/// to exactly the points an exhaustive oracle enumerates.
using GridRestriction = std::vector<std::vector<Rational>>;

struct QueryOptions {
    std::optional<GridRestriction> grid;
    /// Fault injection: replace the negated relation by `true`. Test-only.
    bool drop_relation = false;
};

struct VariableCounts {
    std::size_t inputs = 0;
    std::size_t internal_a = 0;  // z + h + aux of network A
    std::size_t internal_b = 0;
    std::size_t relation_aux = 0;
    std::size_t outputs_a = 0;
    std::size_t outputs_b = 0;

    std::size_t total() const { return inputs + internal_a + internal_b + relation_aux + outputs_a + outputs_b; }
};

struct QueryMetadata {
    EquivalenceRelation relation;
    std::string net_a;
    std::string net_b;
    std::size_t input_dim = 0;
    std::size_t output_dim = 0;
    bool bounds_asserted = false;
    bool grid_mode = false;
    bool relation_dropped = false;
    std::vector<std::string> warnings;
    VariableCounts counts;
};

/// Joint satisfiability query: shared input bounds, both network encodings
/// and the negated relation. Unsatisfiable iff the networks are equivalent
/// over the bounded domain.
struct Query {
    std::vector<std::string> declarations;
    /// Top-level conjuncts, in order: bounds, grid, network A, network B, relation.
    std::vector<Formula> assertions;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs_a;
    std::vector<std::string> outputs_b;
    InputBounds bounds;
    QueryMetadata meta;

    /// Conjunction of all assertions.
    Formula formula() const { return Formula::conj(assertions); }
};

/// Feature-wise intersection; a feature bounded in only one network takes
/// that bound. Adds a warning to `warnings` when the bounds differ.
InputBounds intersect_bounds(const Network& a, const Network& b, std::vector<std::string>& warnings);

/// Throws DimensionError for mismatched input/output dimensions and
/// RangeError when the relation is invalid for the output dimension.
Query build_query(const Network& net_a, const Network& net_b, const EquivalenceRelation& rel,
                  const QueryOptions& options = {});

}  // namespace nnequiv
