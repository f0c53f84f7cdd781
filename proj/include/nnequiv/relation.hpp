#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "nnequiv/rational.hpp"

namespace nnequiv {

enum class RelationKind { Strict, L1, LInf, Argmax, TopK };

/// Equivalence criterion between two networks' outputs.
///
/// Norm relations carry epsilon (outputs are equivalent when the distance is
/// below it), TopK carries k. Use the named constructors.
struct EquivalenceRelation {
    RelationKind kind = RelationKind::Strict;
    std::optional<Rational> epsilon;
    std::optional<std::size_t> k;

    static EquivalenceRelation strict() { return {RelationKind::Strict, std::nullopt, std::nullopt}; }
    static EquivalenceRelation l1(Rational eps) { return {RelationKind::L1, std::move(eps), std::nullopt}; }
    static EquivalenceRelation linf(Rational eps) { return {RelationKind::LInf, std::move(eps), std::nullopt}; }
    static EquivalenceRelation argmax() { return {RelationKind::Argmax, std::nullopt, std::nullopt}; }
    static EquivalenceRelation topk(std::size_t k) { return {RelationKind::TopK, std::nullopt, k}; }

    /// Throws RangeError unless the parameters fit an output dimension of m.
    void check_for_output_dim(std::size_t m) const;

    friend bool operator==(const EquivalenceRelation&, const EquivalenceRelation&) = default;
};

/// "strict", "l1", "linf", "argmax", "topk".
std::string_view to_string(RelationKind kind);
/// Throws RangeError on unknown names.
RelationKind parse_relation_kind(std::string_view name);

/// Human-readable form such as "linf(eps=10)" or "topk(k=3)".
std::string describe(const EquivalenceRelation& rel);

}  // namespace nnequiv
