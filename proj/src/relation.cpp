#include "nnequiv/relation.hpp"

#include "nnequiv/error.hpp"

namespace nnequiv {

std::string_view to_string(RelationKind kind) {
    switch (kind) {
    case RelationKind::Strict:
        return "strict";
    case RelationKind::L1:
        return "l1";
    case RelationKind::LInf:
        return "linf";
    case RelationKind::Argmax:
        return "argmax";
    case RelationKind::TopK:
        return "topk";
    }
    return "?";
}

RelationKind parse_relation_kind(std::string_view name) {
    for (auto kind : {RelationKind::Strict, RelationKind::L1, RelationKind::LInf, RelationKind::Argmax,
                      RelationKind::TopK}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    throw RangeError("unknown relation '" + std::string(name) + "' (expected strict, l1, linf, argmax or topk)");
}

void EquivalenceRelation::check_for_output_dim(std::size_t m) const {
    if (m == 0) {
        throw RangeError("output dimension must be positive");
    }
    switch (kind) {
    case RelationKind::Strict:
        return;
    case RelationKind::L1:
    case RelationKind::LInf:
        if (!epsilon) {
            throw RangeError(std::string(to_string(kind)) + " relation requires epsilon");
        }
        if (epsilon->sign() <= 0) {
            throw RangeError("epsilon must be > 0, got " + epsilon->to_string());
        }
        return;
    case RelationKind::Argmax:
        if (m < 2) {
            throw RangeError("argmax relation requires at least 2 outputs, networks have " + std::to_string(m));
        }
        return;
    case RelationKind::TopK:
        if (!k) {
            throw RangeError("topk relation requires k");
        }
        if (*k < 1 || *k > m) {
            throw RangeError("topk requires 1 <= k <= m, got k=" + std::to_string(*k) +
                             " with m=" + std::to_string(m));
        }
        return;
    }
}

std::string describe(const EquivalenceRelation& rel) {
    std::string out(to_string(rel.kind));
    if (rel.epsilon) {
        out += "(eps=" + rel.epsilon->to_string() + ")";
    }
    if (rel.k) {
        out += "(k=" + std::to_string(*rel.k) + ")";
    }
    return out;
}

}  // namespace nnequiv
