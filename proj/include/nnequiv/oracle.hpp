#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nnequiv/model.hpp"
#include "nnequiv/relation.hpp"

namespace nnequiv {

/// Finite input domain: one value list per feature. Enumeration is
/// lexicographic with the last feature varying fastest.
class DiscreteDomain {
public:
    /// Throws ValidationError if any feature has no values.
    explicit DiscreteDomain(std::vector<std::vector<Rational>> values);

    /// {0,1}^n
    static DiscreteDomain bits(std::size_t n);
    /// lo, lo+step, ... up to hi (inclusive) on each of n features.
    /// Throws RangeError unless step > 0 and lo <= hi.
    static DiscreteDomain grid(std::size_t n, const Rational& lo, const Rational& hi, const Rational& step);

    std::size_t dimension() const { return values_.size(); }
    const std::vector<std::vector<Rational>>& values() const { return values_; }

    /// Product of per-feature counts, saturating at UINT64_MAX.
    std::uint64_t cardinality() const;

    /// The point at a lexicographic position (0-based).
    Vector at(std::uint64_t index) const;

    /// Throws ValidationError naming the first value outside `net`'s bounds.
    void check_within(const Network& net) const;

private:
    std::vector<std::vector<Rational>> values_;
};

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 20;

/// Calls `visit` on every point in lexicographic order until it returns
/// false. Throws RangeError when the cardinality exceeds `budget`.
void enumerate(const DiscreteDomain& domain, const std::function<bool(const Vector&)>& visit,
               std::uint64_t budget = kDefaultOracleBudget);

/// All points, in order (convenience for small domains).
std::vector<Vector> enumerate_all(const DiscreteDomain& domain, std::uint64_t budget = kDefaultOracleBudget);

struct OracleResult {
    bool equivalent = true;
    /// First violating point in enumeration order, when not equivalent.
    std::optional<std::uint64_t> index;
    Vector input;
    Vector outputs_a;
    Vector outputs_b;
    std::string witness;
    std::uint64_t points = 0;
};

/// Decides the relation on every point of the domain with the exact
/// evaluator. `jobs` > 1 shards the domain across threads; the reported
/// witness is always the lowest-index violation.
/// Throws DimensionError, RangeError (budget) or ValidationError (domain
/// outside the networks' bounds).
OracleResult exhaustive_check(const Network& net_a, const Network& net_b, const EquivalenceRelation& rel,
                              const DiscreteDomain& domain, std::uint64_t budget = kDefaultOracleBudget,
                              unsigned jobs = 1);

}  // namespace nnequiv
