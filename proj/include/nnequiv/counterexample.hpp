#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "nnequiv/formula.hpp"
#include "nnequiv/model.hpp"
#include "nnequiv/relation.hpp"

namespace nnequiv {

/// An input on which two networks violate a relation. Outputs come from the
/// exact evaluator, never from the solver model.
struct Counterexample {
    Vector input;
    Vector outputs_a;
    Vector outputs_b;
    EquivalenceRelation relation;
    std::string witness;
    /// Whether the input lies within both networks' declared bounds. A breach
    /// is reported, not rejected.
    bool bounds_respected = true;
};

/// A solver model that does not replay to a violation. Always indicates a
/// bug in the encoder, the model parser or the solver.
struct Rejection {
    Vector input;
    Vector outputs_a;
    Vector outputs_b;
    std::string reason;
};

using Certification = std::variant<Counterexample, Rejection>;

/// Input vector x1..xn from a solver assignment; extra symbols are ignored.
/// Throws ValidationError naming the first missing input.
Vector extract_input(const Assignment& assignment, std::size_t input_dim);

/// Replays the assignment's input through both networks and accepts it only
/// if the relation is violated at the replayed outputs.
Certification certify(const Network& net_a, const Network& net_b, const EquivalenceRelation& rel,
                      const Assignment& assignment);

/// Same as certify, starting from an explicit input.
Certification certify_input(const Network& net_a, const Network& net_b, const EquivalenceRelation& rel,
                            const Vector& input);

}  // namespace nnequiv
