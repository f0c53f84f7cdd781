#include "nnequiv/counterexample.hpp"

#include "nnequiv/encoder.hpp"
#include "nnequiv/error.hpp"
#include "nnequiv/evaluator.hpp"

namespace nnequiv {

Vector extract_input(const Assignment& assignment, std::size_t input_dim) {
    Vector x;
    x.reserve(input_dim);
    for (std::size_t j = 1; j <= input_dim; ++j) {
        const std::string name = VariableNamer::input(j);
        auto it = assignment.find(name);
        if (it == assignment.end()) {
            throw ValidationError("solver model has no value for input " + name);
        }
        x.push_back(it->second);
    }
    return x;
}

Certification certify_input(const Network& net_a, const Network& net_b, const EquivalenceRelation& rel,
                            const Vector& input) {
    Vector ya = forward(net_a, input);
    Vector yb = forward(net_b, input);
    PointCheck check = relation_violated_at(rel, ya, yb);
    if (!check.violated) {
        return Rejection{input, std::move(ya), std::move(yb),
                         "replayed outputs satisfy " + describe(rel) + " (" + check.witness + ")"};
    }
    const bool in_bounds = within_bounds(net_a, input) && within_bounds(net_b, input);
    return Counterexample{input, std::move(ya), std::move(yb), rel, std::move(check.witness), in_bounds};
}

Certification certify(const Network& net_a, const Network& net_b, const EquivalenceRelation& rel,
                      const Assignment& assignment) {
    return certify_input(net_a, net_b, rel, extract_input(assignment, net_a.input_dim));
}

}  // namespace nnequiv
