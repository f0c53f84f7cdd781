#include "nnequiv/equivalence.hpp"

#include <algorithm>
#include <set>

#include "nnequiv/error.hpp"

namespace nnequiv {

namespace {

Term v(const std::string& name) { return Term::var(name); }

void require_same_length(std::span<const std::string> ya, std::span<const std::string> yb) {
    if (ya.size() != yb.size()) {
        throw DimensionError("output variable lists differ in length: " + std::to_string(ya.size()) + " vs " +
                             std::to_string(yb.size()));
    }
    if (ya.empty()) {
        throw DimensionError("empty output variable list");
    }
}

Term difference(const std::string& a, const std::string& b) { return Term::sum({v(a), -v(b)}); }

// j beats i (both 1-based): y_j > y_i, or equal with the lower index.
Formula beats(std::span<const std::string> y, std::size_t j, std::size_t i) {
    return j < i ? ge(v(y[j - 1]), v(y[i - 1])) : gt(v(y[j - 1]), v(y[i - 1]));
}

Formula does_not_beat(std::span<const std::string> y, std::size_t j, std::size_t i) {
    return j < i ? lt(v(y[j - 1]), v(y[i - 1])) : le(v(y[j - 1]), v(y[i - 1]));
}

}  // namespace

Formula encode_strict_neq(std::span<const std::string> ya, std::span<const std::string> yb) {
    require_same_length(ya, yb);
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < ya.size(); ++i) {
        parts.push_back(neq(v(ya[i]), v(yb[i])));
    }
    return Formula::disj(std::move(parts));
}

Formula encode_l1_geq(std::span<const std::string> ya, std::span<const std::string> yb, const Rational& eps,
                      VariableNamer& namer) {
    require_same_length(ya, yb);
    std::vector<Formula> parts;
    std::vector<Term> abs_terms;
    for (std::size_t i = 0; i < ya.size(); ++i) {
        auto [a, def] = encode_abs(difference(ya[i], yb[i]), namer);
        parts.push_back(std::move(def));
        abs_terms.push_back(v(a));
    }
    Term total = abs_terms.size() == 1 ? abs_terms.front() : Term::sum(std::move(abs_terms));
    parts.push_back(ge(std::move(total), Term::constant(eps)));
    return Formula::conj(std::move(parts));
}

Formula encode_linf_geq(std::span<const std::string> ya, std::span<const std::string> yb, const Rational& eps,
                        VariableNamer& namer) {
    require_same_length(ya, yb);
    std::vector<Formula> parts;
    std::vector<Formula> any_large;
    for (std::size_t i = 0; i < ya.size(); ++i) {
        auto [a, def] = encode_abs(difference(ya[i], yb[i]), namer);
        parts.push_back(std::move(def));
        any_large.push_back(ge(v(a), Term::constant(eps)));
    }
    parts.push_back(Formula::disj(std::move(any_large)));
    return Formula::conj(std::move(parts));
}

Formula encode_argmaxis(std::span<const std::string> y, std::size_t i) {
    const std::size_t m = y.size();
    if (i < 1 || i > m) {
        throw RangeError("argmaxis index " + std::to_string(i) + " outside 1.." + std::to_string(m));
    }
    std::vector<Formula> parts;
    for (std::size_t j = 1; j <= m; ++j) {
        if (j < i) {
            parts.push_back(gt(v(y[i - 1]), v(y[j - 1])));
        } else if (j > i) {
            parts.push_back(ge(v(y[i - 1]), v(y[j - 1])));
        }
    }
    return Formula::conj(std::move(parts));
}

Formula encode_argmax_neq(std::span<const std::string> ya, std::span<const std::string> yb) {
    require_same_length(ya, yb);
    const std::size_t m = ya.size();
    if (m < 2) {
        throw RangeError("argmax relation requires at least 2 outputs");
    }
    std::vector<Formula> parts;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t i2 = 1; i2 <= m; ++i2) {
            if (i != i2) {
                parts.push_back(Formula::conj({encode_argmaxis(ya, i), encode_argmaxis(yb, i2)}));
            }
        }
    }
    return Formula::disj(std::move(parts));
}

Formula encode_rankis(std::span<const std::string> y, std::size_t i, std::size_t p) {
    const std::size_t m = y.size();
    if (i < 1 || i > m || p < 1 || p > m) {
        throw RangeError("rankis(i=" + std::to_string(i) + ", p=" + std::to_string(p) + ") outside 1.." +
                         std::to_string(m));
    }
    std::vector<std::size_t> others;
    for (std::size_t j = 1; j <= m; ++j) {
        if (j != i) {
            others.push_back(j);
        }
    }
    // Walk all (p-1)-subsets of `others` with a selection mask.
    std::vector<bool> chosen(others.size(), false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(p - 1), true);
    std::vector<Formula> cases;
    do {
        std::vector<Formula> parts;
        for (std::size_t t = 0; t < others.size(); ++t) {
            parts.push_back(chosen[t] ? beats(y, others[t], i) : does_not_beat(y, others[t], i));
        }
        cases.push_back(Formula::conj(std::move(parts)));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return Formula::disj(std::move(cases));
}

Formula encode_topk_neq(std::span<const std::string> ya, std::span<const std::string> yb, std::size_t k) {
    require_same_length(ya, yb);
    const std::size_t m = ya.size();
    if (k < 1 || k > m) {
        throw RangeError("topk requires 1 <= k <= m, got k=" + std::to_string(k) + " with m=" + std::to_string(m));
    }
    std::vector<Formula> parts;
    for (std::size_t p = 1; p <= k; ++p) {
        std::vector<Formula> rank_a;
        std::vector<Formula> rank_b;
        for (std::size_t i = 1; i <= m; ++i) {
            rank_a.push_back(encode_rankis(ya, i, p));
            rank_b.push_back(encode_rankis(yb, i, p));
        }
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t i2 = 1; i2 <= m; ++i2) {
                if (i != i2) {
                    parts.push_back(Formula::conj({rank_a[i - 1], rank_b[i2 - 1]}));
                }
            }
        }
    }
    return Formula::disj(std::move(parts));
}

Formula encode_negated_relation(const EquivalenceRelation& rel, std::span<const std::string> ya,
                                std::span<const std::string> yb, VariableNamer& namer) {
    rel.check_for_output_dim(ya.size());
    switch (rel.kind) {
    case RelationKind::Strict:
        return encode_strict_neq(ya, yb);
    case RelationKind::L1:
        return encode_l1_geq(ya, yb, *rel.epsilon, namer);
    case RelationKind::LInf:
        return encode_linf_geq(ya, yb, *rel.epsilon, namer);
    case RelationKind::Argmax:
        return encode_argmax_neq(ya, yb);
    case RelationKind::TopK:
        return encode_topk_neq(ya, yb, *rel.k);
    }
    throw RangeError("unknown relation");
}

InputBounds intersect_bounds(const Network& a, const Network& b, std::vector<std::string>& warnings) {
    InputBounds out(a.input_dim);
    std::vector<std::size_t> differing;
    for (std::size_t j = 0; j < a.input_dim; ++j) {
        const auto ba = a.bound(j);
        const auto bb = b.bound(j);
        if (ba != bb) {
            differing.push_back(j + 1);
        }
        if (ba && bb) {
            out[j] = Interval{std::max(ba->lower, bb->lower), std::min(ba->upper, bb->upper)};
            if (out[j]->lower > out[j]->upper) {
                warnings.push_back("input bounds of feature " + std::to_string(j + 1) +
                                   " do not intersect; the query is trivially unsatisfiable");
            }
        } else {
            out[j] = ba ? ba : bb;
        }
    }
    if (!differing.empty()) {
        std::string list;
        for (std::size_t j : differing) {
            list += (list.empty() ? "" : ",") + std::to_string(j);
        }
        warnings.push_back("input bounds differ between networks on feature(s) " + list +
                           "; using their intersection");
    }
    return out;
}

Query build_query(const Network& net_a, const Network& net_b, const EquivalenceRelation& rel,
                  const QueryOptions& options) {
    if (net_a.input_dim != net_b.input_dim) {
        throw DimensionError("input dimensions differ: " + std::to_string(net_a.input_dim) + " vs " +
                             std::to_string(net_b.input_dim));
    }
    if (net_a.output_dim() != net_b.output_dim()) {
        throw DimensionError("output dimensions differ: " + std::to_string(net_a.output_dim()) + " vs " +
                             std::to_string(net_b.output_dim()));
    }
    rel.check_for_output_dim(net_a.output_dim());

    Query q;
    q.meta.relation = rel;
    q.meta.net_a = net_a.name;
    q.meta.net_b = net_b.name;
    q.meta.input_dim = net_a.input_dim;
    q.meta.output_dim = net_a.output_dim();

    for (std::size_t j = 1; j <= net_a.input_dim; ++j) {
        q.inputs.push_back(VariableNamer::input(j));
    }
    q.declarations = q.inputs;

    q.bounds = intersect_bounds(net_a, net_b, q.meta.warnings);
    Formula bounds = encode_input_bounds(q.bounds, q.inputs);
    q.meta.bounds_asserted = !bounds.is_true();
    auto append = [&q](const Formula& f) {
        auto items = flatten_conjunction(f);
        q.assertions.insert(q.assertions.end(), items.begin(), items.end());
    };
    append(bounds);

    if (options.grid) {
        const GridRestriction& grid = *options.grid;
        if (grid.size() != net_a.input_dim) {
            throw DimensionError("grid restriction has " + std::to_string(grid.size()) + " features, expected " +
                                 std::to_string(net_a.input_dim));
        }
        for (std::size_t j = 0; j < grid.size(); ++j) {
            std::vector<Formula> choices;
            for (const Rational& value : grid[j]) {
                choices.push_back(eq(Term::var(q.inputs[j]), Term::constant(value)));
            }
            q.assertions.push_back(Formula::disj(std::move(choices)));
        }
        q.meta.grid_mode = true;
    }

    VariableNamer namer_a("a");
    VariableNamer namer_b("b");
    VariableNamer namer_rel("r");
    NetworkEncoding enc_a = encode_network(net_a, namer_a, q.inputs);
    NetworkEncoding enc_b = encode_network(net_b, namer_b, q.inputs);
    append(enc_a.formula);
    append(enc_b.formula);

    if (options.drop_relation) {
        q.meta.relation_dropped = true;
        q.meta.warnings.push_back("negated relation dropped (fault injection)");
    } else {
        append(encode_negated_relation(rel, enc_a.outputs, enc_b.outputs, namer_rel));
    }

    for (const VariableNamer* n : {&namer_a, &namer_b, &namer_rel}) {
        q.declarations.insert(q.declarations.end(), n->declared().begin(), n->declared().end());
    }
    q.outputs_a = std::move(enc_a.outputs);
    q.outputs_b = std::move(enc_b.outputs);

    q.meta.counts.inputs = q.inputs.size();
    q.meta.counts.internal_a = namer_a.internal_count();
    q.meta.counts.internal_b = namer_b.internal_count();
    q.meta.counts.relation_aux = namer_rel.internal_count();
    q.meta.counts.outputs_a = namer_a.output_count();
    q.meta.counts.outputs_b = namer_b.output_count();
    return q;
}

}  // namespace nnequiv
