#pragma once

#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "nnequiv/rational.hpp"

namespace nnequiv {

/// Variable name -> exact value.
using Assignment = std::unordered_map<std::string, Rational>;

/// Linear term over rational-valued variables.
///
/// The only multiplication is by a rational constant, so every term is
/// linear by construction. Nodes are immutable and cheap to copy.
class Term {
public:
    struct Var {
        std::string name;
    };
    struct Const {
        Rational value;
    };
    struct Sum {
        std::vector<Term> terms;
    };
    struct Scale {
        Rational factor;
        std::shared_ptr<const Term> term;
    };
    using Node = std::variant<Var, Const, Sum, Scale>;

    static Term var(std::string name);
    static Term constant(Rational value);
    static Term sum(std::vector<Term> terms);
    static Term scale(Rational factor, Term term);

    /// sum_i coeff_i * term_i + constant, dropping zero coefficients, emitting
    /// unit coefficients as bare terms and omitting a zero constant. An empty
    /// result is the constant 0.
    static Term linear(const std::vector<std::pair<Rational, Term>>& parts, const Rational& constant);

    Term operator-() const { return scale(Rational(-1), *this); }

    const Node& node() const { return node_; }

    /// Throws std::out_of_range naming the variable when it is unassigned.
    Rational evaluate(const Assignment& values) const;
    void collect_variables(std::set<std::string>& out) const;
    /// Highest polynomial degree in any variable; 0 or 1 for every Term.
    int degree() const;

private:
    explicit Term(Node node) : node_(std::move(node)) {}

    Node node_;
};

enum class CmpOp { Eq, Neq, Lt, Le, Gt, Ge };

/// Boolean combination of linear comparisons.
class Formula {
public:
    struct True {};
    struct Compare {
        Term lhs;
        CmpOp op;
        Term rhs;
    };
    struct And {
        std::vector<Formula> items;
    };
    struct Or {
        std::vector<Formula> items;
    };
    struct Not {
        std::shared_ptr<const Formula> inner;
    };
    using Node = std::variant<True, Compare, And, Or, Not>;

    Formula() : node_(True{}) {}

    static Formula truth() { return Formula(); }
    static Formula compare(Term lhs, CmpOp op, Term rhs);
    /// Empty conjunction is `true`; a single item is returned unwrapped.
    static Formula conj(std::vector<Formula> items);
    /// A single item is returned unwrapped. An empty disjunction is false,
    /// represented as not(true).
    static Formula disj(std::vector<Formula> items);
    static Formula negate(Formula inner);

    const Node& node() const { return node_; }
    bool is_true() const { return std::holds_alternative<True>(node_); }

    /// Throws std::out_of_range naming the variable when it is unassigned.
    bool evaluate(const Assignment& values) const;
    void collect_variables(std::set<std::string>& out) const;

private:
    explicit Formula(Node node) : node_(std::move(node)) {}

    Node node_;
};

// Shorthands for building comparisons.
inline Formula eq(Term a, Term b) { return Formula::compare(std::move(a), CmpOp::Eq, std::move(b)); }
inline Formula neq(Term a, Term b) { return Formula::compare(std::move(a), CmpOp::Neq, std::move(b)); }
inline Formula lt(Term a, Term b) { return Formula::compare(std::move(a), CmpOp::Lt, std::move(b)); }
inline Formula le(Term a, Term b) { return Formula::compare(std::move(a), CmpOp::Le, std::move(b)); }
inline Formula gt(Term a, Term b) { return Formula::compare(std::move(a), CmpOp::Gt, std::move(b)); }
inline Formula ge(Term a, Term b) { return Formula::compare(std::move(a), CmpOp::Ge, std::move(b)); }

/// Top-level conjuncts of f: the items of an And (recursively), nothing for
/// `true`, otherwise f itself.
std::vector<Formula> flatten_conjunction(const Formula& f);

}  // namespace nnequiv
