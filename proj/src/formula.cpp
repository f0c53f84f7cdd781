#include "nnequiv/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace nnequiv {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Term Term::var(std::string name) { return Term(Var{std::move(name)}); }

Term Term::constant(Rational value) { return Term(Const{std::move(value)}); }

Term Term::sum(std::vector<Term> terms) { return Term(Sum{std::move(terms)}); }

Term Term::scale(Rational factor, Term term) {
    return Term(Scale{std::move(factor), std::make_shared<const Term>(std::move(term))});
}

Term Term::linear(const std::vector<std::pair<Rational, Term>>& parts, const Rational& constant) {
    const Rational one(1);
    std::vector<Term> items;
    items.reserve(parts.size() + 1);
    for (const auto& [coeff, term] : parts) {
        if (coeff.is_zero()) {
            continue;
        }
        items.push_back(coeff == one ? term : scale(coeff, term));
    }
    if (!constant.is_zero()) {
        items.push_back(Term::constant(constant));
    }
    if (items.empty()) {
        return Term::constant(Rational(0));
    }
    if (items.size() == 1) {
        return std::move(items.front());
    }
    return sum(std::move(items));
}

Rational Term::evaluate(const Assignment& values) const {
    return std::visit(overloaded{
                          [&](const Var& v) -> Rational {
                              auto it = values.find(v.name);
                              if (it == values.end()) {
                                  throw std::out_of_range("unassigned variable '" + v.name + "'");
                              }
                              return it->second;
                          },
                          [](const Const& c) -> Rational { return c.value; },
                          [&](const Sum& s) -> Rational {
                              Rational acc;
                              for (const Term& t : s.terms) {
                                  acc += t.evaluate(values);
                              }
                              return acc;
                          },
                          [&](const Scale& s) -> Rational { return s.factor * s.term->evaluate(values); },
                      },
                      node_);
}

void Term::collect_variables(std::set<std::string>& out) const {
    std::visit(overloaded{
                   [&](const Var& v) { out.insert(v.name); },
                   [](const Const&) {},
                   [&](const Sum& s) {
                       for (const Term& t : s.terms) {
                           t.collect_variables(out);
                       }
                   },
                   [&](const Scale& s) { s.term->collect_variables(out); },
               },
               node_);
}

int Term::degree() const {
    return std::visit(overloaded{
                          [](const Var&) { return 1; },
                          [](const Const&) { return 0; },
                          [](const Sum& s) {
                              int d = 0;
                              for (const Term& t : s.terms) {
                                  d = std::max(d, t.degree());
                              }
                              return d;
                          },
                          [](const Scale& s) { return s.term->degree(); },
                      },
                      node_);
}

Formula Formula::compare(Term lhs, CmpOp op, Term rhs) { return Formula(Compare{std::move(lhs), op, std::move(rhs)}); }

Formula Formula::conj(std::vector<Formula> items) {
    std::erase_if(items, [](const Formula& f) { return f.is_true(); });
    if (items.empty()) {
        return truth();
    }
    if (items.size() == 1) {
        return std::move(items.front());
    }
    return Formula(And{std::move(items)});
}

Formula Formula::disj(std::vector<Formula> items) {
    if (items.empty()) {
        return negate(truth());
    }
    if (items.size() == 1) {
        return std::move(items.front());
    }
    return Formula(Or{std::move(items)});
}

Formula Formula::negate(Formula inner) { return Formula(Not{std::make_shared<const Formula>(std::move(inner))}); }

bool Formula::evaluate(const Assignment& values) const {
    return std::visit(overloaded{
                          [](const True&) { return true; },
                          [&](const Compare& c) {
                              const Rational a = c.lhs.evaluate(values);
                              const Rational b = c.rhs.evaluate(values);
                              switch (c.op) {
                              case CmpOp::Eq:
                                  return a == b;
                              case CmpOp::Neq:
                                  return a != b;
                              case CmpOp::Lt:
                                  return a < b;
                              case CmpOp::Le:
                                  return a <= b;
                              case CmpOp::Gt:
                                  return a > b;
                              case CmpOp::Ge:
                                  return a >= b;
                              }
                              return false;
                          },
                          [&](const And& a) {
                              return std::all_of(a.items.begin(), a.items.end(),
                                                 [&](const Formula& f) { return f.evaluate(values); });
                          },
                          [&](const Or& o) {
                              return std::any_of(o.items.begin(), o.items.end(),
                                                 [&](const Formula& f) { return f.evaluate(values); });
                          },
                          [&](const Not& n) { return !n.inner->evaluate(values); },
                      },
                      node_);
}

void Formula::collect_variables(std::set<std::string>& out) const {
    std::visit(overloaded{
                   [](const True&) {},
                   [&](const Compare& c) {
                       c.lhs.collect_variables(out);
                       c.rhs.collect_variables(out);
                   },
                   [&](const And& a) {
                       for (const Formula& f : a.items) {
                           f.collect_variables(out);
                       }
                   },
                   [&](const Or& o) {
                       for (const Formula& f : o.items) {
                           f.collect_variables(out);
                       }
                   },
                   [&](const Not& n) { n.inner->collect_variables(out); },
               },
               node_);
}

std::vector<Formula> flatten_conjunction(const Formula& f) {
    std::vector<Formula> out;
    if (f.is_true()) {
        return out;
    }
    if (const auto* a = std::get_if<Formula::And>(&f.node())) {
        for (const Formula& item : a->items) {
            auto sub = flatten_conjunction(item);
            out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
        }
        return out;
    }
    out.push_back(f);
    return out;
}

}  // namespace nnequiv
