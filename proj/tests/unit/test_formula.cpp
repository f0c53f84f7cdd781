#include <doctest.h>

#include "nnequiv/formula.hpp"
#include "nnequiv/smtlib.hpp"

using namespace nnequiv;

TEST_CASE("linear terms drop zeros and unit coefficients") {
    const Term t = Term::linear({{Rational(-2), Term::var("x1")}, {Rational(1), Term::var("x2")},
                                 {Rational(0), Term::var("x3")}},
                                Rational(1));
    CHECK(smtlib::print(t) == "(+ (* (- 2) x1) x2 1)");
    CHECK(smtlib::print(Term::linear({}, Rational(0))) == "0");
    CHECK(smtlib::print(Term::linear({{Rational(1), Term::var("y")}}, Rational(0))) == "y");
    CHECK(t.degree() == 1);
}

TEST_CASE("evaluation") {
    const Assignment env{{"x", Rational(3)}, {"y", Rational(-1, 2)}};
    const Term t = Term::sum({Term::var("x"), Term::scale(Rational(4), Term::var("y")), Term::constant(Rational(1))});
    CHECK(t.evaluate(env) == Rational(2));
    CHECK(eq(t, Term::constant(Rational(2))).evaluate(env));
    CHECK(neq(t, Term::constant(Rational(2))).evaluate(env) == false);
    CHECK(lt(Term::var("y"), Term::constant(Rational(0))).evaluate(env));
    CHECK(Formula::disj({}).evaluate(env) == false);
    CHECK(Formula::conj({}).evaluate(env));
    CHECK(Formula::negate(Formula::truth()).evaluate(env) == false);
    CHECK_THROWS_AS(Term::var("z").evaluate(env), std::out_of_range);
}

TEST_CASE("conjunctions flatten and collect variables") {
    const Formula f = Formula::conj({Formula::conj({eq(Term::var("a"), Term::var("b")), Formula::truth()}),
                                     le(Term::var("c"), Term::constant(Rational(1)))});
    CHECK(flatten_conjunction(f).size() == 2);
    std::set<std::string> vars;
    f.collect_variables(vars);
    CHECK(vars == std::set<std::string>{"a", "b", "c"});
    const Formula single = Formula::conj({ge(Term::var("a"), Term::constant(Rational(0)))});
    CHECK(std::holds_alternative<Formula::Compare>(single.node()));
}
