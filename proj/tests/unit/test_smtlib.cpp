#include <doctest.h>

#include "nnequiv/error.hpp"
#include "nnequiv/smtlib.hpp"

using namespace nnequiv;

TEST_CASE("constants") {
    CHECK(smtlib::constant(Rational(3)) == "3");
    CHECK(smtlib::constant(Rational(-3)) == "(- 3)");
    CHECK(smtlib::constant(Rational::parse("1.04")) == "1.04");
    CHECK(smtlib::constant(Rational(1, 3)) == "(/ 1 3)");
    CHECK(smtlib::constant(Rational(-1, 3)) == "(- (/ 1 3))");
}

TEST_CASE("serialization shape") {
    Query q;
    q.declarations = {"x"};
    q.assertions = {gt(Term::var("x"), Term::constant(Rational(0))), lt(Term::var("x"), Term::constant(Rational(1)))};
    const std::string text = smtlib::serialize(q);
    CHECK(text.find("(declare-fun x () Real)") != std::string::npos);
    CHECK(text.find("(assert (> x 0))") != std::string::npos);
    CHECK(text.find("(assert (< x 1))") != std::string::npos);
    CHECK(text.find("(set-logic QF_LRA)") != std::string::npos);
    CHECK(text.find("(check-sat)") < text.find("(get-model)"));
    CHECK(smtlib::serialize(q) == text);
}

TEST_CASE("model values") {
    CHECK(smtlib::parse_value("3.25") == Rational(13, 4));
    CHECK(smtlib::parse_value("(- (/ 7 2))") == Rational(-7, 2));
    CHECK(smtlib::parse_value("(/ 1.0 3.0)") == Rational(1, 3));
    CHECK(smtlib::parse_value("(/ (- 21) 10)") == Rational(-21, 10));
    CHECK_THROWS_AS(smtlib::parse_value("(foo 1)"), ParseError);
}

TEST_CASE("model formats") {
    const auto z3 = smtlib::parse_model("(\n  (define-fun x () Real\n    (/ 1.0 3.0))\n  (define-fun y () Real 2.0)\n)");
    CHECK(z3.values.at("x") == Rational(1, 3));
    CHECK(z3.values.at("y") == Rational(2));
    const auto wrapped = smtlib::parse_model("(model (define-fun x () Real (- 1.5)))");
    CHECK(wrapped.values.at("x") == Rational(-3, 2));
    const auto yices = smtlib::parse_model("(= x1 1)\n(= b_y2 (/ (- 21) 10))\n");
    CHECK(yices.values.at("b_y2") == Rational(-21, 10));
    const auto fn = smtlib::parse_model("((define-fun f ((a Real)) Real a) (define-fun x () Real 1))");
    CHECK(fn.values.size() == 1);
    CHECK_FALSE(fn.warnings.empty());
    const std::set<std::string> known{"x"};
    const auto filtered = smtlib::parse_model("((define-fun x () Real 1) (define-fun k!0 () Real 2))", &known);
    CHECK(filtered.values.count("k!0") == 0);
    CHECK_THROWS_AS(smtlib::parse_model("(define-fun x () Real"), ParseError);
}

TEST_CASE("responses") {
    const auto unsat = smtlib::parse_response("unsat\n(error \"line 9 column 10: model is not available\")\n");
    REQUIRE(unsat.status.has_value());
    CHECK(*unsat.status == smtlib::Status::Unsat);
    CHECK(unsat.errors.size() == 1);
    const auto sat = smtlib::parse_response("sat\n((define-fun x () Real 1.0))\n");
    CHECK(*sat.status == smtlib::Status::Sat);
    CHECK(sat.body.find("define-fun") != std::string::npos);
    CHECK(*smtlib::parse_response("unknown\n").status == smtlib::Status::Unknown);
    CHECK_FALSE(smtlib::parse_response("garbage\n").status.has_value());
}
