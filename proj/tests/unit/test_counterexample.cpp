#include <doctest.h>

#include "nnequiv/check.hpp"
#include "nnequiv/counterexample.hpp"
#include "nnequiv/error.hpp"
#include "test_env.hpp"

using namespace nnequiv;

TEST_CASE("input extraction") {
    const Assignment a{{"x1", Rational(1, 2)}, {"x2", Rational(0)}, {"a_y1", Rational(7)}};
    CHECK(extract_input(a, 2) == Vector{Rational(1, 2), Rational(0)});
    try {
        extract_input(Assignment{{"x1", Rational(1)}}, 2);
        FAIL("expected an error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("x2") != std::string::npos);
    }
}

TEST_CASE("certification replays exactly") {
    const Network fig1 = load_network_file(testing::fixture("fig1.json"));
    const Network pert = load_network_file(testing::fixture("fig1_bias_pert.json"));

    const Certification c = certify(fig1, pert, EquivalenceRelation::strict(),
                                    Assignment{{"x1", Rational(0)}, {"x2", Rational(0)}});
    const auto* cex = std::get_if<Counterexample>(&c);
    REQUIRE(cex != nullptr);
    CHECK(cex->outputs_a == Vector{Rational(3), Rational(-1)});
    CHECK(cex->outputs_b == Vector{Rational(4), Rational(-1)});
    CHECK(cex->bounds_respected);

    const Certification r = certify(fig1, fig1, EquivalenceRelation::strict(),
                                    Assignment{{"x1", Rational(0)}, {"x2", Rational(0)}});
    const auto* rej = std::get_if<Rejection>(&r);
    REQUIRE(rej != nullptr);
    CHECK(rej->outputs_a == rej->outputs_b);

    const Certification outside = certify_input(fig1, pert, EquivalenceRelation::strict(), {Rational(5), Rational(0)});
    REQUIRE(std::holds_alternative<Counterexample>(outside));
    CHECK_FALSE(std::get<Counterexample>(outside).bounds_respected);
}

TEST_CASE("end-to-end checks on the worked example") {
    const Network fig1 = load_network_file(testing::fixture("fig1.json"));
    const Network pert = load_network_file(testing::fixture("fig1_bias_pert.json"));

    CHECK(testing::checked_run(fig1, fig1, EquivalenceRelation::strict(), testing::test_solver()).status() ==
          CheckStatus::Equivalent);

    const CheckOutcome sat = testing::checked_run(fig1, pert, EquivalenceRelation::strict(), testing::test_solver());
    REQUIRE(sat.status() == CheckStatus::NotEquivalent);
    const auto& cex = std::get<Counterexample>(*sat.certification);
    CHECK(cex.outputs_b[0] - cex.outputs_a[0] == Rational(1));

    // The perturbation shifts y1 by exactly 1 everywhere, under every tolerance above 1.
    CHECK(testing::checked_run(fig1, pert, EquivalenceRelation::linf(Rational(2)), testing::test_solver()).status() ==
          CheckStatus::Equivalent);
    CHECK(testing::checked_run(fig1, pert, EquivalenceRelation::linf(Rational(1)), testing::test_solver()).status() ==
          CheckStatus::NotEquivalent);

    QueryOptions faulty;
    faulty.drop_relation = true;
    const CheckOutcome injected =
        testing::checked_run(fig1, fig1, EquivalenceRelation::strict(), testing::test_solver(), faulty);
    CHECK(injected.status() == CheckStatus::SoundnessFailure);
    CHECK(testing::sat_tally().rejected == 0);
}

TEST_CASE("report fields") {
    const Network fig1 = load_network_file(testing::fixture("fig1.json"));
    const Network pert = load_network_file(testing::fixture("fig1_bias_pert.json"));
    const auto rel = EquivalenceRelation::l1(Rational(5));
    const CheckOutcome out = testing::checked_run(fig1, pert, rel, testing::test_solver());
    const auto report = make_report(fig1, pert, out, {"a.json", "b.json", "solver 1.0", 600.0});
    CHECK(report["relation"]["kind"] == "l1");
    CHECK(report["relation"]["epsilon"] == "5");
    CHECK(report["networks"]["a"]["params"] == 12);
    CHECK(report["verdict"] == "unsat");
    CHECK(report["exit_code"] == 0);
    CHECK(report["counterexample"].is_null());
    CHECK(report["bounds_asserted"] == true);
}
