#include <doctest.h>

#include <random>

#include "nnequiv/error.hpp"
#include "nnequiv/oracle.hpp"
#include "random_nets.hpp"
#include "test_env.hpp"

using namespace nnequiv;

TEST_CASE("domains") {
    const auto points = enumerate_all(DiscreteDomain::bits(2));
    REQUIRE(points.size() == 4);
    CHECK(points[0] == Vector{Rational(0), Rational(0)});
    CHECK(points[1] == Vector{Rational(0), Rational(1)});
    CHECK(points[3] == Vector{Rational(1), Rational(1)});
    CHECK(DiscreteDomain::bits(10).cardinality() == 1024);
    CHECK(enumerate_all(DiscreteDomain::grid(1, Rational(0), Rational(1), Rational(1, 2))).size() == 3);
    CHECK(DiscreteDomain::bits(70).cardinality() == UINT64_MAX);
    CHECK_THROWS_AS(DiscreteDomain({{Rational(0)}, {}}), ValidationError);
    CHECK_THROWS_AS(DiscreteDomain::grid(1, Rational(0), Rational(1), Rational(0)), RangeError);
    CHECK_THROWS_AS(enumerate_all(DiscreteDomain::bits(21)), RangeError);
}

TEST_CASE("worked example verdicts") {
    const Network fig1 = load_network_file(testing::fixture("fig1.json"));
    const Network pert = load_network_file(testing::fixture("fig1_bias_pert.json"));
    const auto bits = DiscreteDomain::bits(2);

    CHECK(exhaustive_check(fig1, fig1, EquivalenceRelation::strict(), bits).equivalent);
    const OracleResult r = exhaustive_check(fig1, pert, EquivalenceRelation::strict(), bits);
    CHECK_FALSE(r.equivalent);
    CHECK(r.index == std::optional<std::uint64_t>(0));
    CHECK(r.input == Vector{Rational(0), Rational(0)});
    CHECK(r.outputs_a == Vector{Rational(3), Rational(-1)});
    CHECK(r.outputs_b == Vector{Rational(4), Rational(-1)});
    CHECK(exhaustive_check(fig1, pert, EquivalenceRelation::linf(Rational(2)), bits).equivalent);
}

TEST_CASE("domain must respect the bounds") {
    const Network fig1 = load_network_file(testing::fixture("fig1.json"));
    const DiscreteDomain wide({{Rational(0), Rational(2)}, {Rational(0)}});
    CHECK_THROWS_AS(exhaustive_check(fig1, fig1, EquivalenceRelation::strict(), wide), ValidationError);
}

TEST_CASE("sharded runs report the first violation") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 10; ++n) {
        testing::NetShape shape;
        shape.inputs = 8;
        shape.hidden = {6};
        shape.outputs = 3;
        const Network a = testing::random_network(rng, shape);
        const Network b = testing::nudged(rng, a, Rational(1, 10));
        const auto domain = DiscreteDomain::bits(8);
        const OracleResult one = exhaustive_check(a, b, EquivalenceRelation::argmax(), domain, kDefaultOracleBudget, 1);
        const OracleResult four = exhaustive_check(a, b, EquivalenceRelation::argmax(), domain, kDefaultOracleBudget, 4);
        CHECK(one.equivalent == four.equivalent);
        CHECK(one.index == four.index);
        CHECK(one.input == four.input);
    }
}
