#include <doctest.h>

#include "nnequiv/error.hpp"
#include "nnequiv/perturbation.hpp"
#include "test_env.hpp"

using namespace nnequiv;

namespace {

std::size_t differing_parameters(const Network& a, const Network& b) {
    std::size_t n = 0;
    for (std::size_t l = 0; l < a.layers.size(); ++l) {
        for (std::size_t r = 0; r < a.layers[l].weights.rows.size(); ++r) {
            for (std::size_t c = 0; c < a.layers[l].weights.rows[r].size(); ++c) {
                n += a.layers[l].weights.rows[r][c] != b.layers[l].weights.rows[r][c];
            }
        }
        for (std::size_t c = 0; c < a.layers[l].biases.size(); ++c) {
            n += a.layers[l].biases[c] != b.layers[l].biases[c];
        }
    }
    return n;
}

}  // namespace

TEST_CASE("zero changes leave the network intact") {
    const Network net = load_network_file(testing::fixture("bitvec_arch1.json"));
    PerturbationSpec spec;
    spec.count = 0;
    const PerturbationResult r = perturb(net, spec);
    CHECK(r.network == net);
    CHECK(r.changes.empty());
}

TEST_CASE("changes are distinct, in range and reproducible") {
    const Network net = load_network_file(testing::fixture("bitvec_arch1.json"));
    for (std::size_t count : {1, 2, 5, 132}) {
        for (std::uint64_t seed : {1, 7, 123}) {
            PerturbationSpec spec;
            spec.count = count;
            spec.seed = seed;
            const PerturbationResult r = perturb(net, spec);
            CHECK(differing_parameters(net, r.network) == count);
            REQUIRE(r.changes.size() == count);
            for (const auto& c : r.changes) {
                const Rational mag = (c.new_value - c.old_value).abs();
                CHECK(mag >= spec.lower);
                CHECK(mag <= spec.upper);
            }
            CHECK(perturb(net, spec).network == r.network);
            CHECK(serialize_changelog(spec, perturb(net, spec).changes) == serialize_changelog(spec, r.changes));
        }
    }
}

TEST_CASE("weights-only and log-uniform options") {
    const Network net = load_network_file(testing::fixture("fig1.json"));
    PerturbationSpec spec;
    spec.count = 8;
    spec.weights_only = true;
    spec.sampling = MagnitudeSampling::LogUniform;
    const PerturbationResult r = perturb(net, spec);
    for (const auto& c : r.changes) {
        CHECK(c.kind == ParamKind::Weight);
        CHECK(c.row >= 1);
    }
    spec.count = 9;
    CHECK_THROWS_AS(perturb(net, spec), RangeError);
}

TEST_CASE("invalid ranges") {
    const Network net = load_network_file(testing::fixture("fig1.json"));
    PerturbationSpec spec;
    spec.lower = Rational(1, 10);
    spec.upper = Rational(1, 100);
    CHECK_THROWS_AS(perturb(net, spec), RangeError);
    spec.lower = Rational(0);
    spec.upper = Rational(1);
    CHECK_THROWS_AS(perturb(net, spec), RangeError);
    spec.lower = Rational(1, 10000000000);
    spec.upper = Rational(2, 10000000000);
    CHECK_THROWS_AS(perturb(net, spec), RangeError);
}

TEST_CASE("perturbed copies serialize exactly") {
    const Network net = load_network_file(testing::fixture("mpc.json"));
    PerturbationSpec spec;
    spec.count = 3;
    spec.seed = 42;
    const PerturbationResult r = perturb(net, spec);
    CHECK(r.network.name == "mpc_pert");
    CHECK(load_network(serialize_network(r.network)) == r.network);
}
