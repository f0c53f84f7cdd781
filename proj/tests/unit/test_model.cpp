#include <doctest.h>

#include "nnequiv/error.hpp"
#include "nnequiv/model.hpp"

using namespace nnequiv;

namespace {

const char* kFig1 = R"({
  "name": "fig1", "inputs": 2, "input_bounds": [[0, 1], ["0", "1"]],
  "layers": [
    {"weights": [[-2, 1], [1, 2]], "biases": [1, 1], "activation": "relu"},
    {"weights": [[2, -1], [-1, -2]], "biases": [2, 2], "activation": "linear"}
  ]
})";

}  // namespace

TEST_CASE("loads the worked example") {
    const Network net = load_network(kFig1);
    CHECK(net.name == "fig1");
    CHECK(net.input_dim == 2);
    CHECK(net.output_dim() == 2);
    REQUIRE(net.layers.size() == 2);
    CHECK(net.layers[0].weights.at(0, 0) == Rational(-2));
    CHECK(net.layers[0].activation == Activation::ReLU);
    CHECK(net.bound(1)->upper == Rational(1));
    CHECK(param_count(net) == 12);
}

TEST_CASE("numbers keep their decimal text") {
    const Network net = load_network(R"({"inputs": 1, "layers": [
        {"weights": [[0.1]], "biases": [1e-7], "activation": "linear"}], "output_scale": 1.04})");
    CHECK(net.layers[0].weights.at(0, 0) == Rational(1, 10));
    CHECK(net.layers[0].biases[0] == Rational(1, 10000000));
    CHECK(*net.output_scale == Rational(104, 100));
    CHECK_FALSE(net.bound(0).has_value());
}

TEST_CASE("serialize round-trips exactly") {
    Network net = load_network(kFig1);
    net.layers[1].biases[0] = Rational(1, 3);
    net.output_scale = Rational::parse("1.04");
    const Network again = load_network(serialize_network(net));
    CHECK(again == net);
    CHECK(serialize_network(again) == serialize_network(net));
}

TEST_CASE("dimension mismatches are reported per layer") {
    Network net = load_network(kFig1);
    net.layers[1].weights.rows.pop_back();
    const auto v = validate(net);
    REQUIRE(v.size() == 1);
    CHECK(v[0].layer == 2);
    CHECK(v[0].message == "layer 2: expected 2 weight rows, found 1");
}

TEST_CASE("invalid documents") {
    CHECK_THROWS_AS(load_network("[1, 2]"), ParseError);
    CHECK_THROWS_AS(load_network("{"), ParseError);
    CHECK_THROWS_AS(load_network(R"({"inputs": 1, "layers": [
        {"weights": [[1]], "biases": [0], "activation": "sigmoid"}]})"),
                    ValidationError);
    CHECK_THROWS_AS(load_network(R"({"inputs": 1, "layers": [
        {"weights": [[1]], "biases": [0, 1], "activation": "relu"}]})"),
                    ValidationError);
    CHECK_THROWS_AS(load_network(R"({"inputs": 2, "input_bounds": [[0, 1]], "layers": [
        {"weights": [[1], [1]], "biases": [0], "activation": "relu"}]})"),
                    ValidationError);
    CHECK_THROWS_AS(load_network(R"({"inputs": 1, "input_bounds": [[2, 1]], "layers": [
        {"weights": [[1]], "biases": [0], "activation": "relu"}]})"),
                    ValidationError);
    CHECK_THROWS_AS(load_network(R"({"inputs": 1, "layers": [
        {"weights": [["abc"]], "biases": [0], "activation": "relu"}]})"),
                    ParseError);
    CHECK_THROWS_AS(load_network_file("/nonexistent/model.json"), Error);
}

TEST_CASE("null bounds leave a feature unconstrained") {
    const Network net = load_network(R"({"inputs": 2, "input_bounds": [null, [-1, 1]], "layers": [
        {"weights": [[1], [1]], "biases": [0], "activation": "linear"}]})");
    CHECK_FALSE(net.bound(0).has_value());
    CHECK(net.bound(1)->lower == Rational(-1));
}
