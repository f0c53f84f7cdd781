#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nnequiv/model.hpp"

namespace nnequiv::testing {

enum class InputStyle { Bits, Box, Unbounded };

struct NetShape {
    std::size_t inputs = 2;
    std::vector<std::size_t> hidden;
    std::size_t outputs = 2;
    Activation hidden_activation = Activation::ReLU;
    Activation output_activation = Activation::Linear;
    InputStyle style = InputStyle::Bits;
    bool with_scale = false;
};

/// Weights and biases are random 2-digit decimals in [-1, 1]; box bounds
/// are 2-digit decimals around zero.
Network random_network(std::mt19937_64& rng, const NetShape& shape, const std::string& name = "rand");

/// Random small shape: 1-3 hidden layers of 2-max_nodes nodes.
NetShape random_shape(std::mt19937_64& rng, std::size_t max_inputs, std::size_t max_nodes, std::size_t max_outputs);

/// Same function, different parameters: every hidden ReLU neuron is scaled
/// by a random positive factor (undone in the next layer) and the hidden
/// neurons of each layer are permuted. Hidden layers must all be ReLU.
Network equivalent_rewrite(std::mt19937_64& rng, const Network& net);

/// Copy with one parameter changed by `delta`.
Network nudged(std::mt19937_64& rng, const Network& net, const Rational& delta);

/// Uniform 3-digit decimal point inside the bounds (unbounded features use
/// [-2, 2]).
Vector random_point(std::mt19937_64& rng, const Network& net);

/// Decimal with `digits` fractional digits uniformly in [lo, hi].
Rational random_decimal(std::mt19937_64& rng, double lo, double hi, int digits);

}  // namespace nnequiv::testing
