#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nnequiv/formula.hpp"
#include "nnequiv/model.hpp"

namespace nnequiv {

/// Hands out the variable names of one network's encoding and records every
/// name it creates, in creation order.
///
/// Inputs are shared between networks and unprefixed (x1..xn); everything
/// else carries the prefix: <p>_l<layer>_z<j>, <p>_l<layer>_h<j>, <p>_y<i>,
/// <p>_aux<n>. Not thread-safe; use one namer per encoding.
class VariableNamer {
public:
    explicit VariableNamer(std::string prefix);

    static std::string input(std::size_t feature);

    std::string pre_activation(std::size_t layer, std::size_t node);
    std::string post_activation(std::size_t layer, std::size_t node);
    std::string output(std::size_t index);
    std::string aux();

    const std::string& prefix() const { return prefix_; }
    const std::vector<std::string>& declared() const { return declared_; }
    /// z, h and aux variables created so far.
    std::size_t internal_count() const { return internal_; }
    std::size_t output_count() const { return outputs_; }

private:
    std::string record(std::string name);

    std::string prefix_;
    std::vector<std::string> declared_;
    std::size_t aux_counter_ = 0;
    std::size_t internal_ = 0;
    std::size_t outputs_ = 0;
};

/// l_j <= x_j and x_j <= u_j for every bounded feature; `true` if none are.
Formula encode_input_bounds(const InputBounds& bounds, std::span<const std::string> inputs);

/// The exact linear expression sum_k in_k * W_kj + b_j for column j.
Term affine_term(const Layer& layer, std::span<const std::string> in_vars, std::size_t column);

/// z_j = sum_k in_k * W_kj + b_j for every column j. With `scale`, the
/// right-hand side is multiplied by it. Throws DimensionError on mismatch.
Formula encode_affine(const Layer& layer, std::span<const std::string> in_vars,
                      std::span<const std::string> out_vars, const std::optional<Rational>& scale = std::nullopt);

/// One (z >= 0 and h = z) or (z < 0 and h = 0) disjunction per node.
Formula encode_relu(std::span<const std::string> z_vars, std::span<const std::string> h_vars);

/// One three-way disjunction per node: saturated high, saturated low, identity.
Formula encode_hardtanh(std::span<const std::string> z_vars, std::span<const std::string> h_vars);

/// Fresh variable a with (t >= 0 and a = t) or (t < 0 and a = -t).
std::pair<std::string, Formula> encode_abs(const Term& t, VariableNamer& namer);

struct NetworkEncoding {
    std::vector<std::string> outputs;
    Formula formula;
};

/// Affine and activation constraints for every layer; output_scale is folded
/// into the final equalities. Input bounds are not included.
/// Throws DimensionError when `inputs` does not match the input dimension.
NetworkEncoding encode_network(const Network& net, VariableNamer& namer, std::span<const std::string> inputs);

}  // namespace nnequiv
