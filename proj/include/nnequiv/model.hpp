#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nnequiv/rational.hpp"

namespace nnequiv {

enum class Activation { ReLU, HardTanh, Linear };

/// "relu", "hardtanh" or "linear".
std::string_view to_string(Activation act);
/// Inverse of to_string; throws ValidationError for unsupported names.
Activation parse_activation(std::string_view name);

using Vector = std::vector<Rational>;

/// Dense row-major matrix, rows = source nodes, columns = destination nodes
/// (the x·W orientation).
struct Matrix {
    std::vector<Vector> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return rows.empty() ? 0 : rows.front().size(); }
    const Rational& at(std::size_t r, std::size_t c) const { return rows[r][c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

struct Layer {
    Matrix weights;
    Vector biases;
    Activation activation = Activation::Linear;

    std::size_t input_size() const { return weights.row_count(); }
    std::size_t output_size() const { return weights.col_count(); }

    friend bool operator==(const Layer&, const Layer&) = default;
};

struct Interval {
    Rational lower;
    Rational upper;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Per-feature closed interval; nullopt means the feature is unconstrained.
using InputBounds = std::vector<std::optional<Interval>>;

struct Network {
    std::string name;
    std::size_t input_dim = 0;
    std::vector<Layer> layers;
    InputBounds input_bounds;
    std::optional<Rational> output_scale;

    std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().output_size(); }

    /// Bounds of feature j (0-based); nullopt when absent or unbounded.
    std::optional<Interval> bound(std::size_t feature) const {
        return feature < input_bounds.size() ? input_bounds[feature] : std::nullopt;
    }

    friend bool operator==(const Network&, const Network&) = default;
};

/// Number of scalar parameters: sum over layers of rows*cols + cols.
std::size_t param_count(const Network& net);

/// One invariant breach found by validate().
struct Violation {
    /// 1-based layer index, 0 when the violation is not about a layer.
    std::size_t layer = 0;
    /// 1-based feature index, 0 when not about an input bound.
    std::size_t feature = 0;
    std::string message;
};

/// Every invariant breach of `net`; an empty list means valid.
std::vector<Violation> validate(const Network& net);

/// Parses the JSON model document without structural validation.
/// Throws ParseError for malformed documents and ValidationError for
/// unsupported activation names.
Network parse_network(std::string_view text);

/// parse_network followed by validate; throws ValidationError listing every
/// violation if the network is not valid.
Network load_network(std::string_view text);

/// Reads and loads a model file from disk.
Network load_network_file(const std::string& path);

/// Serializes to the model file format. Every number is written as a string
/// so the document round-trips exactly through load_network.
std::string serialize_network(const Network& net);

}  // namespace nnequiv
