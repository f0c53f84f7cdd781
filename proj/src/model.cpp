#include "nnequiv/model.hpp"

#include <fstream>
#include <sstream>

#include "json_exact.hpp"
#include "nnequiv/error.hpp"

namespace nnequiv {

using nlohmann::json;

std::string_view to_string(Activation act) {
    switch (act) {
    case Activation::ReLU:
        return "relu";
    case Activation::HardTanh:
        return "hardtanh";
    case Activation::Linear:
        return "linear";
    }
    return "?";
}

Activation parse_activation(std::string_view name) {
    if (name == "relu") {
        return Activation::ReLU;
    }
    if (name == "hardtanh") {
        return Activation::HardTanh;
    }
    if (name == "linear") {
        return Activation::Linear;
    }
    throw ValidationError("unsupported activation '" + std::string(name) +
                          "' (expected relu, hardtanh or linear)");
}

std::size_t param_count(const Network& net) {
    std::size_t total = 0;
    for (const Layer& layer : net.layers) {
        total += layer.input_size() * layer.output_size() + layer.output_size();
    }
    return total;
}

std::vector<Violation> validate(const Network& net) {
    std::vector<Violation> out;
    auto layer_violation = [&](std::size_t index, std::string msg) {
        out.push_back({index, 0, "layer " + std::to_string(index) + ": " + std::move(msg)});
    };

    if (net.input_dim == 0) {
        out.push_back({0, 0, "inputs must be a positive integer"});
    }
    if (net.layers.empty()) {
        out.push_back({0, 0, "network has no layers"});
    }

    std::size_t expected_rows = net.input_dim;
    for (std::size_t i = 0; i < net.layers.size(); ++i) {
        const Layer& layer = net.layers[i];
        const std::size_t index = i + 1;
        const std::size_t rows = layer.weights.row_count();
        const std::size_t cols = layer.weights.col_count();

        if (rows != expected_rows) {
            layer_violation(index, "expected " + std::to_string(expected_rows) + " weight rows, found " +
                                       std::to_string(rows));
        }
        bool ragged = false;
        for (std::size_t r = 0; r < rows; ++r) {
            if (layer.weights.rows[r].size() != cols) {
                layer_violation(index, "weight row " + std::to_string(r + 1) + " has " +
                                           std::to_string(layer.weights.rows[r].size()) + " entries, expected " +
                                           std::to_string(cols));
                ragged = true;
            }
        }
        if (rows > 0 && cols == 0) {
            layer_violation(index, "weight rows are empty");
        }
        if (layer.biases.size() != cols && !ragged) {
            layer_violation(index, "expected " + std::to_string(cols) + " biases, found " +
                                       std::to_string(layer.biases.size()));
        }
        expected_rows = cols;
    }

    if (!net.input_bounds.empty() && net.input_bounds.size() != net.input_dim) {
        out.push_back({0, 0, "input_bounds has " + std::to_string(net.input_bounds.size()) +
                                 " entries, expected " + std::to_string(net.input_dim)});
    }
    for (std::size_t j = 0; j < net.input_bounds.size(); ++j) {
        const auto& b = net.input_bounds[j];
        if (b && b->lower > b->upper) {
            out.push_back({0, j + 1, "input bound of feature " + std::to_string(j + 1) + " is empty: " +
                                         b->lower.to_string() + " > " + b->upper.to_string()});
        }
    }
    return out;
}

namespace {

Vector parse_vector(const json& arr, const std::string& what) {
    if (!arr.is_array()) {
        throw ParseError(what + ": expected an array");
    }
    Vector v;
    v.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        v.push_back(detail::json_to_rational(arr[i], what + "[" + std::to_string(i + 1) + "]"));
    }
    return v;
}

}  // namespace

Network parse_network(std::string_view text) {
    const json doc = detail::parse_json_exact(text);
    if (!doc.is_object()) {
        throw ParseError("model document must be a JSON object");
    }

    Network net;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) {
            throw ParseError("name: expected a string");
        }
        net.name = it->get<std::string>();
    }

    auto inputs = doc.find("inputs");
    if (inputs == doc.end() || !inputs->is_number_integer()) {
        throw ParseError("inputs: expected an integer");
    }
    const auto n = inputs->get<std::int64_t>();
    if (n <= 0) {
        throw ParseError("inputs: must be positive");
    }
    net.input_dim = static_cast<std::size_t>(n);

    if (auto it = doc.find("input_bounds"); it != doc.end() && !it->is_null()) {
        if (!it->is_array()) {
            throw ParseError("input_bounds: expected an array");
        }
        for (std::size_t j = 0; j < it->size(); ++j) {
            const json& entry = (*it)[j];
            const std::string what = "input_bounds[" + std::to_string(j + 1) + "]";
            if (entry.is_null()) {
                net.input_bounds.emplace_back(std::nullopt);
                continue;
            }
            if (!entry.is_array() || entry.size() != 2) {
                throw ParseError(what + ": expected [lower, upper] or null");
            }
            net.input_bounds.emplace_back(
                Interval{detail::json_to_rational(entry[0], what), detail::json_to_rational(entry[1], what)});
        }
    }

    auto layers = doc.find("layers");
    if (layers == doc.end() || !layers->is_array()) {
        throw ParseError("layers: expected an array");
    }
    for (std::size_t i = 0; i < layers->size(); ++i) {
        const json& l = (*layers)[i];
        const std::string what = "layers[" + std::to_string(i + 1) + "]";
        if (!l.is_object()) {
            throw ParseError(what + ": expected an object");
        }
        Layer layer;
        auto w = l.find("weights");
        if (w == l.end() || !w->is_array()) {
            throw ParseError(what + ".weights: expected an array of rows");
        }
        for (std::size_t r = 0; r < w->size(); ++r) {
            layer.weights.rows.push_back(parse_vector((*w)[r], what + ".weights[" + std::to_string(r + 1) + "]"));
        }
        auto b = l.find("biases");
        if (b == l.end()) {
            throw ParseError(what + ".biases: missing");
        }
        layer.biases = parse_vector(*b, what + ".biases");
        auto act = l.find("activation");
        if (act == l.end() || !act->is_string()) {
            throw ParseError(what + ".activation: expected a string");
        }
        try {
            layer.activation = parse_activation(act->get<std::string>());
        } catch (const ValidationError& e) {
            throw ValidationError(what + ": " + e.what());
        }
        net.layers.push_back(std::move(layer));
    }

    if (auto it = doc.find("output_scale"); it != doc.end() && !it->is_null()) {
        net.output_scale = detail::json_to_rational(*it, "output_scale");
    }
    return net;
}

Network load_network(std::string_view text) {
    Network net = parse_network(text);
    const auto violations = validate(net);
    if (!violations.empty()) {
        std::string msg = "invalid network";
        if (!net.name.empty()) {
            msg += " '" + net.name + "'";
        }
        for (const auto& v : violations) {
            msg += "\n  " + v.message;
        }
        throw ValidationError(msg);
    }
    return net;
}

Network load_network_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open model file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_network(buf.str());
}

std::string serialize_network(const Network& net) {
    auto number = [](const Rational& r) { return json(detail::rational_to_json_text(r)); };

    json doc = json::object();
    doc["name"] = net.name;
    doc["inputs"] = net.input_dim;
    if (!net.input_bounds.empty()) {
        json bounds = json::array();
        for (const auto& b : net.input_bounds) {
            if (b) {
                bounds.push_back(json::array({number(b->lower), number(b->upper)}));
            } else {
                bounds.push_back(nullptr);
            }
        }
        doc["input_bounds"] = std::move(bounds);
    }
    json layers = json::array();
    for (const Layer& layer : net.layers) {
        json rows = json::array();
        for (const Vector& row : layer.weights.rows) {
            json jr = json::array();
            for (const Rational& w : row) {
                jr.push_back(number(w));
            }
            rows.push_back(std::move(jr));
        }
        json biases = json::array();
        for (const Rational& b : layer.biases) {
            biases.push_back(number(b));
        }
        layers.push_back({{"weights", std::move(rows)},
                          {"biases", std::move(biases)},
                          {"activation", std::string(to_string(layer.activation))}});
    }
    doc["layers"] = std::move(layers);
    if (net.output_scale) {
        doc["output_scale"] = number(*net.output_scale);
    }
    return doc.dump(1) + "\n";
}

}  // namespace nnequiv
