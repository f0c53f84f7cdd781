#include "nnequiv/encoder.hpp"

#include "nnequiv/error.hpp"

namespace nnequiv {

namespace {

Term v(const std::string& name) { return Term::var(name); }
Term c(std::int64_t value) { return Term::constant(Rational(value)); }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b) +
                             " variables");
    }
}

}  // namespace

VariableNamer::VariableNamer(std::string prefix) : prefix_(std::move(prefix)) {}

std::string VariableNamer::input(std::size_t feature) { return "x" + std::to_string(feature); }

std::string VariableNamer::record(std::string name) {
    declared_.push_back(name);
    return name;
}

std::string VariableNamer::pre_activation(std::size_t layer, std::size_t node) {
    ++internal_;
    return record(prefix_ + "_l" + std::to_string(layer) + "_z" + std::to_string(node));
}

std::string VariableNamer::post_activation(std::size_t layer, std::size_t node) {
    ++internal_;
    return record(prefix_ + "_l" + std::to_string(layer) + "_h" + std::to_string(node));
}

std::string VariableNamer::output(std::size_t index) {
    ++outputs_;
    return record(prefix_ + "_y" + std::to_string(index));
}

std::string VariableNamer::aux() {
    ++internal_;
    return record(prefix_ + "_aux" + std::to_string(++aux_counter_));
}

Formula encode_input_bounds(const InputBounds& bounds, std::span<const std::string> inputs) {
    std::vector<Formula> parts;
    for (std::size_t j = 0; j < inputs.size() && j < bounds.size(); ++j) {
        if (const auto& b = bounds[j]) {
            parts.push_back(le(Term::constant(b->lower), v(inputs[j])));
            parts.push_back(le(v(inputs[j]), Term::constant(b->upper)));
        }
    }
    return Formula::conj(std::move(parts));
}

Term affine_term(const Layer& layer, std::span<const std::string> in_vars, std::size_t column) {
    std::vector<std::pair<Rational, Term>> parts;
    parts.reserve(in_vars.size());
    for (std::size_t k = 0; k < in_vars.size(); ++k) {
        parts.emplace_back(layer.weights.at(k, column), v(in_vars[k]));
    }
    return Term::linear(parts, layer.biases[column]);
}

Formula encode_affine(const Layer& layer, std::span<const std::string> in_vars,
                      std::span<const std::string> out_vars, const std::optional<Rational>& scale) {
    require_same_size(in_vars.size(), layer.input_size(), "affine inputs");
    require_same_size(out_vars.size(), layer.output_size(), "affine outputs");
    std::vector<Formula> parts;
    parts.reserve(out_vars.size());
    for (std::size_t j = 0; j < out_vars.size(); ++j) {
        Term rhs = affine_term(layer, in_vars, j);
        if (scale) {
            rhs = Term::scale(*scale, std::move(rhs));
        }
        parts.push_back(eq(v(out_vars[j]), std::move(rhs)));
    }
    return Formula::conj(std::move(parts));
}

Formula encode_relu(std::span<const std::string> z_vars, std::span<const std::string> h_vars) {
    require_same_size(z_vars.size(), h_vars.size(), "relu");
    std::vector<Formula> parts;
    for (std::size_t j = 0; j < z_vars.size(); ++j) {
        const Term z = v(z_vars[j]);
        const Term h = v(h_vars[j]);
        parts.push_back(Formula::disj({
            Formula::conj({ge(z, c(0)), eq(h, z)}),
            Formula::conj({lt(z, c(0)), eq(h, c(0))}),
        }));
    }
    return Formula::conj(std::move(parts));
}

Formula encode_hardtanh(std::span<const std::string> z_vars, std::span<const std::string> h_vars) {
    require_same_size(z_vars.size(), h_vars.size(), "hardtanh");
    std::vector<Formula> parts;
    for (std::size_t j = 0; j < z_vars.size(); ++j) {
        const Term z = v(z_vars[j]);
        const Term h = v(h_vars[j]);
        parts.push_back(Formula::disj({
            Formula::conj({ge(z, c(1)), eq(h, c(1))}),
            Formula::conj({le(z, c(-1)), eq(h, c(-1))}),
            Formula::conj({lt(c(-1), z), lt(z, c(1)), eq(z, h)}),
        }));
    }
    return Formula::conj(std::move(parts));
}

std::pair<std::string, Formula> encode_abs(const Term& t, VariableNamer& namer) {
    std::string a = namer.aux();
    const Term av = v(a);
    Formula f = Formula::disj({
        Formula::conj({ge(t, c(0)), eq(av, t)}),
        Formula::conj({lt(t, c(0)), eq(av, -t)}),
    });
    return {std::move(a), std::move(f)};
}

NetworkEncoding encode_network(const Network& net, VariableNamer& namer, std::span<const std::string> inputs) {
    require_same_size(inputs.size(), net.input_dim, "network inputs");
    if (net.layers.empty()) {
        throw ValidationError("network '" + net.name + "' has no layers");
    }

    std::vector<Formula> parts;
    std::vector<std::string> current(inputs.begin(), inputs.end());
    const std::size_t last = net.layers.size();

    for (std::size_t l = 1; l <= last; ++l) {
        const Layer& layer = net.layers[l - 1];
        const std::size_t width = layer.output_size();
        const bool is_last = l == last;

        // A linear output layer writes straight into y, scale folded in.
        if (is_last && layer.activation == Activation::Linear) {
            std::vector<std::string> ys;
            for (std::size_t i = 1; i <= width; ++i) {
                ys.push_back(namer.output(i));
            }
            parts.push_back(encode_affine(layer, current, ys, net.output_scale));
            current = std::move(ys);
            break;
        }

        std::vector<std::string> zs;
        for (std::size_t j = 1; j <= width; ++j) {
            zs.push_back(namer.pre_activation(l, j));
        }
        parts.push_back(encode_affine(layer, current, zs));

        if (layer.activation == Activation::Linear) {
            current = std::move(zs);
            continue;
        }

        // Without a scale the last activation's outputs are y themselves.
        std::vector<std::string> hs;
        for (std::size_t j = 1; j <= width; ++j) {
            hs.push_back(is_last && !net.output_scale ? namer.output(j) : namer.post_activation(l, j));
        }
        parts.push_back(layer.activation == Activation::ReLU ? encode_relu(zs, hs) : encode_hardtanh(zs, hs));

        if (is_last && net.output_scale) {
            std::vector<std::string> ys;
            std::vector<Formula> scaled;
            for (std::size_t i = 1; i <= width; ++i) {
                ys.push_back(namer.output(i));
                scaled.push_back(eq(v(ys.back()), Term::scale(*net.output_scale, v(hs[i - 1]))));
            }
            parts.push_back(Formula::conj(std::move(scaled)));
            hs = std::move(ys);
        }
        current = std::move(hs);
    }

    return {std::move(current), Formula::conj(std::move(parts))};
}

}  // namespace nnequiv
