#include "nnequiv/evaluator.hpp"

#include <algorithm>
#include <numeric>

#include "nnequiv/error.hpp"

namespace nnequiv {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kMinusOne(-1);

void require_nonempty(std::span<const Rational> y, const char* what) {
    if (y.empty()) {
        throw DimensionError(std::string(what) + " of an empty vector");
    }
}

void require_same_length(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw DimensionError("output vectors differ in length: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
}

std::string pair_text(const Rational& a, const Rational& b) { return a.to_string() + " vs " + b.to_string(); }

}  // namespace

Rational apply_activation(Activation act, const Rational& value) {
    switch (act) {
    case Activation::ReLU:
        return value.sign() >= 0 ? value : kZero;
    case Activation::HardTanh:
        if (value > kOne) {
            return kOne;
        }
        if (value < kMinusOne) {
            return kMinusOne;
        }
        return value;
    case Activation::Linear:
        return value;
    }
    return value;
}

ForwardTrace forward_trace(const Network& net, std::span<const Rational> x) {
    if (x.size() != net.input_dim) {
        throw DimensionError("input has " + std::to_string(x.size()) + " values, network '" + net.name +
                             "' expects " + std::to_string(net.input_dim));
    }
    ForwardTrace trace;
    Vector current(x.begin(), x.end());
    for (const Layer& layer : net.layers) {
        Vector z = layer.biases;
        for (std::size_t k = 0; k < layer.input_size(); ++k) {
            if (current[k].is_zero()) {
                continue;
            }
            const Vector& row = layer.weights.rows[k];
            for (std::size_t j = 0; j < z.size(); ++j) {
                z[j] += current[k] * row[j];
            }
        }
        Vector h;
        h.reserve(z.size());
        for (const Rational& v : z) {
            h.push_back(apply_activation(layer.activation, v));
        }
        trace.pre_activation.push_back(std::move(z));
        trace.post_activation.push_back(h);
        current = std::move(h);
    }
    if (net.output_scale) {
        for (Rational& v : current) {
            v *= *net.output_scale;
        }
    }
    trace.output = std::move(current);
    return trace;
}

Vector forward(const Network& net, std::span<const Rational> x) { return forward_trace(net, x).output; }

std::size_t argmax(std::span<const Rational> y) {
    require_nonempty(y, "argmax");
    std::size_t best = 0;
    for (std::size_t i = 1; i < y.size(); ++i) {
        if (y[i] > y[best]) {
            best = i;
        }
    }
    return best + 1;
}

std::vector<std::size_t> argsort(std::span<const Rational> y) {
    require_nonempty(y, "argsort");
    std::vector<std::size_t> order(y.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return y[a] > y[b]; });
    for (auto& i : order) {
        ++i;
    }
    return order;
}

Rational distance(Norm p, std::span<const Rational> y, std::span<const Rational> y_other) {
    require_same_length(y, y_other);
    Rational acc;
    for (std::size_t i = 0; i < y.size(); ++i) {
        Rational d = (y[i] - y_other[i]).abs();
        if (p == Norm::L1) {
            acc += d;
        } else if (d > acc) {
            acc = std::move(d);
        }
    }
    return acc;
}

PointCheck relation_violated_at(const EquivalenceRelation& rel, std::span<const Rational> y,
                                std::span<const Rational> y_other) {
    require_same_length(y, y_other);
    rel.check_for_output_dim(y.size());

    PointCheck out;
    switch (rel.kind) {
    case RelationKind::Strict:
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] != y_other[i]) {
                out.violated = true;
                out.witness = "y" + std::to_string(i + 1) + ": " + pair_text(y[i], y_other[i]);
                return out;
            }
        }
        out.witness = "all outputs equal";
        return out;

    case RelationKind::L1: {
        Rational d = distance(Norm::L1, y, y_other);
        out.violated = d >= *rel.epsilon;
        out.witness = "L1 distance " + d.to_string() + (out.violated ? " >= " : " < ") + rel.epsilon->to_string();
        return out;
    }

    case RelationKind::LInf: {
        std::size_t worst = 0;
        Rational worst_gap;
        for (std::size_t i = 0; i < y.size(); ++i) {
            Rational d = (y[i] - y_other[i]).abs();
            if (d > worst_gap) {
                worst_gap = std::move(d);
                worst = i;
            }
        }
        out.violated = worst_gap >= *rel.epsilon;
        out.witness = "y" + std::to_string(worst + 1) + ": |" + y[worst].to_string() + " - " +
                      y_other[worst].to_string() + "| = " + worst_gap.to_string() +
                      (out.violated ? " >= " : " < ") + rel.epsilon->to_string();
        return out;
    }

    case RelationKind::Argmax: {
        const std::size_t a = argmax(y);
        const std::size_t b = argmax(y_other);
        out.violated = a != b;
        out.witness = "argmax " + std::to_string(a) + " vs " + std::to_string(b);
        return out;
    }

    case RelationKind::TopK: {
        const auto sa = argsort(y);
        const auto sb = argsort(y_other);
        for (std::size_t p = 0; p < *rel.k; ++p) {
            if (sa[p] != sb[p]) {
                out.violated = true;
                out.witness = "rank " + std::to_string(p + 1) + ": index " + std::to_string(sa[p]) + " vs " +
                              std::to_string(sb[p]);
                return out;
            }
        }
        out.witness = "top-" + std::to_string(*rel.k) + " argsort prefixes agree";
        return out;
    }
    }
    return out;
}

bool within_bounds(const Network& net, std::span<const Rational> x) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (auto b = net.bound(j)) {
            if (x[j] < b->lower || x[j] > b->upper) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace nnequiv
