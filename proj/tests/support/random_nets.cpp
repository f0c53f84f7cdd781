#include "random_nets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nnequiv::testing {

Rational random_decimal(std::mt19937_64& rng, double lo, double hi, int digits) {
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    const auto a = static_cast<std::int64_t>(std::ceil(lo * static_cast<double>(scale)));
    const auto b = static_cast<std::int64_t>(std::floor(hi * static_cast<double>(scale)));
    std::uniform_int_distribution<std::int64_t> dist(a, b);
    return Rational(dist(rng), scale);
}

namespace {

Layer random_layer(std::mt19937_64& rng, std::size_t in, std::size_t out, Activation act) {
    Layer layer;
    layer.activation = act;
    layer.weights.rows.assign(in, Vector(out));
    for (auto& row : layer.weights.rows) {
        for (auto& w : row) {
            w = random_decimal(rng, -1.0, 1.0, 2);
        }
    }
    layer.biases.resize(out);
    for (auto& b : layer.biases) {
        b = random_decimal(rng, -0.5, 0.5, 2);
    }
    return layer;
}

}  // namespace

Network random_network(std::mt19937_64& rng, const NetShape& shape, const std::string& name) {
    Network net;
    net.name = name;
    net.input_dim = shape.inputs;
    std::size_t width = shape.inputs;
    for (std::size_t h : shape.hidden) {
        net.layers.push_back(random_layer(rng, width, h, shape.hidden_activation));
        width = h;
    }
    net.layers.push_back(random_layer(rng, width, shape.outputs, shape.output_activation));

    switch (shape.style) {
    case InputStyle::Bits:
        net.input_bounds.assign(shape.inputs, Interval{Rational(0), Rational(1)});
        break;
    case InputStyle::Box:
        for (std::size_t j = 0; j < shape.inputs; ++j) {
            const Rational lo = random_decimal(rng, -2.0, 0.0, 2);
            const Rational hi = random_decimal(rng, 0.0, 2.0, 2);
            net.input_bounds.push_back(Interval{lo, hi});
        }
        break;
    case InputStyle::Unbounded:
        break;
    }
    if (shape.with_scale) {
        net.output_scale = random_decimal(rng, 0.5, 2.0, 2);
    }
    return net;
}

NetShape random_shape(std::mt19937_64& rng, std::size_t max_inputs, std::size_t max_nodes, std::size_t max_outputs) {
    NetShape s;
    s.inputs = std::uniform_int_distribution<std::size_t>(1, max_inputs)(rng);
    const auto depth = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    for (std::size_t i = 0; i < depth; ++i) {
        s.hidden.push_back(std::uniform_int_distribution<std::size_t>(2, max_nodes)(rng));
    }
    s.outputs = std::uniform_int_distribution<std::size_t>(1, max_outputs)(rng);
    return s;
}

Network equivalent_rewrite(std::mt19937_64& rng, const Network& net) {
    Network out = net;
    out.name = net.name + "_rw";
    for (std::size_t l = 0; l + 1 < out.layers.size(); ++l) {
        Layer& cur = out.layers[l];
        Layer& next = out.layers[l + 1];
        const std::size_t n = cur.output_size();

        // ReLU is positively homogeneous: relu(c*z)/c == relu(z) for c > 0.
        for (std::size_t j = 0; j < n; ++j) {
            const Rational c(std::uniform_int_distribution<int>(1, 4)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
            for (auto& row : cur.weights.rows) {
                row[j] *= c;
            }
            cur.biases[j] *= c;
            for (auto& x : next.weights.rows[j]) {
                x /= c;
            }
        }

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Layer cur_p = cur;
        Layer next_p = next;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0; r < cur.input_size(); ++r) {
                cur_p.weights.rows[r][j] = cur.weights.rows[r][perm[j]];
            }
            cur_p.biases[j] = cur.biases[perm[j]];
            next_p.weights.rows[j] = next.weights.rows[perm[j]];
        }
        cur = std::move(cur_p);
        next = std::move(next_p);
    }
    return out;
}

Network nudged(std::mt19937_64& rng, const Network& net, const Rational& delta) {
    Network out = net;
    out.name = net.name + "_nudged";
    const std::size_t l = std::uniform_int_distribution<std::size_t>(0, out.layers.size() - 1)(rng);
    Layer& layer = out.layers[l];
    const std::size_t total = layer.input_size() * layer.output_size() + layer.output_size();
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
    if (pick < layer.output_size()) {
        layer.biases[pick] += delta;
    } else {
        const std::size_t k = pick - layer.output_size();
        layer.weights.rows[k / layer.output_size()][k % layer.output_size()] += delta;
    }
    return out;
}

Vector random_point(std::mt19937_64& rng, const Network& net) {
    Vector x;
    for (std::size_t j = 0; j < net.input_dim; ++j) {
        const auto b = net.bound(j);
        if (!b) {
            x.push_back(random_decimal(rng, -2.0, 2.0, 3));
            continue;
        }
        // Interpolate between the endpoints with a 3-digit fraction.
        const Rational t = random_decimal(rng, 0.0, 1.0, 3);
        x.push_back(b->lower + t * (b->upper - b->lower));
    }
    return x;
}

}  // namespace nnequiv::testing
