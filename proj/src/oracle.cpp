#include "nnequiv/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "nnequiv/error.hpp"
#include "nnequiv/evaluator.hpp"

namespace nnequiv {

DiscreteDomain::DiscreteDomain(std::vector<std::vector<Rational>> values) : values_(std::move(values)) {
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (values_[j].empty()) {
            throw ValidationError("feature " + std::to_string(j + 1) + " has an empty value list");
        }
    }
}

DiscreteDomain DiscreteDomain::bits(std::size_t n) {
    return DiscreteDomain(std::vector<std::vector<Rational>>(n, {Rational(0), Rational(1)}));
}

DiscreteDomain DiscreteDomain::grid(std::size_t n, const Rational& lo, const Rational& hi, const Rational& step) {
    if (step.sign() <= 0) {
        throw RangeError("grid step must be > 0");
    }
    if (lo > hi) {
        throw RangeError("grid lower end exceeds upper end");
    }
    std::vector<Rational> axis;
    for (Rational v = lo; v <= hi; v += step) {
        axis.push_back(v);
    }
    return DiscreteDomain(std::vector<std::vector<Rational>>(n, axis));
}

std::uint64_t DiscreteDomain::cardinality() const {
    std::uint64_t total = 1;
    for (const auto& axis : values_) {
        if (total > std::numeric_limits<std::uint64_t>::max() / axis.size()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= axis.size();
    }
    return total;
}

Vector DiscreteDomain::at(std::uint64_t index) const {
    Vector point(values_.size());
    for (std::size_t j = values_.size(); j-- > 0;) {
        const std::uint64_t radix = values_[j].size();
        point[j] = values_[j][index % radix];
        index /= radix;
    }
    return point;
}

void DiscreteDomain::check_within(const Network& net) const {
    for (std::size_t j = 0; j < values_.size(); ++j) {
        const auto b = net.bound(j);
        if (!b) {
            continue;
        }
        for (const Rational& v : values_[j]) {
            if (v < b->lower || v > b->upper) {
                throw ValidationError("domain value " + v.to_string() + " of feature " + std::to_string(j + 1) +
                                      " lies outside the bounds of network '" + net.name + "'");
            }
        }
    }
}

void enumerate(const DiscreteDomain& domain, const std::function<bool(const Vector&)>& visit, std::uint64_t budget) {
    const std::uint64_t total = domain.cardinality();
    if (total > budget) {
        throw RangeError("domain has " + std::to_string(total) + " points, over the budget of " +
                         std::to_string(budget));
    }
    const auto& values = domain.values();
    const std::size_t n = values.size();
    std::vector<std::size_t> digits(n, 0);
    Vector point(n);
    for (std::size_t j = 0; j < n; ++j) {
        point[j] = values[j][0];
    }
    for (std::uint64_t i = 0; i < total; ++i) {
        if (!visit(point)) {
            return;
        }
        // Odometer increment, last feature fastest.
        for (std::size_t j = n; j-- > 0;) {
            if (++digits[j] < values[j].size()) {
                point[j] = values[j][digits[j]];
                break;
            }
            digits[j] = 0;
            point[j] = values[j][0];
        }
    }
}

std::vector<Vector> enumerate_all(const DiscreteDomain& domain, std::uint64_t budget) {
    std::vector<Vector> out;
    enumerate(
        domain,
        [&](const Vector& p) {
            out.push_back(p);
            return true;
        },
        budget);
    return out;
}

OracleResult exhaustive_check(const Network& net_a, const Network& net_b, const EquivalenceRelation& rel,
                              const DiscreteDomain& domain, std::uint64_t budget, unsigned jobs) {
    if (net_a.input_dim != net_b.input_dim || domain.dimension() != net_a.input_dim) {
        throw DimensionError("domain has " + std::to_string(domain.dimension()) + " features, networks expect " +
                             std::to_string(net_a.input_dim) + " and " + std::to_string(net_b.input_dim));
    }
    if (net_a.output_dim() != net_b.output_dim()) {
        throw DimensionError("output dimensions differ: " + std::to_string(net_a.output_dim()) + " vs " +
                             std::to_string(net_b.output_dim()));
    }
    rel.check_for_output_dim(net_a.output_dim());
    domain.check_within(net_a);
    domain.check_within(net_b);

    const std::uint64_t total = domain.cardinality();
    if (total > budget) {
        throw RangeError("domain has " + std::to_string(total) + " points, over the budget of " +
                         std::to_string(budget));
    }

    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> first{kNone};

    auto scan = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            if (i > first.load(std::memory_order_relaxed)) {
                return;
            }
            const Vector x = domain.at(i);
            if (relation_violated_at(rel, forward(net_a, x), forward(net_b, x)).violated) {
                std::uint64_t seen = first.load();
                while (i < seen && !first.compare_exchange_weak(seen, i)) {
                }
                return;
            }
        }
    };

    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < 2 * jobs) {
        scan(0, total);
    } else {
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            if (begin < end) {
                workers.emplace_back(scan, begin, end);
            }
        }
        for (auto& t : workers) {
            t.join();
        }
    }

    OracleResult result;
    result.points = total;
    if (first.load() != kNone) {
        result.equivalent = false;
        result.index = first.load();
        result.input = domain.at(*result.index);
        result.outputs_a = forward(net_a, result.input);
        result.outputs_b = forward(net_b, result.input);
        result.witness = relation_violated_at(rel, result.outputs_a, result.outputs_b).witness;
    }
    return result;
}

}  // namespace nnequiv
