#include "nnequiv/perturbation.hpp"

#include <cmath>
#include <random>

#include <json.hpp>

#include "json_exact.hpp"
#include "nnequiv/error.hpp"

namespace nnequiv {

namespace {

constexpr std::int64_t kQuantum = 1'000'000'000;  // 9 fractional digits

struct ParamRef {
    std::size_t layer;  // 0-based
    ParamKind kind;
    std::size_t row;  // 0-based, unused for biases
    std::size_t col;
};

std::vector<ParamRef> eligible_parameters(const Network& net, bool weights_only) {
    std::vector<ParamRef> refs;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        const Layer& layer = net.layers[l];
        for (std::size_t r = 0; r < layer.input_size(); ++r) {
            for (std::size_t c = 0; c < layer.output_size(); ++c) {
                refs.push_back({l, ParamKind::Weight, r, c});
            }
        }
        if (!weights_only) {
            for (std::size_t c = 0; c < layer.biases.size(); ++c) {
                refs.push_back({l, ParamKind::Bias, 0, c});
            }
        }
    }
    return refs;
}

// Unbiased integer in [0, n) by rejection; independent of the standard
// library's distribution implementations, so results are portable.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

// Quantized bounds in units of 1e-9: ceil(lower), floor(upper).
std::pair<std::int64_t, std::int64_t> quantized_range(const Rational& lower, const Rational& upper) {
    const mpq_class lo = lower.raw() * kQuantum;
    const mpq_class hi = upper.raw() * kQuantum;
    mpz_class lo_q;
    mpz_class hi_q;
    mpz_cdiv_q(lo_q.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(hi_q.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    if (!lo_q.fits_slong_p() || !hi_q.fits_slong_p()) {
        throw RangeError("perturbation magnitude out of range");
    }
    return {lo_q.get_si(), hi_q.get_si()};
}

std::int64_t draw_units(std::mt19937_64& rng, const PerturbationSpec& spec, std::int64_t lo, std::int64_t hi) {
    if (spec.sampling == MagnitudeSampling::Uniform) {
        return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
    }
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double log_lo = std::log(static_cast<double>(lo));
    const double log_hi = std::log(static_cast<double>(hi));
    const auto units = static_cast<std::int64_t>(std::llround(std::exp(log_lo + u * (log_hi - log_lo))));
    return std::clamp(units, lo, hi);
}

}  // namespace

void PerturbationSpec::check(const Network& net) const {
    if (lower.sign() <= 0) {
        throw RangeError("perturbation lower magnitude must be > 0");
    }
    if (lower > upper) {
        throw RangeError("perturbation range is empty: " + lower.to_string() + " > " + upper.to_string());
    }
    const auto [lo, hi] = quantized_range(lower, upper);
    if (lo > hi || lo <= 0) {
        throw RangeError("perturbation range contains no nonzero 9-digit decimal");
    }
    const std::size_t available = eligible_parameters(net, weights_only).size();
    if (count > available) {
        throw RangeError("cannot perturb " + std::to_string(count) + " parameters, network has " +
                         std::to_string(available) + " eligible");
    }
}

PerturbationResult perturb(const Network& net, const PerturbationSpec& spec) {
    spec.check(net);
    PerturbationResult out{net, {}};
    if (spec.count == 0) {
        return out;
    }
    out.network.name = net.name + "_pert";

    std::mt19937_64 rng(spec.seed);
    std::vector<ParamRef> refs = eligible_parameters(net, spec.weights_only);
    const auto [lo, hi] = quantized_range(spec.lower, spec.upper);

    // Partial Fisher-Yates: the first `count` slots end up distinct picks.
    for (std::size_t i = 0; i < spec.count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, refs.size() - i));
        std::swap(refs[i], refs[j]);

        const ParamRef& ref = refs[i];
        const std::int64_t units = draw_units(rng, spec, lo, hi);
        const bool negative = (rng() & 1U) != 0;
        Rational delta(units, kQuantum);
        if (negative) {
            delta = -delta;
        }

        Layer& layer = out.network.layers[ref.layer];
        Rational& slot = ref.kind == ParamKind::Weight ? layer.weights.rows[ref.row][ref.col] : layer.biases[ref.col];
        ParameterChange change;
        change.layer = ref.layer + 1;
        change.kind = ref.kind;
        change.row = ref.kind == ParamKind::Weight ? ref.row + 1 : 0;
        change.col = ref.col + 1;
        change.old_value = slot;
        slot += delta;
        change.new_value = slot;
        out.changes.push_back(std::move(change));
    }
    return out;
}

std::string serialize_changelog(const PerturbationSpec& spec, const std::vector<ParameterChange>& changes) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["count"] = spec.count;
    doc["range"] = {detail::rational_to_json_text(spec.lower), detail::rational_to_json_text(spec.upper)};
    doc["seed"] = spec.seed;
    doc["weights_only"] = spec.weights_only;
    doc["sampling"] = spec.sampling == MagnitudeSampling::Uniform ? "uniform" : "log-uniform";
    ordered_json entries = ordered_json::array();
    for (const ParameterChange& c : changes) {
        ordered_json e;
        e["layer"] = c.layer;
        e["kind"] = c.kind == ParamKind::Weight ? "weight" : "bias";
        e["row"] = c.row;
        e["col"] = c.col;
        e["old"] = detail::rational_to_json_text(c.old_value);
        e["new"] = detail::rational_to_json_text(c.new_value);
        e["delta"] = detail::rational_to_json_text(c.new_value - c.old_value);
        entries.push_back(std::move(e));
    }
    doc["changes"] = std::move(entries);
    return doc.dump(2) + "\n";
}

}  // namespace nnequiv
