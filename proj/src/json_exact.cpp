#include "json_exact.hpp"

#include "nnequiv/error.hpp"

namespace nnequiv::detail {

namespace {

using json = nlohmann::json;

// The stock DOM builder, except that float literals are kept as their raw
// text. sax_parse dispatches statically, so hiding number_float suffices.
class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<json> {
public:
    explicit ExactNumberSax(json& result)
        : nlohmann::detail::json_sax_dom_parser<json>(result, false) {}

    bool number_float(json::number_float_t /*value*/, const json::string_t& text) {
        json::string_t copy = text;
        return string(copy);
    }

    bool number_unsigned(json::number_unsigned_t value) {
        if (value > static_cast<json::number_unsigned_t>(std::numeric_limits<json::number_integer_t>::max())) {
            json::string_t copy = std::to_string(value);
            return string(copy);
        }
        return number_integer(static_cast<json::number_integer_t>(value));
    }
};

}  // namespace

nlohmann::json parse_json_exact(std::string_view text) {
    json result;
    ExactNumberSax sax(result);
    bool ok = false;
    try {
        ok = json::sax_parse(text.begin(), text.end(), &sax);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!ok || sax.is_errored()) {
        throw ParseError("malformed JSON document");
    }
    return result;
}

Rational json_to_rational(const nlohmann::json& value, const std::string& what) {
    if (value.is_string()) {
        try {
            return Rational::parse(value.get<std::string>());
        } catch (const Error& e) {
            throw ParseError(what + ": " + e.what());
        }
    }
    if (value.is_number_integer()) {
        return Rational(value.get<std::int64_t>());
    }
    throw ParseError(what + ": expected a number or decimal string");
}

std::string rational_to_json_text(const Rational& r) {
    if (auto d = r.to_exact_decimal()) {
        return *d;
    }
    return r.to_string();
}

}  // namespace nnequiv::detail
