#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nnequiv {

/// Exact arbitrary-precision rational number.
///
/// Values are always kept in canonical form (positive denominator, no common
/// factor). Construction from text never goes through a binary float, so
/// `Rational::parse("0.1")` is exactly 1/10.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Parses a decimal literal ("-1.25", "3", "1e-6", "2.5E+3") or a
    /// quotient ("7/2", "-1/3"). Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    /// Rational from the integer decimal strings of numerator and denominator.
    static Rational from_parts(std::string_view numerator, std::string_view denominator);

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws RangeError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;
    Rational abs() const;

    std::string numerator_string() const;
    std::string denominator_string() const;

    /// Canonical "p" or "p/q" form; parse(to_string()) round-trips exactly.
    std::string to_string() const;

    /// Exact decimal expansion when the denominator has only factors 2 and 5,
    /// otherwise nullopt. Integers print without a fractional part.
    std::optional<std::string> to_exact_decimal() const;

    /// Decimal approximation rounded to `digits` fractional digits.
    std::string to_decimal(int digits = 9) const;

    double to_double() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value);

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace nnequiv
