#include "nnequiv/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

#include "nnequiv/error.hpp"

namespace nnequiv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class ten_pow(unsigned long exponent) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, exponent);
    return p;
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
}

// Integer with optional sign; no whitespace.
mpz_class parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!all_digits(text)) {
        bad_literal(whole);
    }
    mpz_class v(std::string(text), 10);
    return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    // mpq_class has no int64 constructor on every platform; go through text.
    value_ = mpq_class(mpz_class(std::to_string(value), 10));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw RangeError("rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(std::to_string(numerator), 10),
                       mpz_class(std::to_string(denominator), 10));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    if (text.empty()) {
        bad_literal(whole);
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), whole);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            bad_literal(whole);
        }
        mpz_class den(std::string(den_text), 10);
        if (den == 0) {
            throw RangeError("rational with zero denominator: '" + std::string(whole) + "'");
        }
        return Rational(mpq_class(num, den));
    }

    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            bad_literal(whole);
        }
        exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
        if (exp_negative) {
            exponent = -exponent;
        }
        text = text.substr(0, e);
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            bad_literal(whole);
        }
        if (!frac_part.empty() && !all_digits(frac_part)) {
            bad_literal(whole);
        }
        if (!int_part.empty() && !all_digits(int_part)) {
            bad_literal(whole);
        }
    } else if (!all_digits(int_part)) {
        bad_literal(whole);
    }

    std::string digits = std::string(int_part) + std::string(frac_part);
    if (digits.empty()) {
        bad_literal(whole);
    }
    mpz_class mantissa(digits, 10);
    exponent -= static_cast<long>(frac_part.size());

    mpq_class q;
    if (exponent >= 0) {
        q = mpq_class(mantissa * ten_pow(static_cast<unsigned long>(exponent)));
    } else {
        q = mpq_class(mantissa, ten_pow(static_cast<unsigned long>(-exponent)));
    }
    if (negative) {
        q = -q;
    }
    return Rational(std::move(q));
}

Rational Rational::from_parts(std::string_view numerator, std::string_view denominator) {
    return parse(std::string(numerator) + "/" + std::string(denominator));
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw RangeError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

int Rational::sign() const { return sgn(value_); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::numerator_string() const { return value_.get_num().get_str(10); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(10); }

std::string Rational::to_string() const { return value_.get_str(10); }

std::optional<std::string> Rational::to_exact_decimal() const {
    mpz_class den = value_.get_den();
    unsigned long twos = 0;
    unsigned long fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) {
        return std::nullopt;
    }
    if (is_integer()) {
        return numerator_string();
    }
    const unsigned long places = std::max(twos, fives);
    mpz_class scaled = value_.get_num() * ten_pow(places) / value_.get_den();
    const bool negative = scaled < 0;
    std::string digits = mpz_class(::abs(scaled)).get_str(10);
    if (digits.size() <= places) {
        digits.insert(0, places - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - places, ".");
    return negative ? "-" + digits : digits;
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) {
        digits = 0;
    }
    const mpz_class scale = ten_pow(static_cast<unsigned long>(digits));
    // Round half away from zero.
    mpq_class scaled = ::abs(value_) * scale;
    mpz_class q = scaled.get_num() / scaled.get_den();
    mpz_class r = scaled.get_num() % scaled.get_den();
    if (2 * r >= scaled.get_den()) {
        q += 1;
    }
    std::string text = q.get_str(10);
    if (digits > 0) {
        if (text.size() <= static_cast<std::size_t>(digits)) {
            text.insert(0, static_cast<std::size_t>(digits) - text.size() + 1, '0');
        }
        text.insert(text.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sign() < 0 && q != 0) {
        text.insert(0, "-");
    }
    return text;
}

double Rational::to_double() const { return value_.get_d(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace nnequiv
