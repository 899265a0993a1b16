#pragma once

/// Exact arithmetic foundation: arbitrary-precision naturals, wholes,
/// integers and always-reduced rationals. All values are immutable and safe
/// to share between threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "countable/errors.hpp"

namespace countable {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::strong_ordering order(const BigInt& lhs, const BigInt& rhs) {
    int c = lhs.compare(rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Euclid on non-negative inputs; gcd(0, b) = b.
inline BigInt gcd_nonneg(BigInt a, BigInt b) {
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline BigInt parse_decimal(std::string_view text) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && digits.front() == '-') {
        negative = true;
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw parse_error("'" + std::string(text) + "' is not an integer");
    for (char c : digits) {
        if (c < '0' || c > '9') throw parse_error("'" + std::string(text) + "' is not an integer");
    }
    BigInt value{std::string(digits)};
    return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// An element of N = {1, 2, 3, ...}.
class Natural {
public:
    explicit Natural(BigInt value) : value_(std::move(value)) {
        if (value_ < 1) throw domain_error(value_.str() + " is not a natural number");
    }

    const BigInt& value() const { return value_; }

    friend bool operator==(const Natural&, const Natural&) = default;
    friend std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs) {
        return detail::order(lhs.value_, rhs.value_);
    }

private:
    BigInt value_;
};

/// An element of N0 = {0, 1, 2, ...}.
class Whole {
public:
    explicit Whole(BigInt value) : value_(std::move(value)) {
        if (value_ < 0) throw domain_error(value_.str() + " is not a whole number");
    }

    const BigInt& value() const { return value_; }

    friend bool operator==(const Whole&, const Whole&) = default;
    friend std::strong_ordering operator<=>(const Whole& lhs, const Whole& rhs) {
        return detail::order(lhs.value_, rhs.value_);
    }

private:
    BigInt value_;
};

/// An element of Z.
class Integer {
public:
    explicit Integer(BigInt value) : value_(std::move(value)) {}

    const BigInt& value() const { return value_; }

    friend bool operator==(const Integer&, const Integer&) = default;
    friend std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) {
        return detail::order(lhs.value_, rhs.value_);
    }

private:
    BigInt value_;
};

/// A single decimal digit.
class Digit {
public:
    explicit Digit(int value) : value_(value) {
        if (value < 0 || value > 9) {
            throw domain_error(std::to_string(value) + " is not a decimal digit");
        }
    }

    int value() const { return value_; }

    friend bool operator==(const Digit&, const Digit&) = default;
    friend auto operator<=>(const Digit&, const Digit&) = default;

private:
    int value_;
};

/// Greatest common divisor; undefined when both arguments are zero.
inline Whole gcd(const Whole& a, const Whole& b) {
    if (a.value() == 0 && b.value() == 0) throw domain_error("gcd(0, 0) is undefined");
    return Whole(detail::gcd_nonneg(a.value(), b.value()));
}

class Rational;
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// An exact rational in canonical form: gcd(|numerator|, denominator) = 1 and
/// the denominator is positive, so equal values compare equal bitwise.
class Rational {
public:
    const Integer& numerator() const { return numerator_; }
    const Natural& denominator() const { return denominator_; }

    bool is_zero() const { return numerator_.value() == 0; }
    bool is_positive() const { return numerator_.value() > 0; }
    bool is_negative() const { return numerator_.value() < 0; }

    Rational operator-() const { return Rational(Integer(-numerator_.value()), denominator_); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        // Denominators are positive, so cross-multiplication preserves order.
        return detail::order(lhs.numerator_.value() * rhs.denominator_.value(),
                             rhs.numerator_.value() * lhs.denominator_.value());
    }

    friend Rational make_rational(const Integer& numerator, const Integer& denominator);

private:
    Rational(Integer numerator, Natural denominator)
        : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {}

    Integer numerator_;
    Natural denominator_;
};

/// Returns the unique reduced representative of numerator/denominator.
inline Rational make_rational(const Integer& numerator, const Integer& denominator) {
    if (denominator.value() == 0) {
        throw invalid_rational(numerator.value().str() + "/0 is not a rational number");
    }
    BigInt num = numerator.value();
    BigInt den = denominator.value();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = detail::gcd_nonneg(boost::multiprecision::abs(num), den);
    return Rational(Integer(num / g), Natural(den / g));
}

inline Rational make_rational(long long numerator, long long denominator) {
    return make_rational(Integer(BigInt(numerator)), Integer(BigInt(denominator)));
}

inline std::string to_string(const Natural& n) { return n.value().str(); }
inline std::string to_string(const Whole& w) { return w.value().str(); }
inline std::string to_string(const Integer& z) { return z.value().str(); }
inline std::string to_string(const Digit& d) { return std::string(1, static_cast<char>('0' + d.value())); }

/// Rationals always render with their denominator, e.g. `-1/4`, `5/1`.
inline std::string to_string(const Rational& q) {
    return q.numerator().value().str() + "/" + q.denominator().value().str();
}

inline std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << to_string(n); }
inline std::ostream& operator<<(std::ostream& os, const Whole& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const Integer& z) { return os << to_string(z); }
inline std::ostream& operator<<(std::ostream& os, const Digit& d) { return os << to_string(d); }
inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << to_string(q); }

inline Natural parse_natural(std::string_view text) { return Natural(detail::parse_decimal(text)); }
inline Whole parse_whole(std::string_view text) { return Whole(detail::parse_decimal(text)); }
inline Integer parse_integer(std::string_view text) { return Integer(detail::parse_decimal(text)); }

/// Accepts `p/q` or a bare integer `p`; unreduced input is normalized.
inline Rational parse_rational(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return make_rational(Integer(detail::parse_decimal(text)), Integer(BigInt(1)));
    }
    Integer numerator(detail::parse_decimal(text.substr(0, slash)));
    Integer denominator(detail::parse_decimal(text.substr(slash + 1)));
    return make_rational(numerator, denominator);
}

}  // namespace countable
