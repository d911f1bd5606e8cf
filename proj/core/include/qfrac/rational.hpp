// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_RATIONAL_HPP
#define QFRAC_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace qfrac {

/// Arbitrary-precision rational number, kept in canonical form at all
/// times: gcd(|num|, den) = 1 and den > 0. All arithmetic is exact, so
/// equality of values is structural equality of (num, den).
///
/// This is the scalar field for every computation in the library; no
/// floating point appears anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor): scalars convert freely
    Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)

    /// num/den, canonicalized. Throws DomainError when den == 0.
    Rational(long num, long den);

    /// Strict parse of "p", "-p", "p/q" (decimal digits only; no dots,
    /// exponents or whitespace; q > 0 after sign normalization).
    /// "2/4" canonicalizes to 1/2. Returns nullopt on any other input.
    static std::optional<Rational> parse(std::string_view text);

    /// parse(), but throws DomainError naming the bad input.
    static Rational parse_or_throw(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    /// "p/q", or just "p" when the denominator is 1. Exact.
    std::string str() const { return v_.get_str(); }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    /// Underlying GMP value (tests and serialization only).
    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_; // invariant: canonical
};

Rational abs(const Rational& a);

/// Exact integer power, negative exponents included.
/// Throws DomainError for 0 raised to a negative power.
Rational pow_int(const Rational& base, long e);

} // namespace qfrac

#endif // QFRAC_RATIONAL_HPP
