// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_SERIES_HPP
#define QFRAC_SERIES_HPP

#include <string>
#include <vector>

#include "qfrac/rational.hpp"

namespace qfrac {

/// Truncated formal power series in z over Rational. Index n holds the
/// coefficient of z^n. valid_order() is the largest exponent whose
/// coefficient is trusted; reading past it throws OrderError instead of
/// returning a silent zero, and every operation propagates the smallest
/// valid order among its inputs. The order can only shrink through
/// arithmetic (shift_up is the one deliberate exception: multiplying by
/// the exact monomial z extends trust by one).
class Series {
public:
    /// Takes ownership of the coefficients; valid_order = size - 1.
    /// An empty vector is rejected (a series always has a constant term).
    explicit Series(std::vector<Rational> coeffs);

    static Series zero(int order);
    static Series unit(int order);               // 1 + 0 z + ... + 0 z^order
    static Series constant(const Rational& c, int order = 0);

    int valid_order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of z^n; throws OrderError for n < 0 or n > valid_order.
    const Rational& coeff(int n) const;

    Rational const_term() const { return coeffs_.front(); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// "1 + 6/5*z + 162/125*z^2 + O(z^3)" -- for diagnostics and reports.
    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

/// Structural equality: same valid order and identical coefficients.
bool operator==(const Series& a, const Series& b);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);
Series operator*(const Series& a, const Series& b); // Cauchy product, min order

/// Multiplicative inverse to the common valid order.
/// Throws DomainError when the constant term is zero.
Series recip(const Series& a);

/// Division by z. The constant term must be exactly zero (a nonzero one
/// signals a failed cancellation upstream); the valid order drops by one,
/// so an order-0 series cannot be shifted.
Series shift_down(const Series& a);

/// Multiplication by z; the valid order grows by one.
Series shift_up(const Series& a);

/// Re-truncation to a smaller (or equal) order. Throws OrderError when
/// m exceeds the valid order -- truncation never fabricates trust.
Series truncate(const Series& a, int m);

/// Coefficient-wise equality through z^m. Throws OrderError when m is
/// negative or exceeds either valid order.
bool eq_to_order(const Series& a, const Series& b, int m);

} // namespace qfrac

#endif // QFRAC_SERIES_HPP
