// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/series.hpp"

#include <algorithm>

#include "qfrac/errors.hpp"

namespace qfrac {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw OrderError("series needs at least the constant coefficient");
    }
}

Series Series::zero(int order) {
    if (order < 0) throw OrderError("negative series order");
    return Series(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

Series Series::unit(int order) {
    Series s = zero(order);
    s.coeffs_[0] = Rational(1);
    return s;
}

Series Series::constant(const Rational& c, int order) {
    Series s = zero(order);
    s.coeffs_[0] = c;
    return s;
}

const Rational& Series::coeff(int n) const {
    if (n < 0 || n > valid_order()) {
        throw OrderError("coefficient of z^" + std::to_string(n) +
                         " requested from a series of valid order " +
                         std::to_string(valid_order()));
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

std::string Series::str() const {
    std::string out;
    for (int n = 0; n <= valid_order(); ++n) {
        const Rational& c = coeffs_[static_cast<std::size_t>(n)];
        if (n > 0) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        std::string mag = abs(c).str();
        if (n == 0) {
            out += mag;
        } else {
            out += mag + "*z";
            if (n > 1) out += "^" + std::to_string(n);
        }
    }
    out += " + O(z^" + std::to_string(valid_order() + 1) + ")";
    return out;
}

namespace {

int common_order(const Series& a, const Series& b) {
    return std::min(a.valid_order(), b.valid_order());
}

} // namespace

bool operator==(const Series& a, const Series& b) {
    return a.coeffs() == b.coeffs();
}

Series operator+(const Series& a, const Series& b) {
    const int n = common_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
    const int n = common_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
    return Series(std::move(c));
}

Series operator*(const Rational& c, const Series& a) {
    std::vector<Rational> r(a.coeffs());
    for (auto& v : r) v *= c;
    return Series(std::move(r));
}

Series operator*(const Series& a, const Series& b) {
    const int n = common_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rational acc;
        for (int j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
        c[static_cast<std::size_t>(i)] = acc;
    }
    return Series(std::move(c));
}

Series recip(const Series& a) {
    if (a.const_term().is_zero()) {
        throw DomainError("reciprocal of a series with zero constant term");
    }
    const int n = a.valid_order();
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    const Rational inv0 = Rational(1) / a.const_term();
    b[0] = inv0;
    for (int i = 1; i <= n; ++i) {
        Rational acc;
        for (int j = 1; j <= i; ++j) acc += a.coeff(j) * b[static_cast<std::size_t>(i - j)];
        b[static_cast<std::size_t>(i)] = -inv0 * acc;
    }
    return Series(std::move(b));
}

Series shift_down(const Series& a) {
    if (!a.const_term().is_zero()) {
        throw DomainError("shift_down of a series with nonzero constant term " +
                          a.const_term().str());
    }
    if (a.valid_order() < 1) {
        throw OrderError("shift_down of an order-0 series has no trusted coefficients");
    }
    std::vector<Rational> c(a.coeffs().begin() + 1, a.coeffs().end());
    return Series(std::move(c));
}

Series shift_up(const Series& a) {
    std::vector<Rational> c;
    c.reserve(a.coeffs().size() + 1);
    c.emplace_back();
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return Series(std::move(c));
}

Series truncate(const Series& a, int m) {
    if (m < 0 || m > a.valid_order()) {
        throw OrderError("truncation to order " + std::to_string(m) +
                         " of a series of valid order " + std::to_string(a.valid_order()));
    }
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().begin() + m + 1);
    return Series(std::move(c));
}

bool eq_to_order(const Series& a, const Series& b, int m) {
    if (m < 0 || m > a.valid_order() || m > b.valid_order()) {
        throw OrderError("equality through z^" + std::to_string(m) +
                         " exceeds a valid order (" + std::to_string(a.valid_order()) +
                         ", " + std::to_string(b.valid_order()) + ")");
    }
    for (int i = 0; i <= m; ++i) {
        if (a.coeff(i) != b.coeff(i)) return false;
    }
    return true;
}

} // namespace qfrac
