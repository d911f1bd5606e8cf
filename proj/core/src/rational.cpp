// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/rational.hpp"

#include <cctype>
#include <ostream>

#include "qfrac/errors.hpp"

namespace qfrac {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator: " + std::to_string(num) + "/0");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    // ^[+-]?[0-9]+(/[0-9]+)?$ with a nonzero denominator part.
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return std::nullopt;

    std::size_t den_begin = 0, den_end = 0;
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) return std::nullopt;
        den_end = i;
    }

    if (den_begin != den_end) {
        mpz_class den(std::string(text.substr(den_begin, den_end - den_begin)), 10);
        if (den == 0) return std::nullopt;
    }
    std::string_view body = text;
    if (body.front() == '+') body.remove_prefix(1); // GMP does not take a leading '+'
    mpq_class v;
    if (v.set_str(std::string(body), 10) != 0) return std::nullopt;
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::parse_or_throw(std::string_view text) {
    auto r = parse(text);
    if (!r) {
        throw DomainError("not an exact rational \"p\" or \"p/q\": '" + std::string(text) + "'");
    }
    return *r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
}

Rational abs(const Rational& a) {
    return a.sign() < 0 ? -a : a;
}

Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero() && e < 0) {
        throw DomainError("zero base with negative exponent");
    }
    Rational b = base;
    unsigned long n;
    if (e < 0) {
        b = Rational(1) / b;
        n = static_cast<unsigned long>(-(e + 1)) + 1; // avoids LONG_MIN overflow
    } else {
        n = static_cast<unsigned long>(e);
    }
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

} // namespace qfrac
