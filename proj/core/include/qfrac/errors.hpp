// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_ERRORS_HPP
#define QFRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qfrac {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain scalar input: unparsable rational string,
/// zero denominator, 0 raised to a negative power, division by zero.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A parameter point makes a required denominator factor vanish.
/// factor() names the offending factor, e.g. "(1 - y)" or "(1 - x*q^3)".
class InadmissibleError : public Error {
public:
    InadmissibleError(std::string factor, const std::string& detail)
        : Error("inadmissible point: " + factor + " = 0" +
                (detail.empty() ? "" : " [" + detail + "]")),
          factor_(std::move(factor)) {}

    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

/// A constant term vanished mid-extraction, so the next partial
/// denominator does not exist. index() is the 1-based coefficient index
/// that could not be produced.
class BreakdownError : public Error {
public:
    BreakdownError(int index, const std::string& detail)
        : Error("extraction breakdown at a_" + std::to_string(index) +
                (detail.empty() ? "" : ": " + detail)),
          index_(index) {}

    int index() const noexcept { return index_; }

private:
    int index_;
};

/// A series was read past its valid order, or an operation was handed
/// inputs whose order cannot support the requested result.
class OrderError : public Error {
public:
    using Error::Error;
};

/// sample_point exhausted its retry budget without finding an admissible
/// point.
class SamplingError : public Error {
public:
    using Error::Error;
};

} // namespace qfrac

#endif // QFRAC_ERRORS_HPP
