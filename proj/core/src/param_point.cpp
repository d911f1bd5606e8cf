// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/param_point.hpp"

#include "qfrac/errors.hpp"

namespace qfrac {

std::string ParamPoint::str() const {
    return "q=" + q.str() + " x=" + x.str() + " y=" + y.str();
}

std::optional<std::string> admissibility_violation(const ParamPoint& pt, int depth) {
    const Rational one(1);
    if (pt.y == one) return "(1 - y)";

    // (x;q)_j != 0 for j <= depth means factors (1 - x q^j), j <= depth-1;
    // the remaining families need exponents through depth.
    Rational qp(1); // q^j
    for (int j = 0; j <= depth; ++j) {
        if (j <= depth - 1 && one - pt.x * qp == 0) {
            return "(1 - x*q^" + std::to_string(j) + ")";
        }
        if (j >= 1 && one - pt.y * qp == 0) {
            return "(1 - y*q^" + std::to_string(j) + ")";
        }
        if (j >= 1 && one - qp == 0) {
            return "(1 - q^" + std::to_string(j) + ")";
        }
        if (pt.y - pt.x * qp == 0) {
            return "(y - x*q^" + std::to_string(j) + ")";
        }
        qp *= pt.q;
    }
    return std::nullopt;
}

bool admissible(const ParamPoint& pt, int depth) {
    return !admissibility_violation(pt, depth).has_value();
}

void require_admissible(const ParamPoint& pt, int depth) {
    if (auto factor = admissibility_violation(pt, depth)) {
        throw InadmissibleError(*factor, pt.str() + " depth=" + std::to_string(depth));
    }
}

} // namespace qfrac
