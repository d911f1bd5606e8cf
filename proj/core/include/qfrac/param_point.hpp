// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_PARAM_POINT_HPP
#define QFRAC_PARAM_POINT_HPP

#include <optional>
#include <string>

#include "qfrac/rational.hpp"

namespace qfrac {

/// Exact parameter assignment (q, x, y). `depth` records the largest
/// index the point has been validated as admissible for (metadata set by
/// the sampler; explicit points default to 0 and are validated per
/// operation instead).
struct ParamPoint {
    Rational q;
    Rational x;
    Rational y;
    int depth = 0;

    std::string str() const;
};

/// Admissibility up to `depth`: every denominator factor that can appear
/// in a coefficient or series construction through that index must be
/// nonzero. Concretely, for all 0 <= j <= depth:
///
///   (x;q)_j != 0,  (yq;q)_j != 0,  (q;q)_j != 0,  1-y != 0,  y - x q^j != 0.
///
/// Returns the first vanishing factor, spelled out ("(1 - x*q^3)"), or
/// nullopt when the point is admissible.
std::optional<std::string> admissibility_violation(const ParamPoint& pt, int depth);

bool admissible(const ParamPoint& pt, int depth);

/// Throws InadmissibleError naming the vanishing factor.
void require_admissible(const ParamPoint& pt, int depth);

} // namespace qfrac

#endif // QFRAC_PARAM_POINT_HPP
