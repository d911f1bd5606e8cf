// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/sampling.hpp"

#include <string>

#include "qfrac/errors.hpp"

namespace qfrac {

Rational sample_rational(SplitMix64& rng, int max_height) {
    const auto h = static_cast<std::uint64_t>(max_height);
    const long num = static_cast<long>(rng.next_below(2 * h + 1)) - max_height;
    const long den = static_cast<long>(rng.next_below(h)) + 1;
    return Rational(num, den);
}

namespace {

enum class PointKind { general, y_zero, x_zero };

ParamPoint sample_impl(std::uint64_t seed, int depth, PointKind kind, const SampleOptions& opt) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < opt.max_tries; ++attempt) {
        ParamPoint pt;
        pt.depth = depth;
        pt.q = sample_rational(rng, opt.max_height);
        switch (kind) {
            case PointKind::general:
                pt.x = sample_rational(rng, opt.max_height);
                pt.y = sample_rational(rng, opt.max_height);
                break;
            case PointKind::y_zero:
                pt.x = sample_rational(rng, opt.max_height);
                pt.y = Rational(0);
                break;
            case PointKind::x_zero:
                pt.x = Rational(0);
                pt.y = sample_rational(rng, opt.max_height);
                break;
        }
        if (pt.q.is_zero() || pt.q == Rational(1) || pt.q == Rational(-1)) continue;
        if (admissible(pt, depth)) return pt;
    }
    throw SamplingError("sampling exhausted after " + std::to_string(opt.max_tries) +
                        " tries (seed " + std::to_string(seed) + ", depth " +
                        std::to_string(depth) + ")");
}

} // namespace

ParamPoint sample_point(std::uint64_t seed, int depth, const SampleOptions& opt) {
    return sample_impl(seed, depth, PointKind::general, opt);
}

ParamPoint sample_point_y0(std::uint64_t seed, int depth, const SampleOptions& opt) {
    return sample_impl(seed, depth, PointKind::y_zero, opt);
}

ParamPoint sample_point_x0(std::uint64_t seed, int depth, const SampleOptions& opt) {
    return sample_impl(seed, depth, PointKind::x_zero, opt);
}

std::uint64_t per_point_seed(std::uint64_t base_seed, std::uint64_t index) {
    SplitMix64 rng(base_seed ^ (index * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
    return rng.next();
}

} // namespace qfrac
