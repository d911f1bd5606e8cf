// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_SAMPLING_HPP
#define QFRAC_SAMPLING_HPP

#include <cstdint>

#include "qfrac/param_point.hpp"

namespace qfrac {

/// Fixed-algorithm 64-bit generator (splitmix64). Self-contained so that
/// sampled points are byte-identical across platforms and standard
/// library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough draw in [0, bound); bound must be positive. The
    /// modulo bias is irrelevant at the bounds used here (<= 129).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

struct SampleOptions {
    int max_height = 64; ///< |numerator| and denominator bound, pre-reduction
    int max_tries = 1000;
};

/// Random rational with |num| <= max_height, 1 <= den <= max_height
/// (canonicalized afterwards).
Rational sample_rational(SplitMix64& rng, int max_height);

/// Deterministic-in-seed admissible point: q, x, y of bounded height,
/// q never 0, 1 or -1, resampled until admissible(depth) holds. Throws
/// SamplingError after max_tries rejections.
ParamPoint sample_point(std::uint64_t seed, int depth, const SampleOptions& opt = {});

/// Same, with y pinned to exactly 0 (q, x random). Admissibility then
/// forces x != 0.
ParamPoint sample_point_y0(std::uint64_t seed, int depth, const SampleOptions& opt = {});

/// Same, with x pinned to exactly 0 (q, y random); forces y != 0.
ParamPoint sample_point_x0(std::uint64_t seed, int depth, const SampleOptions& opt = {});

/// Stable per-point seed stream derived from a base seed. Point i of a
/// multi-point run uses per_point_seed(base, i).
std::uint64_t per_point_seed(std::uint64_t base_seed, std::uint64_t index);

} // namespace qfrac

#endif // QFRAC_SAMPLING_HPP
