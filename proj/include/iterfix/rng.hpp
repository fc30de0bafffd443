#ifndef ITERFIX_RNG_HPP
#define ITERFIX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "iterfix/poly.hpp"

namespace iterfix {

using Rng = std::mt19937_64;

inline Rng seeded_rng(std::uint64_t seed) { return Rng{seed}; }

/// Uniform in [0, 1) built directly from engine words, so draws are
/// reproducible independent of the standard library's distributions.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

/// Uniform over the closed disk of the given radius, by polar sampling.
/// Always consumes exactly two engine words.
inline Complex uniform_disk(Rng& rng, double radius) {
    double r = radius * std::sqrt(uniform_unit(rng));
    double t = 2.0 * std::numbers::pi * uniform_unit(rng);
    return Complex{r * std::cos(t), r * std::sin(t)};
}

/// Uniform over the annulus lo <= |z| <= hi (area measure).
inline Complex uniform_annulus(Rng& rng, double lo, double hi) {
    double r = std::sqrt(uniform_range(rng, lo * lo, hi * hi));
    double t = 2.0 * std::numbers::pi * uniform_unit(rng);
    return Complex{r * std::cos(t), r * std::sin(t)};
}

} // namespace iterfix

#endif
