#ifndef ITERFIX_QUADRATIC_HPP
#define ITERFIX_QUADRATIC_HPP

#include <array>

#include "iterfix/poly.hpp"

namespace iterfix {

// Closed forms for quadratics.  Any degree-2 polynomial is affinely
// conjugate to z^2 + c, and the multiplier spectrum only depends on c, so
// these formulas give a route to the n = 2 spectrum that is fully
// independent of the root-finding pipeline.

/// The parameter c of the monic centered form of a degree-2 polynomial
/// a z^2 + b z + g, namely c = a*g + b/2 - b^2/4.
Complex quadratic_normal_form(const Polynomial& p);

/// Multipliers of the two fixed points of z^2 + c: 1 +/- sqrt(1 - 4c).
std::array<Complex, 2> quadratic_fixed_multipliers(Complex c);

/// Multiplier multiset over the four fixed points of (z^2 + c)^2:
/// {(1+s)^2, (1-s)^2, 4(c+1), 4(c+1)} with s = sqrt(1 - 4c).  The last
/// two entries are the two points of the period-2 cycle.
std::array<Complex, 4> quadratic_n2_spectrum(Complex c);

/// max |.| over the n = 2 spectrum of z^2 + c.
double quadratic_n2_max_multiplier(Complex c);

} // namespace iterfix

#endif
