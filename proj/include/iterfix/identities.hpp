#ifndef ITERFIX_IDENTITIES_HPP
#define ITERFIX_IDENTITIES_HPP

#include <utility>
#include <vector>

#include "iterfix/dynamics.hpp"
#include "iterfix/poly.hpp"
#include "iterfix/rootfind.hpp"

namespace iterfix {

/// Both sides of the multiplier-sum identity
///   sum over fixed points of p^n of (p^n)' = d^n (d^n - 1) + c^n,
/// where c is the derivative sum over any fiber p^{-1}(w).
struct TraceReport {
    int n = 1;
    int d = 0;
    Complex c;
    Complex lhs;
    Complex rhs;
    double abs_residual = 0.0;
    double rel_residual = 0.0; // |lhs-rhs| / max(1, |rhs|)
    std::vector<Complex> w_samples;
};

inline const std::vector<Complex>& default_w_samples() {
    static const std::vector<Complex> samples{Complex{0.0, 0.0}, Complex{1.0, 1.0},
                                              Complex{-2.0, 0.0}};
    return samples;
}

inline constexpr double kCAgreementTol = 1e-6;

/// sum of p'(z) over solutions of p(z) = w, counted with multiplicity.
/// Independent of w; the redundancy is exploited by check_trace_identity.
Complex preimage_sum(const Polynomial& p, Complex w, const RootFindConfig& cfg = {});

/// sum over fixed points of p^n of multiplicity * multiplier, one
/// multiplier value per root cluster.
Complex trace_sum(const Polynomial& p, int n, const RootFindConfig& rcfg = {},
                  const DynamicsConfig& dcfg = {});

/// Evaluate both sides.  c is the mean of the per-w estimates; pairwise
/// disagreement beyond c_agreement_tol raises CInconsistent, which flags
/// a solver failure rather than a counterexample.
TraceReport check_trace_identity(const Polynomial& p, int n,
                                 const std::vector<Complex>& w_samples = default_w_samples(),
                                 const RootFindConfig& rcfg = {}, const DynamicsConfig& dcfg = {},
                                 double c_agreement_tol = kCAgreementTol);

/// Re(c^2) for c = -d(d-1) + r e^{it}, once directly and once through the
/// completed-square rearrangement
///   d^2(d-1)^2/2 - r^2 + 2 (d(d-1)/2 - r cos t)^2.
/// The two agree to rounding; returned as (direct, rearranged).
std::pair<double, double> re_c2_identity(int d, double r, double t);

/// For a quadratic: p' at the two fixed points sums to 2, so
/// p'(xi_{1,2}) = 1 +/- a; the period-2 part of the n = 2 trace then
/// equals 2 (5 - a^2).
struct QuadraticCycleSum {
    Complex a;
    Complex fixed_deriv_sum; // always 2 up to numerics
    Complex cycle_sum;       // multiplicity-weighted over exact-period-2 points
    Complex predicted;       // 2 (5 - a^2)
};

QuadraticCycleSum quadratic_cycle_sum_check(const Polynomial& p, const RootFindConfig& rcfg = {},
                                            const DynamicsConfig& dcfg = {});

} // namespace iterfix

#endif
