#ifndef ITERFIX_DYNAMICS_HPP
#define ITERFIX_DYNAMICS_HPP

#include <string>
#include <vector>

#include "iterfix/poly.hpp"
#include "iterfix/rootfind.hpp"

namespace iterfix {

struct DynamicsConfig {
    double fixpoint_tol = 1e-8;  // residual target, scaled by orbit magnitude
    double classify_tol = 1e-9;  // dead zone around |multiplier| = 1
    double parabolic_tol = 1e-4; // multiple roots must carry multiplier ~ 1
    int max_degree = kDefaultMaxDegree;
};

enum class StabilityClass { attracting, indifferent, repelling };

const char* to_string(StabilityClass c);

/// A fixed point xi of p^n together with its multiplier (p^n)'(xi), its
/// multiplicity as a root of p^n(z) - z, and its orbit data under p.
struct PeriodicPoint {
    Complex location;
    Complex multiplier;
    int multiplicity = 1;
    int exact_period = 1; // least divisor m of n with p^m(xi) = xi
    int cycle_id = 0;
};

struct FixedPointReport {
    int n = 1;
    int d = 0;
    std::vector<PeriodicPoint> points; // sorted by (re, im) of location
    int total_count_with_multiplicity = 0; // always d^n
    std::vector<std::string> warnings;     // degenerate clusters, match failures
};

/// All fixed points of p^n with multipliers, multiplicities, exact periods
/// and cycle labels.  Needs degree >= 2 and d^n within the degree cap.
FixedPointReport fixed_points(const Polynomial& p, int n, const RootFindConfig& rcfg = {},
                              const DynamicsConfig& dcfg = {});

/// (p^n)'(xi) as the chain-rule product of p' along the orbit of xi.
/// Never differentiates the expanded iterate.
Complex multiplier(const Polynomial& p, int n, Complex xi);

StabilityClass classify(Complex multiplier_value, double classify_tol = 1e-9);
StabilityClass classify(const PeriodicPoint& pt, double classify_tol = 1e-9);

/// Fill exact_period and cycle_id for fixed points of p^n by matching
/// orbit images back onto the point set.  Match failures are reported via
/// warnings when given.
void group_cycles(std::vector<PeriodicPoint>& points, const Polynomial& p, int n,
                  double fixpoint_tol = 1e-8, std::vector<std::string>* warnings = nullptr);

/// M_n(p): the largest |(p^n)'(xi)| over all fixed points of p^n.
double max_multiplier(const Polynomial& p, int n, const RootFindConfig& rcfg = {},
                      const DynamicsConfig& dcfg = {});

} // namespace iterfix

#endif
