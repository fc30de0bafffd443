#ifndef ITERFIX_BOUNDS_HPP
#define ITERFIX_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iterfix/dynamics.hpp"
#include "iterfix/poly.hpp"

namespace iterfix {

// Margins noisier than this are meaningful; roughly two orders above the
// accuracy of a polished multiplier.
inline constexpr double kViolationTol = 1e-6;
inline constexpr double kStrictnessTol = 1e-6;

enum class BoundFlavor { theorem3, conjecture_b, conjecture_c };

const char* to_string(BoundFlavor f);
BoundFlavor bound_flavor_from_string(const std::string& name);

/// Lower-bound thresholds on M_n(p):
///   theorem3      n = 2, threshold 4      (proved)
///   conjecture_b  threshold 2^n           (open)
///   conjecture_c  threshold d^n           (open, sharp for monomials)
double bound_threshold(BoundFlavor f, int d, int n);

struct BoundReport {
    int n = 2;
    int d = 0;
    double threshold = 0.0;
    double observed_max = 0.0; // M_n(p)
    double margin = 0.0;       // observed_max - threshold
    PeriodicPoint witness;     // a maximizing fixed point
    bool passed = false;       // margin >= -kViolationTol
};

BoundReport check_theorem3(const Polynomial& p, const RootFindConfig& rcfg = {},
                           const DynamicsConfig& dcfg = {});

/// n >= 2; theorem3 flavor forces n = 2.  A failed report is a
/// counterexample candidate and must pass reverify_candidate before
/// being announced.
BoundReport check_conjecture(const Polynomial& p, int n, BoundFlavor flavor,
                             const RootFindConfig& rcfg = {}, const DynamicsConfig& dcfg = {});

/// Recompute at tightened tolerances (residual 1e-14, 10 polish steps)
/// and, for quadratics at n = 2, cross-check against the closed-form
/// spectrum.  confirmed_violation is true only when everything agrees
/// that the threshold is genuinely undercut.
struct ReverifyResult {
    BoundReport report;
    bool oracle_checked = false;
    double oracle_value = 0.0;
    bool oracle_agrees = true;
    bool confirmed_violation = false;
};

ReverifyResult reverify_candidate(const Polynomial& p, int n, BoundFlavor flavor,
                                  const DynamicsConfig& dcfg = {});

/// Monic centered z^d + a_{d-2} z^{d-2} + ... + a_0 with free
/// coefficients uniform in the disk of the given radius; the sampling
/// measure recorded in ScanSummary::family.
Polynomial sample_monic_centered(int d, std::uint64_t seed, double radius);

/// Deterministic random scan over monic centered polynomials of degree d,
/// free coefficients uniform in the disk of radius 2, per-sample seed =
/// seed xor index.
struct ScanSummary {
    BoundFlavor flavor = BoundFlavor::theorem3;
    int d = 0;
    int n = 2;
    int sample_count = 0;
    std::uint64_t seed = 0;
    std::string family; // sampling-measure descriptor, for reproducibility
    double min_observed_max = 0.0; // +inf sentinel when no sample succeeded
    double min_margin = 0.0;
    bool has_argmin = false;
    Polynomial argmin;
    std::vector<std::pair<Polynomial, BoundReport>> violations; // reverified only
    int skipped = 0; // NoConvergence instances, counted never dropped
    int cleared = 0; // candidate violations dismissed by reverification
};

ScanSummary scan_family(int d, int n, BoundFlavor flavor, int samples, std::uint64_t seed,
                        const RootFindConfig& rcfg = {}, const DynamicsConfig& dcfg = {});

/// M_n(p) against d^n for n = 2..n_max.  Strict somewhere for every p not
/// conjugate to a monomial; never strict for monomials.
struct StrictnessEntry {
    int n = 2;
    double observed_max = 0.0;
    double threshold = 0.0; // d^n
    bool strict = false;    // observed_max > d^n + kStrictnessTol
};

std::vector<StrictnessEntry> strictness_probe(const Polynomial& p, int n_max,
                                              const RootFindConfig& rcfg = {},
                                              const DynamicsConfig& dcfg = {});

} // namespace iterfix

#endif
