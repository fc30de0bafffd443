#ifndef ITERFIX_VERIFY_HPP
#define ITERFIX_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iterfix/poly.hpp"
#include "iterfix/rng.hpp"

namespace iterfix {

/// Outcome of one named invariant check.  `worst` is the largest residual
/// (or mismatch) seen across the sweep and is compared against `tol`.
struct CheckResult {
    std::string name;
    long long samples = 0;
    double worst = 0.0;
    double tol = 0.0;
    int failures = 0; // samples that threw instead of producing a residual
    bool passed = false;
};

/// Sample counts for the invariant sweeps.  desk_scale() keeps the CLI
/// verify subcommand interactive; acceptance_scale() uses the full counts
/// the project is graded against.
struct VerifyConfig {
    std::uint64_t seed = 0;
    int trace_samples = 10;        // per (d, n) grid cell
    int quadratic_c_samples = 40;  // |c| == 0 for degree 2
    int w_independence_samples = 25;
    int c_consistency_samples = 25;
    int re_c2_grid = 8; // grid points per axis in (d, r, t)
    int cycle_sum_samples = 60;
    int scan_samples = 150; // per degree in {2, 3, 4}
    int monomial_cap = 256; // d^n cap for the monomial sweep
    int conjugation_samples = 20;
    int quadratic_oracle_samples = 80;
    int factored_oracle_samples = 12;
    int residual_samples = 8;
    int count_samples = 5; // per (d, n) grid cell
};

VerifyConfig desk_scale(std::uint64_t seed);
VerifyConfig acceptance_scale(std::uint64_t seed);

/// Random polynomial for the identity sweeps: coefficients uniform in the
/// unit disk, leading coefficient modulus forced into [0.5, 2].
Polynomial sample_identity_polynomial(Rng& rng, int d);

/// Greedy closest-pair matching between two multisets of complex values.
/// Returns the worst matched distance, absolute or relative to
/// max(1, |a|); +inf if the sizes differ.
double match_multisets(std::vector<Complex> a, std::vector<Complex> b, bool relative = false);

// Individual checks.  Each runs its sweep to completion and reports the
// worst case; per-sample exceptions count as failures, never aborts.
std::pair<CheckResult, CheckResult> check_trace_grid(const VerifyConfig& cfg); // trace + w agreement
CheckResult check_quadratic_c_zero(const VerifyConfig& cfg);
CheckResult check_w_independence(const VerifyConfig& cfg);
CheckResult check_c_consistency(const VerifyConfig& cfg);
CheckResult check_re_c2_grid(const VerifyConfig& cfg);
CheckResult check_cycle_sums(const VerifyConfig& cfg);
CheckResult check_theorem3_scan(const VerifyConfig& cfg);
CheckResult check_monomial_multiplier(const VerifyConfig& cfg);
CheckResult check_conjugation_invariance(const VerifyConfig& cfg);
CheckResult check_scan_determinism(const VerifyConfig& cfg);
CheckResult check_quadratic_oracle(const VerifyConfig& cfg);
CheckResult check_factored_roots_oracle(const VerifyConfig& cfg);
CheckResult check_root_residuals(const VerifyConfig& cfg);
CheckResult check_fixed_point_count(const VerifyConfig& cfg);

/// Suites: "identities", "bounds", "oracles", or "all".  Unknown names
/// raise ParseError.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& cfg);

} // namespace iterfix

#endif
