#ifndef ITERFIX_SEARCH_HPP
#define ITERFIX_SEARCH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "iterfix/bounds.hpp"
#include "iterfix/dynamics.hpp"
#include "iterfix/poly.hpp"

namespace iterfix {

/// Derivative-free minimization of M_n over monic centered coefficient
/// space; anything persistently below the conjectured floor would be a
/// counterexample candidate.
struct SearchConfig {
    int d = 2;
    int n = 2;
    int starts = 64;
    int iters_per_start = 400;
    std::uint64_t seed = 0;
    double simplex_init_scale = 0.3;
    double objective_tol = 1e-7; // stop once the simplex diameter shrinks below this
    double domain_radius = 2.0;  // start polydisk radius per complex coefficient
    BoundFlavor flavor = BoundFlavor::conjecture_c; // selects the reported floor
    RootFindConfig rootfind;
    DynamicsConfig dynamics;
};

/// Objective value returned when the pipeline fails to converge on an
/// instance; large enough that the simplex always retreats.
inline constexpr double kPenaltyObjective = 1e12;

struct SearchResult {
    double best_value = 0.0;          // min M_n found
    std::vector<double> best_params;  // re/im interleaved free coefficients
    Polynomial best_polynomial;
    long long evaluations = 0;
    std::vector<double> per_start_bests;
    double conjecture_floor = 0.0; // d^n for C, 2^n for B
};

/// Monic centered z^d + a_{d-2} z^{d-2} + ... + a_0 from the re/im
/// interleaved vector (a_k = params[2k] + i params[2k+1]).  The length
/// must be exactly 2(d-1) for some d >= 2; otherwise BadLength.
Polynomial encode(std::span<const double> params);

/// M_n(encode(params)); the penalty sentinel on NoConvergence.
double objective(std::span<const double> params, const SearchConfig& cfg);

/// Multi-start Nelder-Mead with the standard coefficients (reflection 1,
/// expansion 2, contraction 0.5, shrink 0.5).  Per-start seed is
/// seed xor start index; results are bit-identical for a given config
/// regardless of thread count.
SearchResult minimize(const SearchConfig& cfg);

} // namespace iterfix

#endif
