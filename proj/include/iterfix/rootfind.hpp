#ifndef ITERFIX_ROOTFIND_HPP
#define ITERFIX_ROOTFIND_HPP

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "iterfix/poly.hpp"

namespace iterfix {

struct RootFindConfig {
    int max_iterations = 200;
    double residual_tol = 1e-12; // relative to the coefficient scale
    double cluster_radius = 1e-6;
    int newton_polish_steps = 3;
    double restart_perturbation = 1e-3;
};

struct RootCluster {
    Complex location;
    int multiplicity = 1;
};

struct RootSet {
    std::vector<RootCluster> roots; // sorted by (re, im); multiplicities sum to the degree
    bool converged = false;
    int iterations_used = 0;
};

/// Simultaneous Aberth-Ehrlich iteration started on Newton-polygon circles
/// (radii from the upper convex hull of the log coefficient profile),
/// Jacobi-style sweeps, one deterministic perturbed restart on failure.
/// Returns the degree-many raw approximations; throws NoConvergence.
struct RawRoots {
    std::vector<Complex> points;
    int iterations_used = 0;
};

RawRoots aberth_roots(const Polynomial& q, const RootFindConfig& cfg = {});

/// All roots of q with multiplicities recovered by clustering the raw
/// simultaneous-iteration output after Newton polishing.
RootSet find_roots(const Polynomial& q, const RootFindConfig& cfg = {});

/// Single-linkage clusters at a fixed radius; each cluster is reported as
/// its centroid with multiplicity equal to the cluster size.
std::vector<RootCluster> cluster_roots(std::span<const Complex> raw, double radius);

///// Single-linkage with a per-point link radius: i and j join when
/// |z_i - z_j| <= max(radius_i, radius_j).
std::vector<RootCluster> cluster_roots_adaptive(std::span<const Complex> raw,
                                                std::span<const double> radii);

/// Black-box evaluation returning {f(z), f'(z)}.
using ValueAndDerivative = std::pair<Complex, Complex>;
using DifferentiableFn = std::function<ValueAndDerivative(Complex)>;

/// At most `steps` Newton updates from z0; returns the iterate with the
/// smallest |f| seen, never straying further than max_move from z0.
/// Throws DerivativeVanishes when |f'| underflows at an iterate; the
/// caller keeps z0 in that case.
Complex newton_polish(const DifferentiableFn& f, Complex z0, int steps, double max_move);

} // namespace iterfix

#endif
