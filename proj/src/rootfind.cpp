#include "iterfix/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace iterfix {

namespace {

// Offset of the initial-guess circle; avoids locking onto coefficient
// symmetries (e.g. roots of unity for z^d - 1).
constexpr double kInitialAngleOffset = 0.4;

// Adaptive clustering: link radius is this multiple of the local Newton
// correction, floored at cluster_radius.  Approximations of an m-fold
// root sit ~m Newton corrections from each other.
constexpr double kLinkRadiusFactor = 10.0;

struct Balanced {
    std::vector<Complex> coeffs;     // ascending, scaled so max |a_k| = 1
    std::vector<double> mags;        // |a_k|
    std::vector<Complex> rev_coeffs; // coefficients of z^d q(1/z)
    std::vector<double> rev_mags;
    int degree = 0;

    explicit Balanced(const Polynomial& q) {
        coeffs = q.coeffs();
        degree = q.degree();
        double scale = 0.0;
        for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
        if (scale > 0.0) {
            for (auto& c : coeffs) c /= scale;
        }
        mags.resize(coeffs.size());
        for (std::size_t k = 0; k < coeffs.size(); ++k) mags[k] = std::abs(coeffs[k]);
        rev_coeffs.assign(coeffs.rbegin(), coeffs.rend());
        rev_mags.assign(mags.rbegin(), mags.rend());
    }

    static Complex horner(const std::vector<Complex>& c, Complex z) {
        Complex acc = c.back();
        for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
        return acc;
    }

    static double horner_mag(const std::vector<double>& m, double x) {
        double acc = m.back();
        for (std::size_t k = m.size() - 1; k-- > 0;) acc = acc * x + m[k];
        return acc;
    }

    static Complex horner_deriv(const std::vector<Complex>& c, Complex z) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = c.size() - 1; k-- > 0;) {
            acc = acc * z + c[k + 1] * static_cast<double>(k + 1);
        }
        return acc;
    }

    // Newton correction q/q', the scaled residual magnitude, and the
    // matching scaled majorant bound, all overflow-safe.  For |z| > 1 the
    // reversed coefficients are evaluated at 1/z, which divides both the
    // residual and the majorant by |z|^degree and leaves the correction
    // exact.
    struct Local {
        Complex correction{0.0, 0.0};
        double residual = 0.0;    // |q(z)|, possibly scaled by |z|^-d
        double majorant = 0.0;    // sum |a_k| |z|^k, same scaling
        double floor_scale = 1.0; // the unit coefficient bound, same scaling
        bool derivative_ok = true;
    };

    Local eval(Complex z) const {
        Local out;
        double az = std::abs(z);
        if (az <= 1.0) {
            Complex v = horner(coeffs, z);
            Complex dv = horner_deriv(coeffs, z);
            out.residual = std::abs(v);
            out.majorant = horner_mag(mags, az);
            if (std::abs(dv) < 1e-300) {
                out.derivative_ok = false;
            } else {
                out.correction = v / dv;
            }
        } else {
            Complex u = Complex{1.0, 0.0} / z;
            Complex rv = horner(rev_coeffs, u);
            Complex rdv = horner_deriv(rev_coeffs, u);
            // q(z) = z^d rv(u);  q'(z) = z^{d-1} (d rv(u) - u rv'(u))
            Complex denom = static_cast<double>(degree) * rv - u * rdv;
            out.residual = std::abs(rv);
            out.majorant = horner_mag(rev_mags, std::abs(u));
            out.floor_scale = std::pow(std::abs(u), degree);
            if (std::abs(denom) < 1e-300) {
                out.derivative_ok = false;
            } else {
                out.correction = z * rv / denom;
            }
        }
        return out;
    }

    // The floor term bounds the criterion below at the largest coefficient
    // modulus (the balanced scale), so roots at or near the origin can
    // converge: for q = z^2 the pure ratio |q|/majorant is identically 1.
    // The floor carries the same |z|^-d scaling as the residual, otherwise
    // points outside the unit disk would pass with |q| up to tol * |z|^d.
    //
    // The tolerance is capped at twice the worst-case Horner rounding bound
    // (gamma_2d ~ 2 * degree * eps).  High-degree polynomials with clustered
    // roots have a pseudozero shell outside the root set where cancellation
    // keeps |q| below 1e-12 * majorant; points must not freeze there.  At a
    // genuine root the computed residual stays below the rounding bound, so
    // the capped criterion remains reachable.
    bool converged(const Local& l, double tol) const {
        double eff = std::min(tol, 2.0 * degree * std::numeric_limits<double>::epsilon());
        return l.residual <= eff * (l.majorant + l.floor_scale);
    }
};

// Newton-polygon initialization: starting points sit on circles whose radii
// follow the upper convex hull of (k, log |a_k|), matching the modulus
// profile of the roots.  A single bounding circle (Cauchy or Fujiwara) can
// start every point orders of magnitude out for iterated polynomials, whose
// peak coefficient dwarfs the leading one, and the simultaneous walk inward
// then costs ~degree sweeps per factor e of radius.
std::vector<Complex> initial_circle(const Balanced& b, double radius_scale) {
    const int d = b.degree;
    std::vector<int> support;
    for (int k = 0; k <= d; ++k) {
        if (b.mags[static_cast<std::size_t>(k)] > 0.0) support.push_back(k);
    }
    auto lm = [&](int k) { return std::log(b.mags[static_cast<std::size_t>(k)]); };
    std::vector<int> hull;
    for (int k : support) {
        while (hull.size() >= 2) {
            int p1 = hull[hull.size() - 2];
            int p2 = hull[hull.size() - 1];
            double cross = static_cast<double>(p2 - p1) * (lm(k) - lm(p1)) -
                           static_cast<double>(k - p1) * (lm(p2) - lm(p1));
            if (cross >= 0.0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(k);
    }

    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(d));
    auto put_circle = [&](int count, double radius, double phase) {
        for (int j = 0; j < count; ++j) {
            double t = 2.0 * std::numbers::pi * j / count + kInitialAngleOffset + phase;
            pts.push_back(radius * Complex{std::cos(t), std::sin(t)});
        }
    };
    // Exact zero roots (vanishing trailing coefficients) get a small circle.
    if (support.front() > 0) put_circle(support.front(), 1e-3 * radius_scale, 0.0);
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        int k1 = hull[e];
        int k2 = hull[e + 1];
        double radius = std::exp((lm(k1) - lm(k2)) / (k2 - k1));
        // Phase shift per circle so different circles never line up radially.
        put_circle(k2 - k1, radius * radius_scale, 1.7 * static_cast<double>(e + 1));
    }
    return pts;
}

// One full pass of simultaneous iteration; returns the number of points
// still above the residual target.
int aberth_sweep(const Balanced& b, std::vector<Complex>& z, double tol) {
    const std::size_t n = z.size();
    std::vector<Complex> next(n);
    int unconverged = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Balanced::Local l = b.eval(z[i]);
        if (b.converged(l, tol)) {
            next[i] = z[i];
            continue;
        }
        ++unconverged;
        if (!l.derivative_ok) {
            // Stationary point of q; nudge deterministically off it.
            double bump = 1e-6 * (1.0 + std::abs(z[i]));
            next[i] = z[i] + Complex{bump, bump * 0.5};
            continue;
        }
        Complex repulsion{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Complex diff = z[i] - z[j];
            if (diff == Complex{0.0, 0.0}) {
                diff = Complex{1e-14 * (1.0 + std::abs(z[i])), 0.0};
            }
            repulsion += Complex{1.0, 0.0} / diff;
        }
        Complex denom = Complex{1.0, 0.0} - l.correction * repulsion;
        Complex step = (std::abs(denom) < 1e-300) ? l.correction : l.correction / denom;
        next[i] = z[i] - step;
    }
    z.swap(next);
    return unconverged;
}

bool run_aberth(const Balanced& b, std::vector<Complex>& z, const RootFindConfig& cfg,
                int& iterations) {
    for (int it = 0; it < cfg.max_iterations; ++it) {
        int unconverged = aberth_sweep(b, z, cfg.residual_tol);
        ++iterations;
        if (unconverged == 0) return true;
    }
    // Count convergence state after the final sweep.
    for (const auto& zi : z) {
        if (!b.converged(b.eval(zi), cfg.residual_tol)) return false;
    }
    return true;
}

struct CentroidAccumulator {
    Complex sum{0.0, 0.0};
    int count = 0;
};

std::vector<RootCluster> link_clusters(std::span<const Complex> raw,
                                       const std::function<double(std::size_t)>& radius_of) {
    const std::size_t n = raw.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double link = std::max(radius_of(i), radius_of(j));
            if (std::abs(raw[i] - raw[j]) <= link) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<CentroidAccumulator> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        acc[r].sum += raw[i];
        acc[r].count += 1;
    }
    std::vector<RootCluster> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (acc[i].count == 0) continue;
        out.push_back({acc[i].sum / static_cast<double>(acc[i].count), acc[i].count});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

} // namespace

RawRoots aberth_roots(const Polynomial& q, const RootFindConfig& cfg) {
    if (q.degree() < 1) throw Error("aberth_roots: degree must be >= 1");
    Balanced b(q);
    RawRoots out;
    std::vector<Complex> z = initial_circle(b, 1.0);
    if (run_aberth(b, z, cfg, out.iterations_used)) {
        out.points = std::move(z);
        return out;
    }
    // One deterministic rescue: restart from a perturbed circle.
    z = initial_circle(b, 1.0 + cfg.restart_perturbation);
    if (run_aberth(b, z, cfg, out.iterations_used)) {
        out.points = std::move(z);
        return out;
    }
    throw NoConvergence("aberth_roots: residual target not met after restart (degree " +
                        std::to_string(q.degree()) + ")");
}

Complex newton_polish(const DifferentiableFn& f, Complex z0, int steps, double max_move) {
    Complex best = z0;
    auto [v0, d0] = f(z0);
    double best_mag = std::abs(v0);
    Complex z = z0;
    Complex v = v0;
    Complex d = d0;
    for (int s = 0; s < steps; ++s) {
        if (std::abs(d) < 1e-300) {
            throw DerivativeVanishes("newton_polish: |f'| underflow");
        }
        Complex step = v / d;
        Complex zn = z - step;
        if (std::abs(zn - z0) > max_move) break;
        z = zn;
        std::tie(v, d) = f(z);
        double mag = std::abs(v);
        if (mag < best_mag) {
            best_mag = mag;
            best = z;
        }
        if (mag == 0.0) break;
    }
    return best;
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> raw, double radius) {
    if (radius <= 0.0) throw Error("cluster_roots: radius must be positive");
    return link_clusters(raw, [radius](std::size_t) { return radius; });
}

std::vector<RootCluster> cluster_roots_adaptive(std::span<const Complex> raw,
                                                std::span<const double> radii) {
    if (raw.size() != radii.size()) throw Error("cluster_roots_adaptive: size mismatch");
    return link_clusters(raw, [&](std::size_t i) { return radii[i]; });
}

RootSet find_roots(const Polynomial& q, const RootFindConfig& cfg) {
    if (q.degree() < 1) throw Error("find_roots: degree must be >= 1");
    Balanced b(q);
    RawRoots raw = aberth_roots(q, cfg);

    // Newton only needs the ratio f/f' and |f|; fabricate a consistent
    // pair from the overflow-safe local evaluation.
    DifferentiableFn fn = [&b](Complex z) -> ValueAndDerivative {
        Balanced::Local l = b.eval(z);
        if (!l.derivative_ok) return {Complex{l.residual, 0.0}, Complex{0.0, 0.0}};
        double c = std::abs(l.correction);
        if (c == 0.0) return {Complex{0.0, 0.0}, Complex{1.0, 0.0}};
        double s = l.residual / c;
        return {l.correction * s, Complex{s, 0.0}};
    };

    std::vector<Complex> polished = raw.points;
    std::vector<double> link_radii(polished.size(), cfg.cluster_radius);

    for (std::size_t i = 0; i < polished.size(); ++i) {
        // The move cap only needs to rule out cross-basin jumps; it must not
        // block corrections of ill-conditioned roots, which can legitimately
        // exceed the cluster radius by several orders of magnitude.
        double max_move =
            std::max(10.0 * cfg.cluster_radius, 1e-2 * (1.0 + std::abs(polished[i])));
        try {
            polished[i] = newton_polish(fn, polished[i], cfg.newton_polish_steps, max_move);
        } catch (const DerivativeVanishes&) {
            // keep the unpolished approximation
        }
        Balanced::Local l = b.eval(polished[i]);
        double corr = l.derivative_ok ? std::abs(l.correction) : 1e300;
        double cap = 1e-2 * (1.0 + std::abs(polished[i]));
        link_radii[i] = std::clamp(kLinkRadiusFactor * corr, cfg.cluster_radius, cap);
    }

    RootSet out;
    out.roots = cluster_roots_adaptive(polished, link_radii);
    out.iterations_used = raw.iterations_used;
    out.converged = true;

    // A cluster centroid is a better representative than any member;
    // polish it too, keeping the best residual seen.
    for (auto& cluster : out.roots) {
        double max_move =
            std::max(10.0 * cfg.cluster_radius, 1e-2 * (1.0 + std::abs(cluster.location)));
        try {
            cluster.location =
                newton_polish(fn, cluster.location, cfg.newton_polish_steps, max_move);
        } catch (const DerivativeVanishes&) {
        }
    }
    return out;
}

} // namespace iterfix
