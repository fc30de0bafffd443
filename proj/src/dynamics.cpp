#include "iterfix/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace iterfix {

namespace {

long long checked_power(int d, int n, int cap) {
    long long acc = 1;
    for (int k = 0; k < n; ++k) {
        acc *= d;
        if (acc > cap) {
            throw DegreeOverflow("fixed_points: degree " + std::to_string(d) + "^" +
                                 std::to_string(n) + " exceeds cap " + std::to_string(cap));
        }
    }
    return acc;
}

// Fixed points of p^n are found by Aberth iteration on F(z) = p^n(z) - z
// evaluated in composed form: n nested Horner passes for the value and the
// chain-rule product for the derivative.  Expanding p^n first is hopeless
// beyond small degrees: the expanded coefficients peak combinatorially, so
// the achievable root accuracy degrades by the ratio peak/lead and the
// stopping balls around distinct roots start to overlap.  The composed
// evaluation keeps the residual scale at the size of numbers actually met
// along the orbit.
struct OrbitEval {
    Complex value{0.0, 0.0};
    Complex derivative{0.0, 0.0};
    Complex correction{0.0, 0.0};
    double noise = 1.0; // first-order propagation of per-level Horner noise
    bool finite = true;
    bool derivative_ok = true;
};

double mag_horner(const std::vector<double>& m, double x) {
    double acc = m.back();
    for (std::size_t k = m.size() - 1; k-- > 0;) acc = acc * x + m[k];
    return acc;
}

struct ComposedMap {
    const Polynomial& p;
    Polynomial dp;
    int n;
    std::vector<double> pmag;
    std::vector<double> dpmag;

    ComposedMap(const Polynomial& poly, int iterations)
        : p(poly), dp(poly.derivative()), n(iterations) {
        for (const auto& c : p.coeffs()) pmag.push_back(std::abs(c));
        for (const auto& c : dp.coeffs()) dpmag.push_back(std::abs(c));
    }

    OrbitEval eval(Complex z) const {
        OrbitEval out;
        Complex w = z;
        Complex prod{1.0, 0.0};
        double noise = 0.0;
        for (int k = 0; k < n; ++k) {
            double aw = std::abs(w);
            if (!std::isfinite(aw)) {
                out.finite = false;
                return out;
            }
            noise = mag_horner(dpmag, aw) * noise + mag_horner(pmag, aw);
            prod *= dp(w);
            w = p(w);
        }
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
            out.finite = false;
            return out;
        }
        out.value = w - z;
        out.derivative = prod - Complex{1.0, 0.0};
        out.noise = noise + std::abs(z) + 1.0;
        if (std::abs(out.derivative) < 1e-300) {
            out.derivative_ok = false;
        } else {
            out.correction = out.value / out.derivative;
        }
        return out;
    }

    bool converged(const OrbitEval& e, double tol) const {
        return e.finite && std::abs(e.value) <= tol * e.noise;
    }
};

// Smallest R >= 1 with |a_d| R^d >= R + sum_{k<d} |a_k| R^k.  Beyond it
// |p(z)| > |z|, orbits escape monotonically, and no periodic point of any
// iterate survives.
double escape_radius(const Polynomial& p) {
    const auto& c = p.coeffs();
    const int d = p.degree();
    double lead = std::abs(c.back());
    auto excess = [&](double r) {
        double acc = 0.0;
        double rk = 1.0;
        for (int k = 0; k < d; ++k) {
            acc += std::abs(c[static_cast<std::size_t>(k)]) * rk;
            rk *= r;
        }
        return lead * rk - r - acc;
    };
    double hi = 1.0;
    while (excess(hi) <= 0.0 && hi < 1e8) hi *= 2.0;
    double lo = std::max(1.0, hi / 2.0);
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

std::vector<Complex> fixpoint_initial_circle(double radius, int count) {
    std::vector<Complex> pts(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        double t = 2.0 * std::numbers::pi * k / count + 0.4;
        pts[static_cast<std::size_t>(k)] = radius * Complex{std::cos(t), std::sin(t)};
    }
    return pts;
}

int composed_sweep(const ComposedMap& map, std::vector<Complex>& z, double tol) {
    const std::size_t count = z.size();
    std::vector<Complex> next(count);
    int unconverged = 0;
    for (std::size_t i = 0; i < count; ++i) {
        OrbitEval e = map.eval(z[i]);
        if (map.converged(e, tol)) {
            next[i] = z[i];
            continue;
        }
        ++unconverged;
        if (!e.finite) {
            // Escaped past representable range; pull toward the origin.
            next[i] = 0.5 * z[i];
            continue;
        }
        if (!e.derivative_ok) {
            double bump = 1e-6 * (1.0 + std::abs(z[i]));
            next[i] = z[i] + Complex{bump, bump * 0.5};
            continue;
        }
        Complex repulsion{0.0, 0.0};
        for (std::size_t j = 0; j < count; ++j) {
            if (j == i) continue;
            Complex diff = z[i] - z[j];
            if (diff == Complex{0.0, 0.0}) {
                diff = Complex{1e-14 * (1.0 + std::abs(z[i])), 0.0};
            }
            repulsion += Complex{1.0, 0.0} / diff;
        }
        Complex denom = Complex{1.0, 0.0} - e.correction * repulsion;
        Complex step = (std::abs(denom) < 1e-300) ? e.correction : e.correction / denom;
        next[i] = z[i] - step;
    }
    z.swap(next);
    return unconverged;
}

bool run_composed_aberth(const ComposedMap& map, std::vector<Complex>& z,
                         const RootFindConfig& cfg) {
    for (int it = 0; it < cfg.max_iterations; ++it) {
        if (composed_sweep(map, z, cfg.residual_tol) == 0) return true;
    }
    for (const auto& zi : z) {
        if (!map.converged(map.eval(zi), cfg.residual_tol)) return false;
    }
    return true;
}

std::vector<int> divisors_of(int n) {
    std::vector<int> out;
    for (int m = 1; m <= n; ++m) {
        if (n % m == 0) out.push_back(m);
    }
    return out;
}

} // namespace

const char* to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::attracting: return "attracting";
        case StabilityClass::indifferent: return "indifferent";
        case StabilityClass::repelling: return "repelling";
    }
    return "indifferent";
}

Complex multiplier(const Polynomial& p, int n, Complex xi) {
    if (n < 1) throw Error("multiplier: n must be >= 1");
    Polynomial dp = p.derivative();
    Complex w = xi;
    Complex prod{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        prod *= dp(w);
        w = p(w);
    }
    return prod;
}

StabilityClass classify(Complex multiplier_value, double classify_tol) {
    double m = std::abs(multiplier_value);
    if (m > 1.0 + classify_tol) return StabilityClass::repelling;
    if (m < 1.0 - classify_tol) return StabilityClass::attracting;
    return StabilityClass::indifferent;
}

StabilityClass classify(const PeriodicPoint& pt, double classify_tol) {
    return classify(pt.multiplier, classify_tol);
}

void group_cycles(std::vector<PeriodicPoint>& points, const Polynomial& p, int n,
                  double fixpoint_tol, std::vector<std::string>* warnings) {
    const std::size_t count = points.size();
    if (count == 0) return;
    const std::vector<int> divisors = divisors_of(n);

    // Nearest representative, or npos when nothing is within tolerance.
    auto match = [&](Complex z, double tol) -> std::size_t {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        double best_dist = tol;
        for (std::size_t j = 0; j < count; ++j) {
            double dist = std::abs(points[j].location - z);
            if (dist <= best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        return best;
    };

    std::vector<std::size_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (std::size_t i = 0; i < count; ++i) {
        OrbitResult orb = orbit(p, points[i].location, n);
        double scale = 1.0;
        for (const auto& w : orb.points) scale = std::max(scale, std::abs(w));
        double tol = fixpoint_tol * scale;

        int period = n;
        for (int m : divisors) {
            if (std::abs(orb.points[static_cast<std::size_t>(m)] - points[i].location) < tol) {
                period = m;
                break;
            }
        }
        if (std::abs(orb.points[static_cast<std::size_t>(n)] - points[i].location) >= tol &&
            warnings != nullptr) {
            warnings->push_back("fixed-point residual above tolerance at " +
                                format_complex(points[i].location));
        }
        points[i].exact_period = period;

        for (int k = 1; k < period; ++k) {
            std::size_t j = match(orb.points[static_cast<std::size_t>(k)], tol);
            if (j == std::numeric_limits<std::size_t>::max()) {
                if (warnings != nullptr) {
                    warnings->push_back("orbit image unmatched for point at " +
                                        format_complex(points[i].location));
                }
                continue;
            }
            parent[find(i)] = find(j);
        }
    }

    // Label cycles in order of first appearance over the (sorted) points.
    std::vector<int> label(count, -1);
    int next_id = 0;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t r = find(i);
        if (label[r] < 0) label[r] = next_id++;
        points[i].cycle_id = label[r];
    }
}

FixedPointReport fixed_points(const Polynomial& p, int n, const RootFindConfig& rcfg,
                              const DynamicsConfig& dcfg) {
    if (n < 1) throw Error("fixed_points: n must be >= 1");
    const int d = p.degree();
    if (d < 2) throw DegreeTooLow("fixed_points: degree must be at least 2");
    long long total = checked_power(d, n, dcfg.max_degree);

    ComposedMap map(p, n);
    double radius = 1.1 * escape_radius(p);
    std::vector<Complex> roots = fixpoint_initial_circle(radius, static_cast<int>(total));
    if (!run_composed_aberth(map, roots, rcfg)) {
        roots = fixpoint_initial_circle(radius * (1.0 + rcfg.restart_perturbation),
                                        static_cast<int>(total));
        if (!run_composed_aberth(map, roots, rcfg)) {
            throw NoConvergence("fixed_points: residual target not met after restart (d=" +
                                std::to_string(d) + ", n=" + std::to_string(n) + ")");
        }
    }

    DifferentiableFn fn = [&](Complex z) -> ValueAndDerivative {
        OrbitEval e = map.eval(z);
        return {e.value, e.derivative};
    };

    std::vector<Complex> refined = std::move(roots);
    std::vector<double> link_radii(refined.size(), rcfg.cluster_radius);
    for (std::size_t i = 0; i < refined.size(); ++i) {
        double max_move = std::max(10.0 * rcfg.cluster_radius, 1e-2 * (1.0 + std::abs(refined[i])));
        try {
            refined[i] = newton_polish(fn, refined[i], rcfg.newton_polish_steps, max_move);
        } catch (const DerivativeVanishes&) {
            // parabolic direction: the converged location is already the best we have
        }
        OrbitEval e = map.eval(refined[i]);
        double corr = e.derivative_ok ? std::abs(e.correction) : 1e300;
        double cap = 1e-2 * (1.0 + std::abs(refined[i]));
        link_radii[i] = std::clamp(10.0 * corr, rcfg.cluster_radius, cap);
    }

    std::vector<RootCluster> clusters = cluster_roots_adaptive(refined, link_radii);
    for (auto& cluster : clusters) {
        double max_move =
            std::max(10.0 * rcfg.cluster_radius, 1e-2 * (1.0 + std::abs(cluster.location)));
        try {
            cluster.location =
                newton_polish(fn, cluster.location, rcfg.newton_polish_steps, max_move);
        } catch (const DerivativeVanishes&) {
        }
    }

    FixedPointReport report;
    report.n = n;
    report.d = d;
    report.total_count_with_multiplicity = static_cast<int>(total);
    report.points.reserve(clusters.size());
    for (const auto& cluster : clusters) {
        PeriodicPoint pt;
        pt.location = cluster.location;
        pt.multiplicity = cluster.multiplicity;
        pt.multiplier = multiplier(p, n, cluster.location);
        report.points.push_back(pt);
    }

    group_cycles(report.points, p, n, dcfg.fixpoint_tol, &report.warnings);

    for (const auto& pt : report.points) {
        if (pt.multiplicity >= 2 && std::abs(pt.multiplier - Complex{1.0, 0.0}) >= dcfg.parabolic_tol) {
            report.warnings.push_back(
                "cluster of multiplicity " + std::to_string(pt.multiplicity) + " at " +
                format_complex(pt.location) +
                " has multiplier away from 1; likely a degenerate tie of distinct roots");
        }
    }
    return report;
}

double max_multiplier(const Polynomial& p, int n, const RootFindConfig& rcfg,
                      const DynamicsConfig& dcfg) {
    FixedPointReport report = fixed_points(p, n, rcfg, dcfg);
    double best = 0.0;
    for (const auto& pt : report.points) {
        best = std::max(best, std::abs(pt.multiplier));
    }
    return best;
}

} // namespace iterfix
