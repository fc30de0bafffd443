#include "iterfix/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "iterfix/parallel.hpp"
#include "iterfix/rng.hpp"

namespace iterfix {

namespace {

struct StartOutcome {
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_params;
    long long evaluations = 0;
};

double simplex_diameter(const std::vector<std::vector<double>>& verts, std::size_t best) {
    double diam = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i == best) continue;
        double dist = 0.0;
        for (std::size_t k = 0; k < verts[i].size(); ++k) {
            dist = std::max(dist, std::abs(verts[i][k] - verts[best][k]));
        }
        diam = std::max(diam, dist);
    }
    return diam;
}

StartOutcome run_start(const SearchConfig& cfg, std::uint64_t start_seed) {
    const std::size_t dim = 2 * static_cast<std::size_t>(cfg.d - 1);
    Rng rng = seeded_rng(start_seed);

    std::vector<double> x0(dim);
    for (std::size_t k = 0; k < dim; k += 2) {
        Complex a = uniform_disk(rng, cfg.domain_radius);
        x0[k] = a.real();
        x0[k + 1] = a.imag();
    }

    StartOutcome out;
    auto track = [&](const std::vector<double>& x, double value) {
        if (value < out.best) {
            out.best = value;
            out.best_params = x;
        }
    };
    auto f = [&](const std::vector<double>& x) {
        ++out.evaluations;
        double value = objective(x, cfg);
        track(x, value);
        return value;
    };

    f(x0);
    if (cfg.iters_per_start <= 0) return out;

    // Simplex: the start plus one axis bump per coordinate.
    std::vector<std::vector<double>> verts(dim + 1, x0);
    std::vector<double> values(dim + 1);
    values[0] = out.best;
    for (std::size_t k = 0; k < dim; ++k) {
        verts[k + 1][k] += cfg.simplex_init_scale;
        values[k + 1] = f(verts[k + 1]);
    }

    std::vector<std::size_t> order(dim + 1);
    for (int iter = 0; iter < cfg.iters_per_start; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::size_t best = order[0];
        std::size_t second_worst = order[dim - 1];
        std::size_t worst = order[dim];

        if (simplex_diameter(verts, best) < cfg.objective_tol) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += verts[i][k];
        }
        for (auto& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double t) {
            std::vector<double> x(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                x[k] = centroid[k] + t * (centroid[k] - verts[worst][k]);
            }
            return x;
        };

        std::vector<double> reflected = blend(1.0);
        double f_reflected = f(reflected);

        if (f_reflected < values[best]) {
            std::vector<double> expanded = blend(2.0);
            double f_expanded = f(expanded);
            if (f_expanded < f_reflected) {
                verts[worst] = std::move(expanded);
                values[worst] = f_expanded;
            } else {
                verts[worst] = std::move(reflected);
                values[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < values[second_worst]) {
            verts[worst] = std::move(reflected);
            values[worst] = f_reflected;
            continue;
        }

        bool outside = f_reflected < values[worst];
        std::vector<double> contracted = blend(outside ? 0.5 : -0.5);
        double f_contracted = f(contracted);
        if ((outside && f_contracted <= f_reflected) || (!outside && f_contracted < values[worst])) {
            verts[worst] = std::move(contracted);
            values[worst] = f_contracted;
            continue;
        }

        // Shrink toward the best vertex.
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < dim; ++k) {
                verts[i][k] = verts[best][k] + 0.5 * (verts[i][k] - verts[best][k]);
            }
            values[i] = f(verts[i]);
        }
    }
    return out;
}

} // namespace

Polynomial encode(std::span<const double> params) {
    if (params.empty() || params.size() % 2 != 0) {
        throw BadLength("encode: parameter vector must have positive even length, got " +
                        std::to_string(params.size()));
    }
    const int d = static_cast<int>(params.size() / 2) + 1;
    std::vector<Complex> coeffs(static_cast<std::size_t>(d) + 1, Complex{0.0, 0.0});
    for (int k = 0; k <= d - 2; ++k) {
        coeffs[static_cast<std::size_t>(k)] =
            Complex{params[2 * static_cast<std::size_t>(k)],
                    params[2 * static_cast<std::size_t>(k) + 1]};
    }
    coeffs[static_cast<std::size_t>(d)] = Complex{1.0, 0.0};
    return Polynomial(std::move(coeffs));
}

double objective(std::span<const double> params, const SearchConfig& cfg) {
    Polynomial p = encode(params);
    try {
        return max_multiplier(p, cfg.n, cfg.rootfind, cfg.dynamics);
    } catch (const NoConvergence&) {
        return kPenaltyObjective;
    }
}

SearchResult minimize(const SearchConfig& cfg) {
    if (cfg.d < 2) throw Error("minimize: d must be >= 2");
    if (cfg.n < 2) throw Error("minimize: n must be >= 2");
    if (cfg.starts < 1) throw Error("minimize: need at least one start");

    std::vector<StartOutcome> outcomes(static_cast<std::size_t>(cfg.starts));
    parallel_for(static_cast<std::size_t>(cfg.starts), [&](std::size_t s) {
        outcomes[s] = run_start(cfg, cfg.seed ^ static_cast<std::uint64_t>(s));
    });

    SearchResult result;
    result.conjecture_floor = bound_threshold(
        cfg.flavor == BoundFlavor::theorem3 ? BoundFlavor::conjecture_c : cfg.flavor, cfg.d,
        cfg.n);
    result.per_start_bests.reserve(outcomes.size());
    std::size_t winner = 0;
    for (std::size_t s = 0; s < outcomes.size(); ++s) {
        result.per_start_bests.push_back(outcomes[s].best);
        result.evaluations += outcomes[s].evaluations;
        if (outcomes[s].best < outcomes[winner].best) winner = s; // ties keep the lower index
    }
    result.best_value = outcomes[winner].best;
    result.best_params = outcomes[winner].best_params;
    result.best_polynomial = encode(result.best_params);
    return result;
}

} // namespace iterfix
