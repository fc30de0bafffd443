#include "iterfix/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "iterfix/parallel.hpp"
#include "iterfix/quadratic.hpp"
#include "iterfix/rng.hpp"

namespace iterfix {

namespace {

BoundReport check_bound(const Polynomial& p, int n, double threshold,
                        const RootFindConfig& rcfg, const DynamicsConfig& dcfg) {
    FixedPointReport fps = fixed_points(p, n, rcfg, dcfg);
    BoundReport report;
    report.n = n;
    report.d = p.degree();
    report.threshold = threshold;
    double best = -1.0;
    for (const auto& pt : fps.points) {
        double mag = std::abs(pt.multiplier);
        if (mag > best) {
            best = mag;
            report.witness = pt;
        }
    }
    report.observed_max = best;
    report.margin = best - threshold;
    report.passed = report.margin >= -kViolationTol;
    return report;
}

} // namespace

Polynomial sample_monic_centered(int d, std::uint64_t seed, double radius) {
    Rng rng = seeded_rng(seed);
    std::vector<Complex> coeffs(static_cast<std::size_t>(d) + 1, Complex{0.0, 0.0});
    for (int k = 0; k <= d - 2; ++k) {
        coeffs[static_cast<std::size_t>(k)] = uniform_disk(rng, radius);
    }
    coeffs[static_cast<std::size_t>(d)] = Complex{1.0, 0.0};
    return Polynomial(std::move(coeffs));
}

const char* to_string(BoundFlavor f) {
    switch (f) {
        case BoundFlavor::theorem3: return "theorem3";
        case BoundFlavor::conjecture_b: return "B";
        case BoundFlavor::conjecture_c: return "C";
    }
    return "theorem3";
}

BoundFlavor bound_flavor_from_string(const std::string& name) {
    if (name == "theorem3") return BoundFlavor::theorem3;
    if (name == "B" || name == "b") return BoundFlavor::conjecture_b;
    if (name == "C" || name == "c") return BoundFlavor::conjecture_c;
    throw ParseError("unknown bound flavor: '" + name + "'");
}

double bound_threshold(BoundFlavor f, int d, int n) {
    switch (f) {
        case BoundFlavor::theorem3: return 4.0;
        case BoundFlavor::conjecture_b: return std::pow(2.0, n);
        case BoundFlavor::conjecture_c: return std::pow(static_cast<double>(d), n);
    }
    return 4.0;
}

BoundReport check_theorem3(const Polynomial& p, const RootFindConfig& rcfg,
                           const DynamicsConfig& dcfg) {
    if (p.degree() < 2) throw DegreeTooLow("check_theorem3: degree must be at least 2");
    return check_bound(p, 2, 4.0, rcfg, dcfg);
}

BoundReport check_conjecture(const Polynomial& p, int n, BoundFlavor flavor,
                             const RootFindConfig& rcfg, const DynamicsConfig& dcfg) {
    if (p.degree() < 2) throw DegreeTooLow("check_conjecture: degree must be at least 2");
    if (flavor == BoundFlavor::theorem3) return check_theorem3(p, rcfg, dcfg);
    if (n < 2) throw Error("check_conjecture: n must be >= 2");
    return check_bound(p, n, bound_threshold(flavor, p.degree(), n), rcfg, dcfg);
}

ReverifyResult reverify_candidate(const Polynomial& p, int n, BoundFlavor flavor,
                                  const DynamicsConfig& dcfg) {
    RootFindConfig tight;
    tight.residual_tol = 1e-14;
    tight.newton_polish_steps = 10;
    tight.max_iterations = 400;

    ReverifyResult out;
    out.report = check_conjecture(p, n, flavor, tight, dcfg);
    if (p.degree() == 2 && out.report.n == 2) {
        out.oracle_checked = true;
        out.oracle_value = quadratic_n2_max_multiplier(quadratic_normal_form(p));
        out.oracle_agrees = std::abs(out.report.observed_max - out.oracle_value) <=
                            1e-6 * std::max(1.0, out.oracle_value);
    }
    bool oracle_also_below = !out.oracle_checked ||
                             out.oracle_value - out.report.threshold < -kViolationTol;
    out.confirmed_violation =
        !out.report.passed && out.oracle_agrees && oracle_also_below;
    return out;
}

ScanSummary scan_family(int d, int n, BoundFlavor flavor, int samples, std::uint64_t seed,
                        const RootFindConfig& rcfg, const DynamicsConfig& dcfg) {
    if (d < 2) throw DegreeTooLow("scan_family: degree must be at least 2");
    if (samples < 0) throw Error("scan_family: negative sample count");
    int effective_n = (flavor == BoundFlavor::theorem3) ? 2 : n;

    ScanSummary summary;
    summary.flavor = flavor;
    summary.d = d;
    summary.n = effective_n;
    summary.sample_count = samples;
    summary.seed = seed;
    summary.family = "monic centered degree " + std::to_string(d) +
                     ", free coefficients uniform in |z| <= 2 (polar), "
                     "per-sample seed = seed xor index";
    summary.min_observed_max = std::numeric_limits<double>::infinity();
    summary.min_margin = std::numeric_limits<double>::infinity();

    struct Sample {
        Polynomial poly;
        std::optional<BoundReport> report;
        bool skipped = false;
    };
    std::vector<Sample> results(static_cast<std::size_t>(samples));

    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
        Sample& slot = results[i];
        slot.poly = sample_monic_centered(d, seed ^ static_cast<std::uint64_t>(i), 2.0);
        try {
            slot.report = check_conjecture(slot.poly, effective_n, flavor, rcfg, dcfg);
        } catch (const NoConvergence&) {
            slot.skipped = true;
        }
    });

    // Aggregate strictly in index order so the summary is independent of
    // the thread schedule.
    for (const auto& slot : results) {
        if (slot.skipped) {
            ++summary.skipped;
            continue;
        }
        const BoundReport& rep = *slot.report;
        if (rep.observed_max < summary.min_observed_max) {
            summary.min_observed_max = rep.observed_max;
            summary.argmin = slot.poly;
            summary.has_argmin = true;
        }
        summary.min_margin = std::min(summary.min_margin, rep.margin);
        if (!rep.passed) {
            ReverifyResult rv = reverify_candidate(slot.poly, effective_n, flavor, dcfg);
            if (rv.confirmed_violation) {
                summary.violations.emplace_back(slot.poly, rv.report);
            } else {
                ++summary.cleared;
            }
        }
    }
    return summary;
}

std::vector<StrictnessEntry> strictness_probe(const Polynomial& p, int n_max,
                                              const RootFindConfig& rcfg,
                                              const DynamicsConfig& dcfg) {
    if (p.degree() < 2) throw DegreeTooLow("strictness_probe: degree must be at least 2");
    std::vector<StrictnessEntry> out;
    for (int n = 2; n <= n_max; ++n) {
        StrictnessEntry entry;
        entry.n = n;
        entry.threshold = std::pow(static_cast<double>(p.degree()), n);
        entry.observed_max = max_multiplier(p, n, rcfg, dcfg);
        entry.strict = entry.observed_max > entry.threshold + kStrictnessTol;
        out.push_back(entry);
    }
    return out;
}

} // namespace iterfix
