#include "iterfix/identities.hpp"

#include <cmath>

namespace iterfix {

namespace {

Complex integer_power(Complex base, int n) {
    Complex acc{1.0, 0.0};
    for (int k = 0; k < n; ++k) acc *= base;
    return acc;
}

} // namespace

Complex preimage_sum(const Polynomial& p, Complex w, const RootFindConfig& cfg) {
    if (p.degree() < 2) throw DegreeTooLow("preimage_sum: degree must be at least 2");
    std::vector<Complex> coeffs = p.coeffs();
    coeffs[0] -= w;
    RootSet roots = find_roots(Polynomial(std::move(coeffs)), cfg);
    Polynomial dp = p.derivative();
    Complex sum{0.0, 0.0};
    for (const auto& r : roots.roots) {
        sum += static_cast<double>(r.multiplicity) * dp(r.location);
    }
    return sum;
}

Complex trace_sum(const Polynomial& p, int n, const RootFindConfig& rcfg,
                  const DynamicsConfig& dcfg) {
    FixedPointReport report = fixed_points(p, n, rcfg, dcfg);
    Complex sum{0.0, 0.0};
    for (const auto& pt : report.points) {
        sum += static_cast<double>(pt.multiplicity) * pt.multiplier;
    }
    return sum;
}

TraceReport check_trace_identity(const Polynomial& p, int n,
                                 const std::vector<Complex>& w_samples,
                                 const RootFindConfig& rcfg, const DynamicsConfig& dcfg,
                                 double c_agreement_tol) {
    if (p.degree() < 2) throw DegreeTooLow("check_trace_identity: degree must be at least 2");
    if (w_samples.empty()) throw Error("check_trace_identity: need at least one w sample");

    std::vector<Complex> estimates;
    estimates.reserve(w_samples.size());
    for (const auto& w : w_samples) {
        estimates.push_back(preimage_sum(p, w, rcfg));
    }
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        for (std::size_t j = i + 1; j < estimates.size(); ++j) {
            if (std::abs(estimates[i] - estimates[j]) > c_agreement_tol) {
                throw CInconsistent("preimage derivative sums disagree across w samples: " +
                                    format_complex(estimates[i]) + " vs " +
                                    format_complex(estimates[j]));
            }
        }
    }
    Complex c{0.0, 0.0};
    for (const auto& e : estimates) c += e;
    c /= static_cast<double>(estimates.size());

    TraceReport report;
    report.n = n;
    report.d = p.degree();
    report.c = c;
    report.w_samples = w_samples;
    report.lhs = trace_sum(p, n, rcfg, dcfg);
    double dn = std::pow(static_cast<double>(report.d), n);
    report.rhs = dn * (dn - 1.0) + integer_power(c, n);
    report.abs_residual = std::abs(report.lhs - report.rhs);
    report.rel_residual = report.abs_residual / std::max(1.0, std::abs(report.rhs));
    return report;
}

std::pair<double, double> re_c2_identity(int d, double r, double t) {
    if (d < 2) throw Error("re_c2_identity: d must be >= 2");
    if (r < 0.0) throw Error("re_c2_identity: r must be >= 0");
    double dd = static_cast<double>(d);
    Complex c = -dd * (dd - 1.0) + r * Complex{std::cos(t), std::sin(t)};
    double direct = (c * c).real();
    double half_dd1 = 0.5 * dd * (dd - 1.0);
    double inner = half_dd1 - r * std::cos(t);
    double rearranged = 2.0 * half_dd1 * half_dd1 - r * r + 2.0 * inner * inner;
    return {direct, rearranged};
}

QuadraticCycleSum quadratic_cycle_sum_check(const Polynomial& p, const RootFindConfig& rcfg,
                                            const DynamicsConfig& dcfg) {
    if (p.degree() != 2) throw Error("quadratic_cycle_sum_check: degree must be 2");

    FixedPointReport fixed = fixed_points(p, 1, rcfg, dcfg);
    Polynomial dp = p.derivative();
    QuadraticCycleSum out;

    // Flatten the (at most two) fixed-point clusters into lambda_1, lambda_2.
    std::vector<Complex> lambdas;
    for (const auto& pt : fixed.points) {
        for (int k = 0; k < pt.multiplicity; ++k) lambdas.push_back(dp(pt.location));
    }
    if (lambdas.size() != 2) {
        throw NoConvergence("quadratic_cycle_sum_check: expected two fixed points, found " +
                            std::to_string(lambdas.size()));
    }
    out.fixed_deriv_sum = lambdas[0] + lambdas[1];
    if (std::abs(out.fixed_deriv_sum - Complex{2.0, 0.0}) > 1e-8) {
        throw NoConvergence("quadratic_cycle_sum_check: fixed derivatives do not sum to 2");
    }
    out.a = lambdas[0] - Complex{1.0, 0.0};

    FixedPointReport second = fixed_points(p, 2, rcfg, dcfg);
    Complex cycle_sum{0.0, 0.0};
    for (const auto& pt : second.points) {
        if (pt.exact_period == 2) {
            cycle_sum += static_cast<double>(pt.multiplicity) * pt.multiplier;
        }
    }
    out.cycle_sum = cycle_sum;
    out.predicted = 2.0 * (Complex{5.0, 0.0} - out.a * out.a);
    return out;
}

} // namespace iterfix
