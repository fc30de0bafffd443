#include "iterfix/report_json.hpp"

#include <cmath>
#include <sstream>

namespace iterfix {

namespace {

Json finite_or_null(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

Json point_json(const PeriodicPoint& pt, double classify_tol) {
    Json j;
    j["location"] = complex_json(pt.location);
    j["multiplier"] = complex_json(pt.multiplier);
    j["abs_multiplier"] = finite_or_null(std::abs(pt.multiplier));
    j["multiplicity"] = pt.multiplicity;
    j["exact_period"] = pt.exact_period;
    j["cycle_id"] = pt.cycle_id;
    j["class"] = to_string(classify(pt, classify_tol));
    return j;
}

// CSV plumbing: quote strings, shortest round-trip form for numbers.
std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

std::string num(double x) { return format_double(x); }
std::string num(long long x) { return std::to_string(x); }
std::string num(int x) { return std::to_string(x); }
std::string num(std::uint64_t x) { return std::to_string(x); }

} // namespace

Json complex_json(Complex z) {
    Json j;
    j["re"] = finite_or_null(z.real());
    j["im"] = finite_or_null(z.imag());
    return j;
}

Json report_json(const FixedPointReport& report, double classify_tol) {
    Json j;
    j["n"] = report.n;
    j["d"] = report.d;
    Json points = Json::array();
    for (const auto& pt : report.points) points.push_back(point_json(pt, classify_tol));
    j["points"] = std::move(points);
    j["count_with_multiplicity"] = report.total_count_with_multiplicity;
    j["warnings"] = report.warnings;
    return j;
}

Json report_json(const TraceReport& report) {
    Json j;
    j["n"] = report.n;
    j["d"] = report.d;
    j["c"] = complex_json(report.c);
    j["lhs"] = complex_json(report.lhs);
    j["rhs"] = complex_json(report.rhs);
    j["abs_residual"] = finite_or_null(report.abs_residual);
    j["rel_residual"] = finite_or_null(report.rel_residual);
    Json ws = Json::array();
    for (Complex w : report.w_samples) ws.push_back(complex_json(w));
    j["w_samples"] = std::move(ws);
    return j;
}

Json report_json(const BoundReport& report, BoundFlavor flavor) {
    Json j;
    j["flavor"] = to_string(flavor);
    j["n"] = report.n;
    j["d"] = report.d;
    j["threshold"] = finite_or_null(report.threshold);
    j["observed_max"] = finite_or_null(report.observed_max);
    j["margin"] = finite_or_null(report.margin);
    j["witness"] = point_json(report.witness, 1e-9);
    j["passed"] = report.passed;
    return j;
}

Json report_json(const ScanSummary& summary) {
    Json j;
    j["flavor"] = to_string(summary.flavor);
    j["d"] = summary.d;
    j["n"] = summary.n;
    j["samples"] = summary.sample_count;
    j["seed"] = summary.seed;
    j["family"] = summary.family;
    j["min_observed_max"] = finite_or_null(summary.min_observed_max);
    j["min_margin"] = finite_or_null(summary.min_margin);
    j["argmin"] = summary.has_argmin ? Json(summary.argmin.str()) : Json(nullptr);
    Json violations = Json::array();
    for (const auto& [poly, report] : summary.violations) {
        Json v;
        v["polynomial"] = poly.str();
        v["report"] = report_json(report, summary.flavor);
        violations.push_back(std::move(v));
    }
    j["violations"] = std::move(violations);
    j["skipped"] = summary.skipped;
    j["cleared"] = summary.cleared;
    return j;
}

Json report_json(const SearchResult& result, const SearchConfig& cfg) {
    Json j;
    j["d"] = cfg.d;
    j["n"] = cfg.n;
    j["flavor"] = to_string(cfg.flavor);
    j["starts"] = cfg.starts;
    j["iters_per_start"] = cfg.iters_per_start;
    j["seed"] = cfg.seed;
    j["domain"] = "monic centered, free coefficients uniform in |z| <= " +
                  format_double(cfg.domain_radius);
    j["best_value"] = finite_or_null(result.best_value);
    j["best_params"] = result.best_params;
    j["best_polynomial"] = result.best_polynomial.str();
    j["evaluations"] = result.evaluations;
    j["per_start_bests"] = result.per_start_bests;
    j["conjecture_floor"] = finite_or_null(result.conjecture_floor);
    return j;
}

Json report_json(const std::vector<CheckResult>& checks, const std::string& suite,
                 std::uint64_t seed) {
    Json j;
    j["suite"] = suite;
    j["seed"] = seed;
    Json arr = Json::array();
    bool all_passed = true;
    for (const auto& c : checks) {
        Json e;
        e["name"] = c.name;
        e["samples"] = c.samples;
        e["worst"] = finite_or_null(c.worst);
        e["tol"] = finite_or_null(c.tol);
        e["failures"] = c.failures;
        e["passed"] = c.passed;
        arr.push_back(std::move(e));
        all_passed = all_passed && c.passed;
    }
    j["checks"] = std::move(arr);
    j["passed"] = all_passed;
    return j;
}

std::string report_csv(const FixedPointReport& report, double classify_tol) {
    std::string out = csv_row({"n", "d", "location_re", "location_im", "multiplier_re",
                               "multiplier_im", "abs_multiplier", "multiplicity", "exact_period",
                               "cycle_id", "class"});
    for (const auto& pt : report.points) {
        out += csv_row({num(report.n), num(report.d), num(pt.location.real()),
                        num(pt.location.imag()), num(pt.multiplier.real()),
                        num(pt.multiplier.imag()), num(std::abs(pt.multiplier)),
                        num(pt.multiplicity), num(pt.exact_period), num(pt.cycle_id),
                        to_string(classify(pt, classify_tol))});
    }
    return out;
}

std::string report_csv(const TraceReport& report) {
    std::string out = csv_row({"n", "d", "c_re", "c_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                               "abs_residual", "rel_residual"});
    out += csv_row({num(report.n), num(report.d), num(report.c.real()), num(report.c.imag()),
                    num(report.lhs.real()), num(report.lhs.imag()), num(report.rhs.real()),
                    num(report.rhs.imag()), num(report.abs_residual), num(report.rel_residual)});
    return out;
}

std::string report_csv(const BoundReport& report, BoundFlavor flavor) {
    std::string out = csv_row({"flavor", "n", "d", "threshold", "observed_max", "margin",
                               "witness_re", "witness_im", "passed"});
    out += csv_row({to_string(flavor), num(report.n), num(report.d), num(report.threshold),
                    num(report.observed_max), num(report.margin),
                    num(report.witness.location.real()), num(report.witness.location.imag()),
                    report.passed ? "true" : "false"});
    return out;
}

std::string report_csv(const ScanSummary& summary) {
    std::string out =
        csv_row({"flavor", "d", "n", "samples", "seed", "family", "min_observed_max",
                 "min_margin", "argmin", "violations", "skipped", "cleared"});
    out += csv_row({to_string(summary.flavor), num(summary.d), num(summary.n),
                    num(summary.sample_count), num(summary.seed), csv_quote(summary.family),
                    num(summary.min_observed_max), num(summary.min_margin),
                    summary.has_argmin ? csv_quote(summary.argmin.str()) : std::string{},
                    num(static_cast<long long>(summary.violations.size())), num(summary.skipped),
                    num(summary.cleared)});
    return out;
}

std::string report_csv(const SearchResult& result, const SearchConfig& cfg) {
    std::string out = csv_row({"d", "n", "flavor", "starts", "iters_per_start", "seed",
                               "best_value", "evaluations", "conjecture_floor",
                               "best_polynomial"});
    out += csv_row({num(cfg.d), num(cfg.n), to_string(cfg.flavor), num(cfg.starts),
                    num(cfg.iters_per_start), num(cfg.seed), num(result.best_value),
                    num(result.evaluations), num(result.conjecture_floor),
                    csv_quote(result.best_polynomial.str())});
    return out;
}

std::string report_csv(const std::vector<CheckResult>& checks) {
    std::string out = csv_row({"name", "samples", "worst", "tol", "failures", "passed"});
    for (const auto& c : checks) {
        out += csv_row({c.name, num(c.samples), num(c.worst), num(c.tol), num(c.failures),
                        c.passed ? "true" : "false"});
    }
    return out;
}

std::string report_text(const FixedPointReport& report, double classify_tol) {
    std::ostringstream os;
    os << "fixed points of p^" << report.n << " (degree " << report.d << ", "
       << report.total_count_with_multiplicity << " with multiplicity)\n";
    for (const auto& pt : report.points) {
        os << "  " << format_complex(pt.location) << "  multiplier " << format_complex(pt.multiplier)
           << "  |.|=" << format_double(std::abs(pt.multiplier)) << "  mult " << pt.multiplicity
           << "  period " << pt.exact_period << "  cycle " << pt.cycle_id << "  "
           << to_string(classify(pt, classify_tol)) << "\n";
    }
    for (const auto& w : report.warnings) os << "  warning: " << w << "\n";
    return os.str();
}

std::string report_text(const TraceReport& report) {
    std::ostringstream os;
    os << "trace identity, n=" << report.n << " d=" << report.d << "\n"
       << "  c   = " << format_complex(report.c) << "\n"
       << "  lhs = " << format_complex(report.lhs) << "\n"
       << "  rhs = " << format_complex(report.rhs) << "\n"
       << "  residual " << format_double(report.abs_residual) << " (rel "
       << format_double(report.rel_residual) << ")\n";
    return os.str();
}

std::string report_text(const BoundReport& report, BoundFlavor flavor) {
    std::ostringstream os;
    os << "bound " << to_string(flavor) << ", n=" << report.n << " d=" << report.d << ": M_n = "
       << format_double(report.observed_max) << " vs threshold "
       << format_double(report.threshold) << " (margin " << format_double(report.margin) << ") "
       << (report.passed ? "PASS" : "VIOLATED") << "\n"
       << "  witness " << format_complex(report.witness.location) << " multiplier "
       << format_complex(report.witness.multiplier) << "\n";
    return os.str();
}

std::string report_text(const ScanSummary& summary) {
    std::ostringstream os;
    os << "scan " << to_string(summary.flavor) << " d=" << summary.d << " n=" << summary.n
       << " samples=" << summary.sample_count << " seed=" << summary.seed << "\n"
       << "  family: " << summary.family << "\n"
       << "  min M_n " << format_double(summary.min_observed_max) << " (margin "
       << format_double(summary.min_margin) << ")";
    if (summary.has_argmin) os << " at " << summary.argmin.str();
    os << "\n  violations " << summary.violations.size() << ", skipped " << summary.skipped
       << ", cleared " << summary.cleared << "\n";
    for (const auto& [poly, report] : summary.violations) {
        os << "  VIOLATION " << poly.str() << ": M_n = " << format_double(report.observed_max)
           << " < " << format_double(report.threshold) << "\n";
    }
    return os.str();
}

std::string report_text(const SearchResult& result, const SearchConfig& cfg) {
    std::ostringstream os;
    os << "search d=" << cfg.d << " n=" << cfg.n << " starts=" << cfg.starts << " iters="
       << cfg.iters_per_start << " seed=" << cfg.seed << "\n"
       << "  best M_n " << format_double(result.best_value) << " vs floor "
       << format_double(result.conjecture_floor) << " (" << to_string(cfg.flavor) << ")\n"
       << "  at " << result.best_polynomial.str() << "\n"
       << "  evaluations " << result.evaluations << "\n";
    return os.str();
}

std::string report_text(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    bool all_passed = true;
    for (const auto& c : checks) {
        os << (c.passed ? "pass" : "FAIL") << "  " << c.name << "  samples=" << c.samples
           << "  worst=" << format_double(c.worst) << "  tol=" << format_double(c.tol);
        if (c.failures) os << "  failures=" << c.failures;
        os << "\n";
        all_passed = all_passed && c.passed;
    }
    os << (all_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

} // namespace iterfix
