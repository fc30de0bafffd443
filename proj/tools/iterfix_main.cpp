#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "iterfix/bounds.hpp"
#include "iterfix/dynamics.hpp"
#include "iterfix/errors.hpp"
#include "iterfix/identities.hpp"
#include "iterfix/poly.hpp"
#include "iterfix/report_json.hpp"
#include "iterfix/rootfind.hpp"
#include "iterfix/search.hpp"
#include "iterfix/verify.hpp"

namespace {

using namespace iterfix;

// Exit codes: 0 pass, 1 mathematical violation or suite failure,
// 2 input error, 3 numerical failure.
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

void emit(const std::string& format, const Json& j, const std::string& csv,
          const std::string& text) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << csv;
    } else {
        std::cout << text;
    }
}

std::vector<Complex> parse_w_flags(const std::vector<std::string>& flags) {
    if (flags.empty()) return default_w_samples();
    std::vector<Complex> out;
    for (const auto& flag : flags) {
        std::size_t begin = 0;
        while (begin <= flag.size()) {
            std::size_t comma = flag.find(',', begin);
            std::string item = flag.substr(begin, comma == std::string::npos ? std::string::npos
                                                                             : comma - begin);
            if (!item.empty()) out.push_back(parse_complex(item));
            if (comma == std::string::npos) break;
            begin = comma + 1;
        }
    }
    if (out.empty()) out = default_w_samples();
    return out;
}

void add_tolerance_flags(CLI::App* sub, RootFindConfig& rcfg, DynamicsConfig& dcfg) {
    sub->add_option("--residual-tol", rcfg.residual_tol, "root residual target (majorant-scaled)")
        ->capture_default_str();
    sub->add_option("--max-iterations", rcfg.max_iterations, "root finder iteration cap")
        ->capture_default_str();
    sub->add_option("--polish-steps", rcfg.newton_polish_steps, "Newton polish steps per root")
        ->capture_default_str();
    sub->add_option("--cluster-radius", rcfg.cluster_radius, "base multiplicity link radius")
        ->capture_default_str();
    sub->add_option("--fixpoint-tol", dcfg.fixpoint_tol, "fixed point residual / cycle matching")
        ->capture_default_str();
    sub->add_option("--classify-tol", dcfg.classify_tol, "dead zone around |multiplier| = 1")
        ->capture_default_str();
    sub->add_option("--parabolic-tol", dcfg.parabolic_tol,
                    "multiplier distance from 1 tolerated at multiple points")
        ->capture_default_str();
    sub->add_option("--max-degree", dcfg.max_degree, "cap on the degree d^n of the iterate")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed points, multipliers and sharp bounds of iterated complex polynomials"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    std::function<int()> run;

    // fixpoints ------------------------------------------------------
    {
        auto* sub = app.add_subcommand("fixpoints", "fixed points of p^n with multipliers");
        auto poly_text = std::make_shared<std::string>();
        auto n = std::make_shared<int>(1);
        auto rcfg = std::make_shared<RootFindConfig>();
        auto dcfg = std::make_shared<DynamicsConfig>();
        sub->add_option("--poly", *poly_text, "comma-separated coefficients, constant first")
            ->required();
        sub->add_option("--n", *n, "iterate order")->capture_default_str();
        add_tolerance_flags(sub, *rcfg, *dcfg);
        sub->callback([&run, poly_text, n, rcfg, dcfg, &format] {
            run = [=, &format] {
                Polynomial p = Polynomial::parse(*poly_text);
                FixedPointReport report = fixed_points(p, *n, *rcfg, *dcfg);
                emit(format, report_json(report, dcfg->classify_tol),
                     report_csv(report, dcfg->classify_tol),
                     report_text(report, dcfg->classify_tol));
                return 0;
            };
        });
    }

    // trace ----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("trace", "both sides of the multiplier-sum identity");
        auto poly_text = std::make_shared<std::string>();
        auto n = std::make_shared<int>(1);
        auto wflags = std::make_shared<std::vector<std::string>>();
        auto rcfg = std::make_shared<RootFindConfig>();
        auto dcfg = std::make_shared<DynamicsConfig>();
        sub->add_option("--poly", *poly_text, "comma-separated coefficients, constant first")
            ->required();
        sub->add_option("--n", *n, "iterate order")->capture_default_str();
        sub->add_option("--w", *wflags, "fiber points for the derivative sum c (repeatable)");
        add_tolerance_flags(sub, *rcfg, *dcfg);
        sub->callback([&run, poly_text, n, wflags, rcfg, dcfg, &format] {
            run = [=, &format] {
                Polynomial p = Polynomial::parse(*poly_text);
                TraceReport report =
                    check_trace_identity(p, *n, parse_w_flags(*wflags), *rcfg, *dcfg);
                emit(format, report_json(report), report_csv(report), report_text(report));
                return report.rel_residual < 1e-6 ? 0 : kExitViolation;
            };
        });
    }

    // check ----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("check", "M_n against a threshold (theorem3, B, C)");
        auto poly_text = std::make_shared<std::string>();
        auto n = std::make_shared<int>(2);
        auto flavor_text = std::make_shared<std::string>("theorem3");
        auto rcfg = std::make_shared<RootFindConfig>();
        auto dcfg = std::make_shared<DynamicsConfig>();
        sub->add_option("--poly", *poly_text, "comma-separated coefficients, constant first")
            ->required();
        sub->add_option("--n", *n, "iterate order (theorem3 forces 2)")->capture_default_str();
        sub->add_option("--flavor", *flavor_text, "bound to test")
            ->check(CLI::IsMember({"theorem3", "B", "C"}))
            ->capture_default_str();
        add_tolerance_flags(sub, *rcfg, *dcfg);
        sub->callback([&run, poly_text, n, flavor_text, rcfg, dcfg, &format] {
            run = [=, &format] {
                Polynomial p = Polynomial::parse(*poly_text);
                BoundFlavor flavor = bound_flavor_from_string(*flavor_text);
                BoundReport report = check_conjecture(p, *n, flavor, *rcfg, *dcfg);
                emit(format, report_json(report, flavor), report_csv(report, flavor),
                     report_text(report, flavor));
                return report.passed ? 0 : kExitViolation;
            };
        });
    }

    // scan -----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("scan", "random scan of monic centered polynomials");
        auto d = std::make_shared<int>(2);
        auto n = std::make_shared<int>(2);
        auto flavor_text = std::make_shared<std::string>("theorem3");
        auto samples = std::make_shared<int>(200);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto rcfg = std::make_shared<RootFindConfig>();
        auto dcfg = std::make_shared<DynamicsConfig>();
        sub->add_option("--d", *d, "degree")->capture_default_str();
        sub->add_option("--n", *n, "iterate order")->capture_default_str();
        sub->add_option("--flavor", *flavor_text, "bound to test")
            ->check(CLI::IsMember({"theorem3", "B", "C"}))
            ->capture_default_str();
        sub->add_option("--samples", *samples, "sample count")->capture_default_str();
        sub->add_option("--seed", *seed, "base seed; per-sample seed is seed xor index")
            ->capture_default_str();
        add_tolerance_flags(sub, *rcfg, *dcfg);
        sub->callback([&run, d, n, flavor_text, samples, seed, rcfg, dcfg, &format] {
            run = [=, &format] {
                BoundFlavor flavor = bound_flavor_from_string(*flavor_text);
                ScanSummary summary =
                    scan_family(*d, *n, flavor, *samples, *seed, *rcfg, *dcfg);
                emit(format, report_json(summary), report_csv(summary), report_text(summary));
                return summary.violations.empty() ? 0 : kExitViolation;
            };
        });
    }

    // search ---------------------------------------------------------
    {
        auto* sub = app.add_subcommand("search", "minimize M_n over monic centered coefficients");
        auto cfg = std::make_shared<SearchConfig>();
        auto flavor_text = std::make_shared<std::string>("C");
        sub->add_option("--d", cfg->d, "degree")->capture_default_str();
        sub->add_option("--n", cfg->n, "iterate order")->capture_default_str();
        sub->add_option("--starts", cfg->starts, "independent simplex starts")
            ->capture_default_str();
        sub->add_option("--iters", cfg->iters_per_start, "iterations per start")
            ->capture_default_str();
        sub->add_option("--seed", cfg->seed, "base seed; per-start seed is seed xor index")
            ->capture_default_str();
        sub->add_option("--flavor", *flavor_text, "floor to compare against")
            ->check(CLI::IsMember({"B", "C"}))
            ->capture_default_str();
        sub->add_option("--simplex-scale", cfg->simplex_init_scale, "initial simplex edge")
            ->capture_default_str();
        sub->add_option("--domain-radius", cfg->domain_radius, "start polydisk radius")
            ->capture_default_str();
        add_tolerance_flags(sub, cfg->rootfind, cfg->dynamics);
        sub->callback([&run, cfg, flavor_text, &format] {
            run = [=, &format] {
                cfg->flavor = bound_flavor_from_string(*flavor_text);
                SearchResult result = minimize(*cfg);
                emit(format, report_json(result, *cfg), report_csv(result, *cfg),
                     report_text(result, *cfg));
                if (result.best_value < result.conjecture_floor - 1e-3) {
                    std::cerr << "candidate counterexample below the conjectured floor.\n"
                              << "re-verify before reporting:\n"
                              << "  1. iterfix check --poly \"" << result.best_polynomial.str()
                              << "\" --n " << cfg->n << " --flavor " << *flavor_text
                              << " --residual-tol 1e-14 --polish-steps 10\n"
                              << "  2. for d = 2, compare against the closed-form quadratic "
                                 "spectrum (verify --suite oracles)\n"
                              << "  3. re-run the search with different seeds and thread counts; "
                                 "the value must reproduce bit-identically\n";
                    return kExitViolation;
                }
                return 0;
            };
        });
    }

    // verify ---------------------------------------------------------
    {
        auto* sub = app.add_subcommand("verify", "run the invariant suites at desk scale");
        auto suite = std::make_shared<std::string>("all");
        auto seed = std::make_shared<std::uint64_t>(0);
        sub->add_option("--suite", *suite, "identities, bounds, oracles or all")
            ->check(CLI::IsMember({"identities", "bounds", "oracles", "all"}))
            ->capture_default_str();
        sub->add_option("--seed", *seed, "base seed for the sweeps")->capture_default_str();
        sub->callback([&run, suite, seed, &format] {
            run = [=, &format] {
                std::vector<CheckResult> checks = run_suite(*suite, desk_scale(*seed));
                emit(format, report_json(checks, *suite, *seed), report_csv(checks),
                     report_text(checks));
                for (const auto& c : checks) {
                    if (!c.passed) return kExitViolation;
                }
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        return run();
    } catch (const iterfix::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DegreeTooLow& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BadLength& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DegreeOverflow& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}
