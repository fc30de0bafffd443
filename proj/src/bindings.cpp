#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iterfix/bounds.hpp"
#include "iterfix/dynamics.hpp"
#include "iterfix/errors.hpp"
#include "iterfix/identities.hpp"
#include "iterfix/poly.hpp"
#include "iterfix/quadratic.hpp"
#include "iterfix/rootfind.hpp"
#include "iterfix/search.hpp"
#include "iterfix/verify.hpp"

namespace py = pybind11;
using namespace iterfix;

PYBIND11_MODULE(_iterfix, m) {
    m.doc() = "fixed points, multipliers and sharp bounds of iterated complex polynomials";

    py::register_exception<Error>(m, "IterfixError");

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::vector<Complex>& coeffs) { return Polynomial(coeffs); }),
             py::arg("coeffs"))
        .def_static("parse", [](const std::string& text) { return Polynomial::parse(text); },
                    py::arg("text"))
        .def_static("monomial", &Polynomial::monomial, py::arg("degree"),
                    py::arg("lead") = Complex{1.0, 0.0})
        .def_property_readonly("degree", &Polynomial::degree)
        .def_property_readonly("coeffs", &Polynomial::coeffs)
        .def("coeff", &Polynomial::coeff, py::arg("k"))
        .def("__call__", [](const Polynomial& p, Complex z) { return p(z); }, py::arg("z"))
        .def("derivative", &Polynomial::derivative)
        .def("compose", &Polynomial::compose, py::arg("inner"),
             py::arg("max_degree") = kDefaultMaxDegree)
        .def("iterate", &Polynomial::iterate, py::arg("n"),
             py::arg("max_degree") = kDefaultMaxDegree)
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__str__", &Polynomial::str)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(\"" + p.str() + "\")"; });

    py::class_<AffineMap>(m, "AffineMap")
        .def(py::init([](Complex scale, Complex shift) {
                 return AffineMap{scale, shift};
             }),
             py::arg("scale"), py::arg("shift"))
        .def_readonly("scale", &AffineMap::scale)
        .def_readonly("shift", &AffineMap::shift)
        .def("__call__", [](const AffineMap& L, Complex z) { return L(z); })
        .def("inverse", &AffineMap::inverse);

    m.def("affine_conjugate", &affine_conjugate, py::arg("p"), py::arg("L"));

    py::class_<RootFindConfig>(m, "RootFindConfig")
        .def(py::init<>())
        .def_readwrite("max_iterations", &RootFindConfig::max_iterations)
        .def_readwrite("residual_tol", &RootFindConfig::residual_tol)
        .def_readwrite("cluster_radius", &RootFindConfig::cluster_radius)
        .def_readwrite("newton_polish_steps", &RootFindConfig::newton_polish_steps)
        .def_readwrite("restart_perturbation", &RootFindConfig::restart_perturbation);

    py::class_<DynamicsConfig>(m, "DynamicsConfig")
        .def(py::init<>())
        .def_readwrite("fixpoint_tol", &DynamicsConfig::fixpoint_tol)
        .def_readwrite("classify_tol", &DynamicsConfig::classify_tol)
        .def_readwrite("parabolic_tol", &DynamicsConfig::parabolic_tol)
        .def_readwrite("max_degree", &DynamicsConfig::max_degree);

    py::class_<RootCluster>(m, "RootCluster")
        .def_readonly("location", &RootCluster::location)
        .def_readonly("multiplicity", &RootCluster::multiplicity);

    py::class_<RootSet>(m, "RootSet")
        .def_readonly("roots", &RootSet::roots)
        .def_readonly("converged", &RootSet::converged)
        .def_readonly("iterations_used", &RootSet::iterations_used);

    m.def("find_roots", &find_roots, py::arg("q"), py::arg("config") = RootFindConfig{});

    py::class_<PeriodicPoint>(m, "PeriodicPoint")
        .def_readonly("location", &PeriodicPoint::location)
        .def_readonly("multiplier", &PeriodicPoint::multiplier)
        .def_readonly("multiplicity", &PeriodicPoint::multiplicity)
        .def_readonly("exact_period", &PeriodicPoint::exact_period)
        .def_readonly("cycle_id", &PeriodicPoint::cycle_id);

    py::class_<FixedPointReport>(m, "FixedPointReport")
        .def_readonly("n", &FixedPointReport::n)
        .def_readonly("d", &FixedPointReport::d)
        .def_readonly("points", &FixedPointReport::points)
        .def_readonly("count_with_multiplicity",
                      &FixedPointReport::total_count_with_multiplicity)
        .def_readonly("warnings", &FixedPointReport::warnings);

    m.def("fixed_points", &fixed_points, py::arg("p"), py::arg("n"),
          py::arg("rootfind") = RootFindConfig{}, py::arg("dynamics") = DynamicsConfig{});
    m.def("multiplier", &multiplier, py::arg("p"), py::arg("n"), py::arg("xi"));
    m.def("max_multiplier", &max_multiplier, py::arg("p"), py::arg("n"),
          py::arg("rootfind") = RootFindConfig{}, py::arg("dynamics") = DynamicsConfig{});
    m.def("classify",
          [](Complex multiplier_value, double tol) {
              return std::string(to_string(classify(multiplier_value, tol)));
          },
          py::arg("multiplier"), py::arg("classify_tol") = 1e-9);

    py::class_<TraceReport>(m, "TraceReport")
        .def_readonly("n", &TraceReport::n)
        .def_readonly("d", &TraceReport::d)
        .def_readonly("c", &TraceReport::c)
        .def_readonly("lhs", &TraceReport::lhs)
        .def_readonly("rhs", &TraceReport::rhs)
        .def_readonly("abs_residual", &TraceReport::abs_residual)
        .def_readonly("rel_residual", &TraceReport::rel_residual)
        .def_readonly("w_samples", &TraceReport::w_samples);

    m.def("preimage_sum", &preimage_sum, py::arg("p"), py::arg("w"),
          py::arg("config") = RootFindConfig{});
    m.def("trace_sum", &trace_sum, py::arg("p"), py::arg("n"),
          py::arg("rootfind") = RootFindConfig{}, py::arg("dynamics") = DynamicsConfig{});
    m.def("check_trace_identity", &check_trace_identity, py::arg("p"), py::arg("n"),
          py::arg("w_samples") = default_w_samples(), py::arg("rootfind") = RootFindConfig{},
          py::arg("dynamics") = DynamicsConfig{}, py::arg("c_agreement_tol") = kCAgreementTol);
    m.def("re_c2_identity", &re_c2_identity, py::arg("d"), py::arg("r"), py::arg("t"));

    py::class_<QuadraticCycleSum>(m, "QuadraticCycleSum")
        .def_readonly("a", &QuadraticCycleSum::a)
        .def_readonly("fixed_deriv_sum", &QuadraticCycleSum::fixed_deriv_sum)
        .def_readonly("cycle_sum", &QuadraticCycleSum::cycle_sum)
        .def_readonly("predicted", &QuadraticCycleSum::predicted);

    m.def("quadratic_cycle_sum_check", &quadratic_cycle_sum_check, py::arg("p"),
          py::arg("rootfind") = RootFindConfig{}, py::arg("dynamics") = DynamicsConfig{});
    m.def("quadratic_normal_form", &quadratic_normal_form, py::arg("p"));
    m.def("quadratic_n2_spectrum", &quadratic_n2_spectrum, py::arg("c"));
    m.def("quadratic_n2_max_multiplier", &quadratic_n2_max_multiplier, py::arg("c"));

    py::enum_<BoundFlavor>(m, "BoundFlavor")
        .value("theorem3", BoundFlavor::theorem3)
        .value("conjecture_b", BoundFlavor::conjecture_b)
        .value("conjecture_c", BoundFlavor::conjecture_c);

    m.def("bound_threshold", &bound_threshold, py::arg("flavor"), py::arg("d"), py::arg("n"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("n", &BoundReport::n)
        .def_readonly("d", &BoundReport::d)
        .def_readonly("threshold", &BoundReport::threshold)
        .def_readonly("observed_max", &BoundReport::observed_max)
        .def_readonly("margin", &BoundReport::margin)
        .def_readonly("witness", &BoundReport::witness)
        .def_readonly("passed", &BoundReport::passed);

    m.def("check_theorem3", &check_theorem3, py::arg("p"),
          py::arg("rootfind") = RootFindConfig{}, py::arg("dynamics") = DynamicsConfig{});
    m.def("check_conjecture", &check_conjecture, py::arg("p"), py::arg("n"), py::arg("flavor"),
          py::arg("rootfind") = RootFindConfig{}, py::arg("dynamics") = DynamicsConfig{});

    py::class_<ScanSummary>(m, "ScanSummary")
        .def_readonly("d", &ScanSummary::d)
        .def_readonly("n", &ScanSummary::n)
        .def_readonly("flavor", &ScanSummary::flavor)
        .def_readonly("sample_count", &ScanSummary::sample_count)
        .def_readonly("seed", &ScanSummary::seed)
        .def_readonly("family", &ScanSummary::family)
        .def_readonly("min_observed_max", &ScanSummary::min_observed_max)
        .def_readonly("min_margin", &ScanSummary::min_margin)
        .def_readonly("has_argmin", &ScanSummary::has_argmin)
        .def_readonly("argmin", &ScanSummary::argmin)
        .def_readonly("violations", &ScanSummary::violations)
        .def_readonly("skipped", &ScanSummary::skipped)
        .def_readonly("cleared", &ScanSummary::cleared);

    m.def("scan_family", &scan_family, py::arg("d"), py::arg("n"), py::arg("flavor"),
          py::arg("samples"), py::arg("seed"), py::arg("rootfind") = RootFindConfig{},
          py::arg("dynamics") = DynamicsConfig{});

    py::class_<StrictnessEntry>(m, "StrictnessEntry")
        .def_readonly("n", &StrictnessEntry::n)
        .def_readonly("observed_max", &StrictnessEntry::observed_max)
        .def_readonly("threshold", &StrictnessEntry::threshold)
        .def_readonly("strict", &StrictnessEntry::strict);

    m.def("strictness_probe", &strictness_probe, py::arg("p"), py::arg("n_max"),
          py::arg("rootfind") = RootFindConfig{}, py::arg("dynamics") = DynamicsConfig{});

    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("d", &SearchConfig::d)
        .def_readwrite("n", &SearchConfig::n)
        .def_readwrite("starts", &SearchConfig::starts)
        .def_readwrite("iters_per_start", &SearchConfig::iters_per_start)
        .def_readwrite("seed", &SearchConfig::seed)
        .def_readwrite("simplex_init_scale", &SearchConfig::simplex_init_scale)
        .def_readwrite("objective_tol", &SearchConfig::objective_tol)
        .def_readwrite("domain_radius", &SearchConfig::domain_radius)
        .def_readwrite("flavor", &SearchConfig::flavor)
        .def_readwrite("rootfind", &SearchConfig::rootfind)
        .def_readwrite("dynamics", &SearchConfig::dynamics);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("best_value", &SearchResult::best_value)
        .def_readonly("best_params", &SearchResult::best_params)
        .def_readonly("best_polynomial", &SearchResult::best_polynomial)
        .def_readonly("evaluations", &SearchResult::evaluations)
        .def_readonly("per_start_bests", &SearchResult::per_start_bests)
        .def_readonly("conjecture_floor", &SearchResult::conjecture_floor);

    m.def("encode",
          [](const std::vector<double>& params) { return encode(params); },
          py::arg("params"));
    m.def("objective",
          [](const std::vector<double>& params, const SearchConfig& cfg) {
              return objective(params, cfg);
          },
          py::arg("params"), py::arg("config"));
    m.def("minimize", &minimize, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("samples", &CheckResult::samples)
        .def_readonly("worst", &CheckResult::worst)
        .def_readonly("tol", &CheckResult::tol)
        .def_readonly("failures", &CheckResult::failures)
        .def_readonly("passed", &CheckResult::passed);

    m.def("run_suite",
          [](const std::string& suite, std::uint64_t seed) {
              return run_suite(suite, desk_scale(seed));
          },
          py::arg("suite"), py::arg("seed") = std::uint64_t{0},
          py::call_guard<py::gil_scoped_release>());
}
