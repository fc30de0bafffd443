"""Fixed points, multipliers and sharp bounds of iterated complex polynomials."""

from iterfix._iterfix import (
    AffineMap,
    BoundFlavor,
    BoundReport,
    CheckResult,
    DynamicsConfig,
    FixedPointReport,
    IterfixError,
    PeriodicPoint,
    Polynomial,
    QuadraticCycleSum,
    RootCluster,
    RootFindConfig,
    RootSet,
    ScanSummary,
    SearchConfig,
    SearchResult,
    StrictnessEntry,
    TraceReport,
    affine_conjugate,
    bound_threshold,
    check_conjecture,
    check_theorem3,
    check_trace_identity,
    classify,
    encode,
    find_roots,
    fixed_points,
    max_multiplier,
    minimize,
    multiplier,
    objective,
    preimage_sum,
    quadratic_cycle_sum_check,
    quadratic_n2_max_multiplier,
    quadratic_n2_spectrum,
    quadratic_normal_form,
    re_c2_identity,
    run_suite,
    scan_family,
    strictness_probe,
    trace_sum,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "BoundFlavor",
    "BoundReport",
    "CheckResult",
    "DynamicsConfig",
    "FixedPointReport",
    "IterfixError",
    "PeriodicPoint",
    "Polynomial",
    "QuadraticCycleSum",
    "RootCluster",
    "RootFindConfig",
    "RootSet",
    "ScanSummary",
    "SearchConfig",
    "SearchResult",
    "StrictnessEntry",
    "TraceReport",
    "affine_conjugate",
    "bound_threshold",
    "check_conjecture",
    "check_theorem3",
    "check_trace_identity",
    "classify",
    "encode",
    "find_roots",
    "fixed_points",
    "max_multiplier",
    "minimize",
    "multiplier",
    "objective",
    "preimage_sum",
    "quadratic_cycle_sum_check",
    "quadratic_n2_max_multiplier",
    "quadratic_n2_spectrum",
    "quadratic_normal_form",
    "re_c2_identity",
    "run_suite",
    "scan_family",
    "strictness_probe",
    "trace_sum",
]
