import math

import pytest

import iterfix


def test_polynomial_round_trip():
    p = iterfix.Polynomial.parse("-1,0,1")
    assert p.degree == 2
    assert p.coeff(0) == -1
    assert p(2.0) == 3.0
    assert iterfix.Polynomial.parse(str(p)) == p


def test_iterate_and_compose():
    p = iterfix.Polynomial.parse("0,0,1")
    assert p.iterate(3).degree == 8
    q = p.compose(p)
    z = 0.3 + 0.4j
    assert abs(q(z) - p(p(z))) < 1e-12


def test_find_roots():
    rs = iterfix.find_roots(iterfix.Polynomial.parse("-2,1,1"))
    locs = sorted((c.location for c in rs.roots), key=lambda z: z.real)
    assert abs(locs[0] - (-2.0)) < 1e-10
    assert abs(locs[1] - 1.0) < 1e-10


def test_fixed_points_of_squaring():
    rep = iterfix.fixed_points(iterfix.Polynomial.monomial(2), 2)
    assert rep.count_with_multiplicity == 4
    mults = sorted(abs(pt.multiplier) for pt in rep.points)
    assert mults[0] < 1e-9
    assert all(abs(m - 4.0) < 1e-9 for m in mults[1:])
    periods = sorted(pt.exact_period for pt in rep.points)
    assert periods == [1, 1, 2, 2]


def test_trace_identity():
    rep = iterfix.check_trace_identity(iterfix.Polynomial.monomial(2), 2)
    assert abs(rep.lhs - 12.0) < 1e-9
    assert rep.rel_residual < 1e-9
    assert abs(rep.c) < 1e-10


def test_bound_check():
    rep = iterfix.check_theorem3(iterfix.Polynomial.parse("-1,0,1"))
    assert rep.passed
    assert rep.threshold == 4.0
    assert abs(rep.observed_max - (6.0 + 2.0 * math.sqrt(5.0))) < 1e-9
    assert iterfix.bound_threshold(iterfix.BoundFlavor.conjecture_c, 3, 2) == 9.0


def test_quadratic_oracle():
    c = 0.1 - 0.2j
    spectrum = sorted(iterfix.quadratic_n2_spectrum(c), key=lambda z: (z.real, z.imag))
    p = iterfix.Polynomial([c, 0, 1])
    rep = iterfix.fixed_points(p, 2)
    got = sorted((pt.multiplier for pt in rep.points), key=lambda z: (z.real, z.imag))
    assert len(got) == 4
    assert max(abs(a - b) for a, b in zip(got, spectrum)) < 1e-8


def test_classify():
    assert iterfix.classify(0.5) == "attracting"
    assert iterfix.classify(1.0) == "indifferent"
    assert iterfix.classify(-3.0) == "repelling"


def test_search_smoke():
    cfg = iterfix.SearchConfig()
    cfg.d = 2
    cfg.n = 2
    cfg.starts = 4
    cfg.iters_per_start = 60
    cfg.seed = 5
    res = iterfix.minimize(cfg)
    assert res.conjecture_floor == 4.0
    assert res.best_value >= 4.0 - 1e-6
    assert res.best_value < 4.5
    assert res.evaluations > 0


def test_scan_smoke():
    summary = iterfix.scan_family(2, 2, iterfix.BoundFlavor.theorem3, 10, 3)
    assert summary.sample_count == 10
    assert len(summary.violations) == 0
    assert summary.min_observed_max >= 4.0 - 1e-6


def test_errors_surface_as_python_exceptions():
    with pytest.raises(iterfix.IterfixError):
        iterfix.fixed_points(iterfix.Polynomial.parse("1,2"), 1)
    with pytest.raises(iterfix.IterfixError):
        iterfix.Polynomial.parse("not,a,poly")


def test_verify_suite():
    checks = iterfix.run_suite("oracles", 0)
    assert len(checks) >= 3
    assert all(c.passed for c in checks)
