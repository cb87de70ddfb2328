import json

import numpy as np
import pytest

from pdmosc.model import Family, OscillatorParams
from pdmosc.numerics import Sector
from pdmosc.verify import (
    DEFAULT_SEED,
    reports_to_json,
    run_suites,
    spectrum_reports,
    suite_algebra,
    suite_ladder,
    suite_limits,
    suite_orthonormality,
    suite_schrodinger_residual,
    suite_spectrum_vs_oracle,
)


def test_orthonormality_canonical():
    for a, tol in ((0.0, 1e-12), (2.0, 1e-12)):
        rep = suite_orthonormality(OscillatorParams(a=a), Family.CANONICAL, tol=tol)
        assert rep.overall_pass, [c.label for c in rep.cases if not c.passed]


def test_orthonormality_parabose():
    rep = suite_orthonormality(OscillatorParams(a=-0.6, gamma=1.5), Family.PARABOSE,
                               tol=1e-11)
    assert rep.overall_pass
    assert all(c.provenance for c in rep.cases)


def test_residual_suite_levels():
    rep = suite_schrodinger_residual(OscillatorParams(a=0.0), Family.CANONICAL, n_max=8)
    assert rep.overall_pass
    assert max(c.measured for c in rep.cases) < 1e-11
    rep = suite_schrodinger_residual(OscillatorParams(a=2.0), Family.CANONICAL, n_max=8)
    assert max(c.measured for c in rep.cases) < 1e-9
    rep = suite_schrodinger_residual(OscillatorParams(a=-0.6, gamma=1.5),
                                     Family.PARABOSE, n_max=8)
    assert max(c.measured for c in rep.cases) < 1e-8


def test_algebra_suite_all_statistics():
    for a, gamma, stats in ((0.0, 0.5, Family.CANONICAL),   # undeformed algebra
                            (2.0, 0.5, Family.CANONICAL),   # deformed
                            (0.0, 1.5, Family.PARABOSE),    # parabose, constant mass
                            (2.0, 1.5, Family.PARABOSE)):   # deformed superalgebra
        rep = suite_algebra(OscillatorParams(a=a, gamma=gamma), stats)
        assert rep.overall_pass, [c.label for c in rep.cases if not c.passed]


def test_spectrum_suite_canonical():
    rep = suite_spectrum_vs_oracle(OscillatorParams(a=0.0), Sector.FULL, k=8, tol=1e-6)
    assert rep.overall_pass
    assert len(rep.cases) == 8


def test_spectrum_suite_tolerance_floor():
    rep = suite_spectrum_vs_oracle(OscillatorParams(a=2.0), Sector.FULL, k=4, tol=1e-9)
    assert not rep.overall_pass
    assert "beyond oracle capability" in rep.cases[0].label


def test_spectrum_reports_parabose_merged():
    reps = spectrum_reports(OscillatorParams(a=-0.6, gamma=1.0), Family.PARABOSE, k=4)
    assert len(reps) == 3
    assert all(r.overall_pass for r in reps), [
        c.label for r in reps for c in r.cases if not c.passed]


def test_limits_suite():
    rep = suite_limits()
    assert rep.overall_pass, [c.label for c in rep.cases if not c.passed]


def test_ladder_suite():
    rep = suite_ladder(OscillatorParams(a=2.0), Family.CANONICAL)
    assert rep.overall_pass
    rep = suite_ladder(OscillatorParams(a=-0.6, gamma=1.0), Family.PARABOSE)
    assert rep.overall_pass
    # a = 0 textbook: r_n = sqrt(n+1), read back from the labels
    rep = suite_ladder(OscillatorParams(a=0.0), Family.CANONICAL, n_max=3)
    meas = [c for c in rep.cases if "measured r_" in c.label]
    for n, c in enumerate(meas):
        r_n = float(c.label.split("=")[-1].rstrip(")"))
        assert abs(r_n - np.sqrt(n + 1.0)) < 1e-9


def test_reports_deterministic():
    p = OscillatorParams(a=2.0, gamma=1.5)
    a = reports_to_json(run_suites(p, which="algebra", seed=DEFAULT_SEED), p, DEFAULT_SEED)
    b = reports_to_json(run_suites(p, which="algebra", seed=DEFAULT_SEED), p, DEFAULT_SEED)
    assert a == b
    doc = json.loads(a)
    assert doc["overall_pass"] is True
    for rep in doc["reports"]:
        for case in rep["cases"]:
            assert case["provenance"]
            assert set(case) == {"label", "measured", "tolerance", "pass", "provenance"}


def test_failure_does_not_abort_siblings():
    # an impossible spectrum tolerance yields a failing case; other suites
    # still run and report
    p = OscillatorParams(a=0.0)
    reports = run_suites(p, which="all", tol_overrides={"spectrum": 1e-12},
                         k_oracle=3, n_max=3)
    names = [r.suite for r in reports]
    assert "spectrum" in names and "algebra" in names and "limits" in names
    spec_reps = [r for r in reports if r.suite == "spectrum"]
    assert any(not r.overall_pass for r in spec_reps)
    alg = [r for r in reports if r.suite == "algebra"]
    assert all(r.overall_pass for r in alg)


def test_factored_hamiltonian_identities_symbolic():
    # the prefactor-commuted kinetic forms used by _residual_stable must be
    # algebraically identical to the raw composed momentum applications,
    # for arbitrary deformation, gamma and smooth g
    import sympy as sp

    x = sp.symbols("x", positive=True)
    a, gam = sp.symbols("a gamma", real=True)
    g = sp.Function("g")
    s_e = (a + 2 * gam - 1) / 2
    half = sp.Rational(1, 2)

    def d_even(f):  # reflection eigenvalue +1 folded into the first-order piece
        return x**-a * sp.diff(f, x) - (a / 2 + gam - half) * x ** (-a - 1) * f

    def d_odd(f):
        return x**-a * sp.diff(f, x) - (a / 2 - gam + half) * x ** (-a - 1) * f

    raw = d_odd(d_even(x**s_e * g(x)))
    fact = (x ** (s_e - 2 * a) * sp.diff(g(x), x, 2)
            + (2 * gam - a - 1) * x ** (s_e - 2 * a - 1) * sp.diff(g(x), x))
    assert sp.simplify(sp.expand(raw - fact)) == 0

    raw = d_even(d_odd(x ** (s_e + a + 1) * g(x)))
    fact = (x ** (s_e + 1 - a) * sp.diff(g(x), x, 2)
            + (a + 2 * gam + 1) * x ** (s_e - a) * sp.diff(g(x), x))
    assert sp.simplify(sp.expand(raw - fact)) == 0


def test_wavefunction_nodes_match_sign_changes():
    from pdmosc.model import StateIndex, wavefunction
    from pdmosc.verify import _wavefunction_nodes

    for a, g, fam, n in ((2.0, 0.5, Family.CANONICAL, 5),
                         (-0.6, 1.5, Family.PARABOSE, 6),
                         (-0.6, 1.5, Family.PARABOSE, 7)):
        p = OscillatorParams(a=a, gamma=g)
        state = StateIndex(fam, n)
        nodes = _wavefunction_nodes(p, state)
        # every reported node sits within the suite's 1e-3 guard radius of a
        # true sign change (x_of_xi amplifies root rounding near the origin)
        for x0 in nodes:
            lo, hi = x0 - 3e-4, x0 + 3e-4
            assert wavefunction(p, state, lo) * wavefunction(p, state, hi) <= 0
        # and the count matches the polynomial degree (plus origin parity zero)
        expect = n if fam is Family.CANONICAL else 2 * (n // 2)
        assert len(nodes) == expect


@pytest.mark.parametrize("a,gamma", [(-0.9, 1.5), (5.0, 1.0), (0.5, 3.0)])
def test_suites_at_parameter_extremes(a, gamma):
    p = OscillatorParams(a=a, gamma=gamma)
    rep = suite_orthonormality(p, Family.PARABOSE, n_max=10, tol=1e-11)
    assert rep.overall_pass, [(c.label, c.measured) for c in rep.cases if not c.passed]
    rep = suite_schrodinger_residual(p, Family.PARABOSE, n_max=6)
    assert rep.overall_pass, [(c.label, c.measured) for c in rep.cases if not c.passed]


def test_report_overall_pass_is_conjunction():
    rep = suite_limits()
    assert rep.overall_pass == all(c.passed for c in rep.cases)
    rep.add("forced failure", 1.0, 0.5, "teardown check")
    assert not rep.overall_pass
