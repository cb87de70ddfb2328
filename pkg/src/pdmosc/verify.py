"""Verification suites: every closed-form claim becomes a measured residual.

Each suite returns a VerificationReport with one case per check, carrying
the measured value, the tolerance it was held to, and a provenance string
naming the mathematical claim.  Suites never abort each other; the runner
converts an unexpected exception into a failing case and moves on.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import model, operators
from .errors import OracleConvergenceError
from .jets import gaussian_poly_function
from .model import Family, OscillatorParams, StateIndex
from .numerics import Sector, converge_spectrum
from .operators import Sign
from .specfun import gauss_generalized_laguerre, gauss_hermite, hermite
from .tridiag import SymTriMatrix, eigenvalues_lowest

__all__ = [
    "CaseResult",
    "VerificationReport",
    "suite_orthonormality",
    "suite_schrodinger_residual",
    "suite_algebra",
    "suite_spectrum_vs_oracle",
    "suite_limits",
    "suite_ladder",
    "spectrum_reports",
    "run_suites",
    "reports_to_json",
    "SUITE_NAMES",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 20240817
SUITE_NAMES = ("orthonormality", "residual", "algebra", "spectrum", "limits", "ladder")

_ORACLE_FLOOR = {Family.CANONICAL: 1e-6, Family.PARABOSE: 1e-4}


@dataclass(frozen=True)
class CaseResult:
    label: str
    measured: float
    tolerance: float
    passed: bool
    provenance: str


@dataclass
class VerificationReport:
    suite: str
    cases: list = field(default_factory=list)

    def add(self, label, measured, tolerance, provenance):
        self.cases.append(CaseResult(label, float(measured), float(tolerance),
                                     bool(measured <= tolerance), provenance))

    def add_failure(self, label, provenance):
        self.cases.append(CaseResult(label, float("inf"), 0.0, False, provenance))

    @property
    def overall_pass(self):
        return all(c.passed for c in self.cases)

    def to_dict(self):
        return {
            "suite": self.suite,
            "overall_pass": self.overall_pass,
            "cases": [
                {"label": c.label, "measured": c.measured, "tolerance": c.tolerance,
                 "pass": c.passed, "provenance": c.provenance}
                for c in self.cases
            ],
        }


def reports_to_json(reports, params=None, seed=None):
    doc = {
        "overall_pass": all(r.overall_pass for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
    if params is not None:
        doc["params"] = {"m0": params.m0, "omega": params.omega, "hbar": params.hbar,
                         "a": params.a, "gamma": params.gamma}
    if seed is not None:
        doc["seed"] = seed
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def sample_points(params, count=20, x_min=1e-3, x_max=6.0):
    """Log-spaced magnitudes mirrored in sign, probing cusp and tail."""
    mags = np.geomspace(x_min / params.lam0, x_max / params.lam0, count // 2)
    return np.concatenate((-mags[::-1], mags))


def _family_of(params):
    return Family.PARABOSE if params.gamma > 0.5 else Family.CANONICAL


# ---------------------------------------------------------------------------
# orthonormality


def _gram_canonical(params, n_states, n_quad):
    rule = gauss_hermite(n_quad)
    xs = np.array([model.x_of_xi(params, xi) for xi in rule.nodes])
    # undo the e^{-xi^2} weight and change variables back to x
    ln_jac = -np.log(math.sqrt(params.a + 1.0) * params.lam0
                     * np.abs(params.lam0 * xs) ** params.a)
    w_hat = np.exp(np.log(rule.weights) + rule.nodes**2 + ln_jac)
    vals = np.array([[model.wavefunction(params, StateIndex(Family.CANONICAL, n), x)
                      for x in xs] for n in range(n_states)])
    return (vals * w_hat) @ vals.T


def _gram_parabose(params, parity, n_radial, n_quad):
    exps = model.solution_exponents(params, Family.PARABOSE)
    alpha = exps.alpha_even if parity == 0 else exps.alpha_odd
    rule = gauss_generalized_laguerre(n_quad, alpha)
    ts = rule.nodes
    xs = np.array([model.x_of_xi(params, math.sqrt(t)) for t in ts])
    ln_jac = -np.log(2.0 * params.lam0 * np.abs(params.lam0 * xs) ** (2.0 * params.a + 1.0))
    w_hat = 2.0 * np.exp(np.log(rule.weights) + ts - alpha * np.log(ts) + ln_jac)
    vals = np.array([[model.wavefunction(params, StateIndex(Family.PARABOSE, 2 * m + parity), x)
                      for x in xs] for m in range(n_radial)])
    return (vals * w_hat) @ vals.T


def suite_orthonormality(params, family, n_max=12, n_quad=64, tol=1e-11):
    """Gram matrix of psi_0..psi_n_max against the identity.

    Integrals are done in the transformed variable, where the integrand is
    the rule's weight times a polynomial, so the rule is exact and any
    deviation measures the formulas, not the quadrature.
    """
    rep = VerificationReport("orthonormality")
    n_states = n_max + 1
    if family is Family.CANONICAL:
        g = _gram_canonical(params, n_states, n_quad)
        dev = np.max(np.abs(g - np.eye(n_states)))
        rep.add(f"canonical Gram deviation, n <= {n_max}", dev, tol,
                "Hermite orthogonality under the point canonical transformation")
        return rep
    n_even = (n_states + 1) // 2
    n_odd = n_states // 2
    g_even = _gram_parabose(params, 0, n_even, n_quad)
    g_odd = _gram_parabose(params, 1, n_odd, n_quad)
    rep.add(f"even-sector Gram deviation, m < {n_even}",
            np.max(np.abs(g_even - np.eye(n_even))), tol,
            "generalized Laguerre orthogonality, even reflection sector")
    rep.add(f"odd-sector Gram deviation, m < {n_odd}",
            np.max(np.abs(g_odd - np.eye(n_odd))), tol,
            "generalized Laguerre orthogonality, odd reflection sector")
    # Cross-parity entries vanish by symmetry: evaluate on a mirrored grid
    # and check the pairwise cancellation is exact.
    xs = sample_points(params, count=16, x_max=4.0)
    pos = xs[xs > 0]
    worst = 0.0
    for m in range(n_even):
        for k in range(n_odd):
            se = StateIndex(Family.PARABOSE, 2 * m)
            so = StateIndex(Family.PARABOSE, 2 * k + 1)
            tot = sum(model.wavefunction(params, se, x) * model.wavefunction(params, so, x)
                      + model.wavefunction(params, se, -x) * model.wavefunction(params, so, -x)
                      for x in pos)
            worst = max(worst, abs(tot))
    rep.add("cross-parity symmetric cancellation", worst, 1e-14,
            "opposite-parity overlaps vanish identically")
    return rep


# ---------------------------------------------------------------------------
# Schroedinger residuals


def _factored_state(params, family, n):
    """Split psi_n = sgn(x)^parity |x|^s * g(x) with g built from jets of
    t = (lam0 |x|)^{2a+2}/(a+1); returns (s, parity, g-jet factory).

    g is smooth and O(1)-conditioned, unlike the raw operator factors whose
    |x|^{-a-1}-type pieces cancel catastrophically near the origin.
    """
    from .jets import abs_power_jet
    from .specfun import laguerre

    a, lam0 = params.a, params.lam0
    g_eff = params.gamma if family is Family.PARABOSE else 0.5
    s_even = 0.5 * (a + 2.0 * g_eff - 1.0)
    c_norm = model.normalization(params, StateIndex(family, n))
    m = n // 2
    parity = n % 2
    exps = model.solution_exponents(params, family)
    alpha = exps.alpha_even if parity == 0 else exps.alpha_odd
    if family is Family.CANONICAL:
        # Hermite split by parity into generalized Laguerre of t = xi^2
        scale = c_norm * lam0**s_even * (-4.0) ** m * math.factorial(m)
        if parity:
            scale *= 2.0 * lam0 ** (a + 1.0) / math.sqrt(a + 1.0)
    else:
        scale = c_norm * lam0 ** (s_even if parity == 0 else s_even + a)
    s_total = s_even + (a + 1.0) * parity
    t_scale = lam0 ** (2.0 * a + 2.0) / (a + 1.0)

    def g_jet(x, order):
        t = abs_power_jet(x, 2.0 * a + 2.0, order) * t_scale
        return (t * -0.5).exp() * laguerre(m, alpha, t) * scale

    return s_total, parity, g_jet


def _residual_stable(params, family, n, x):
    """(H psi_n - E_n psi_n)(x) and E_n psi_n(x), cancellation-free.

    The boundary prefactor |x|^s is commuted through the momentum operators
    analytically (the singular pieces cancel exactly in that algebra), so
    the remaining jet arithmetic involves only O(psi)-sized terms and the
    residual stays meaningful down to |x| ~ 1e-3 for any a.
    """
    a = params.a
    g_eff = params.gamma if family is Family.PARABOSE else 0.5
    s_e = 0.5 * (a + 2.0 * g_eff - 1.0)
    kin = params.hbar**2 / (2.0 * params.m0 * params.lam0 ** (2.0 * a))
    s_total, parity, g_jet = _factored_state(params, family, n)
    e_n = model.energy(params, StateIndex(family, n))
    jet = g_jet(x, 2)
    g0, g1, g2 = jet.coeffs[0], jet.coeffs[1], jet.coeffs[2]
    sgn = math.copysign(1.0, x)
    v_x = model.potential(params, x)
    ax = abs(x)
    if parity == 0:
        kinetic = -kin * (ax ** (s_e - 2.0 * a) * g2
                          + (2.0 * g_eff - a - 1.0) * sgn * ax ** (s_e - 2.0 * a - 1.0) * g1)
        psi = ax**s_total * g0
    else:
        kinetic = -kin * (sgn * ax ** (s_e + 1.0 - a) * g2
                          + (a + 2.0 * g_eff + 1.0) * ax ** (s_e - a) * g1)
        psi = sgn * ax**s_total * g0
    return kinetic + (v_x - e_n) * psi, e_n * psi


def suite_schrodinger_residual(params, family, n_max=8, points=None, tol=None):
    """max |H psi_n - E_n psi_n| / max |E_n psi_n| per state.

    The Hamiltonian is applied through jets in the prefactor-commuted form
    (see _residual_stable); a raw composed-operator application of the same
    Hamiltonian is cross-checked against it away from the origin, where
    double precision can still resolve the raw form's cancellations.
    """
    if tol is None:
        tol = 1e-9 if family is Family.CANONICAL else 1e-8
    if points is None:
        points = sample_points(params, count=24, x_min=1e-3, x_max=6.0)
    rep = VerificationReport("residual")
    for n in range(n_max + 1):
        num = 0.0
        den = 0.0
        for x in points:
            res, target = _residual_stable(params, family, n, x)
            num = max(num, abs(res))
            den = max(den, abs(target))
        rep.add(f"state n={n}", num / den, tol,
                "stationary Schrodinger equation for the mass-substituted Hamiltonian")

    # two-route check: composed p~ p~ / 2 + omega^2 x~ x~ / 2 against the
    # prefactor-commuted application, on points where both are well posed
    ham = operators.op_hamiltonian_direct(params, family)
    benign = [x for x in points if abs(x) >= 0.3]
    worst = 0.0
    for n in range(min(n_max, 3) + 1):
        state = StateIndex(family, n)
        psi = operators.wavefunction_analytic(params, state)
        h_psi = ham.apply(psi)
        e_n = model.energy(params, state)
        den = max(abs(e_n * psi(x)) for x in benign)
        for x in benign:
            res_direct = h_psi(x) - e_n * psi(x)
            res_stable, _ = _residual_stable(params, family, n, x)
            worst = max(worst, abs(res_direct - res_stable) / den)
    rep.add("factored vs direct Hamiltonian application (|x| >= 0.3)", worst, 1e-9,
            "two independent evaluation routes for the same operator")
    return rep


# ---------------------------------------------------------------------------
# operator algebra


def _battery(seed):
    rng = np.random.default_rng(seed)
    c = rng.uniform(0.2, 1.0, size=8)
    return [
        ("gaussian (even)", 0, gaussian_poly_function([1.0], 0.5)),
        ("x*gaussian (odd)", 1, gaussian_poly_function([0.0, 1.0], 0.5)),
        ("even poly * gaussian", 0, gaussian_poly_function([1.0, 0.0, c[0], 0.0, c[1]], 0.35)),
        ("odd poly * gaussian", 1, gaussian_poly_function([0.0, c[2], 0.0, c[3]], 0.4)),
        ("shifted gaussian", None, gaussian_poly_function([1.0], 0.45, center=0.7 * c[4] + 0.3)),
        ("mixed poly * shifted gaussian", None,
         gaussian_poly_function([c[5], 1.0, c[6]], 0.55, center=-0.4 * c[7] - 0.2)),
    ]


def _rel_residual(measured_fn, target_fn, points, scale_fns, floor=0.0):
    """max |measured - target| over the largest participating term.

    The floor term guards identities whose both sides vanish on a
    particular input (e.g. a commutator applied to an operator kernel).
    """
    num = 0.0
    den = floor
    for x in points:
        num = max(num, abs(measured_fn(x) - target_fn(x)))
        den = max(den, *(abs(s(x)) for s in scale_fns))
    return num / max(den, 1e-300)


def suite_algebra(params, statistics, battery=None, points=None, tol=1e-9,
                  seed=DEFAULT_SEED):
    """Commutator and anticommutator identities on a smooth test battery.

    Covers the momentum-position commutator, the ladder commutator, the
    Hamiltonian-ladder relations, the reflection anticommutators and the
    reflection-mass commutators, for the given statistics (the gamma = 1/2
    and a = 0 instances reproduce the undeformed algebras).
    """
    rep = VerificationReport("algebra")
    battery = battery if battery is not None else _battery(seed)
    if points is None:
        # deep compositions like [H, a+-] amplify rounding as |x|^{-3(a+1)};
        # the identities hold at every x, so probe where f64 resolves them
        points = sample_points(params, count=10, x_min=0.25, x_max=3.0)
    a = params.a
    hw = params.hbar * params.omega
    g2 = 2.0 * params.gamma - 1.0 if statistics is Family.PARABOSE else 0.0

    x_op = operators.op_position_tilde(params)
    p_op = operators.op_momentum_tilde(params, statistics)
    plus = operators.op_ladder(params, statistics, Sign.PLUS)
    minus = operators.op_ladder(params, statistics, Sign.MINUS)
    ham = operators.op_hamiltonian(params, statistics)
    refl = operators.op_reflection()

    def run_case(label, op, target_builder, provenance, op_scale):
        worst = 0.0
        for name, _parity, f in battery:
            lhs = op.apply(f)
            target = target_builder(f)
            f_floor = op_scale * max(abs(f(x)) for x in points)
            worst = max(worst, _rel_residual(lhs, target, points,
                                             [lhs, target], floor=f_floor))
        rep.add(label, worst, tol, provenance)

    comm_px = operators.commutator(p_op, x_op)
    run_case(
        "[p~, x~] = -i hbar (1 + a + (2 gamma - 1) R)",
        comm_px,
        lambda f: (f * (1.0 + a) + f.reflected() * g2) * (-1j * params.hbar),
        "momentum-position commutator fixed by the mass law M'/(M) x = 2a",
        op_scale=params.hbar * (1.0 + a + abs(g2)))

    comm_ladder = operators.commutator(minus, plus)
    run_case(
        "[a-, a+] = 1 + a + (2 gamma - 1) R",
        comm_ladder,
        lambda f: f * (1.0 + a) + f.reflected() * g2,
        "deformed ladder commutation relation",
        op_scale=1.0 + a + abs(g2))

    for sign, op_l, factor in ((Sign.PLUS, plus, 1.0), (Sign.MINUS, minus, -1.0)):
        comm_h = operators.commutator(ham, op_l)
        run_case(
            f"[H, a{sign.value}] = {sign.value} hbar omega (1+a) a{sign.value}",
            comm_h,
            lambda f, op_l=op_l, factor=factor: op_l.apply(f) * (factor * hw * (1.0 + a)),
            "Hamiltonian-ladder commutation in the deformed algebra",
            op_scale=hw * (1.0 + a))

    for sign, op_l in ((Sign.PLUS, plus), (Sign.MINUS, minus)):
        anti = operators.anticommutator(refl, op_l)
        worst = 0.0
        for name, _parity, f in battery:
            lhs = anti.apply(f)
            scale = op_l.apply(f)
            floor = max(abs(f(x)) for x in points)
            worst = max(worst, _rel_residual(lhs, lambda x: 0.0, points,
                                             [scale], floor=floor))
        rep.add(f"{{R, a{sign.value}}} = 0", worst, tol,
                "reflection anticommutes with the ladder operators")

    worst = 0.0
    for nu in (0.25, 0.5, 1.0, -0.25):
        comm_rm = operators.commutator(refl, operators.op_mass_power(params, nu))
        for name, _parity, f in battery:
            lhs = comm_rm.apply(f)
            scale = operators.op_mass_power(params, nu).apply(f)
            worst = max(worst, _rel_residual(lhs, lambda x: 0.0, points, [scale]))
    rep.add("[R, M^nu] = 0", worst, tol,
            "the mass law is even, so reflection commutes with its powers")
    return rep


# ---------------------------------------------------------------------------
# spectrum vs oracle


def _sector_energies(params, sector, k):
    if sector is Sector.FULL:
        return np.array([model.energy(params, StateIndex(Family.CANONICAL, n))
                         for n in range(k)])
    if sector is Sector.PARABOSE_EVEN:
        return np.array([model.even_state_energy(params, m) for m in range(k)])
    return np.array([model.odd_state_energy(params, m) for m in range(k)])


def suite_spectrum_vs_oracle(params, sector, k=8, tol=None):
    """Grid-oracle eigenvalues against the closed-form spectrum."""
    family = Family.CANONICAL if sector is Sector.FULL else Family.PARABOSE
    if tol is None:
        tol = _ORACLE_FLOOR[family] * (1.0 if family is Family.PARABOSE else 10.0)
    rep = VerificationReport("spectrum")
    floor = _ORACLE_FLOOR[family]
    if tol < floor:
        rep.add(f"tolerance beyond oracle capability ({sector.value}): "
                f"requested {tol:g} < floor {floor:g}", floor, tol,
                "documented oracle accuracy floor")
        return rep
    exact = _sector_energies(params, sector, k)
    try:
        est = converge_spectrum(params, sector, k, target_tol=tol)
    except OracleConvergenceError as exc:
        rep.add_failure(f"oracle non-convergence ({sector.value}): {exc}",
                        "grid oracle diagnostic")
        return rep
    dev = np.abs(est.values - exact) / np.abs(exact)
    for j in range(k):
        rep.add(f"{sector.value} level {j} (oracle err est {est.error_estimates[j]:.2e})",
                dev[j], tol, "closed-form equidistant spectrum vs grid oracle")
    return rep


def spectrum_reports(params, family, k=8, tol=None):
    """Per-sector oracle reports; parabose adds the merged-gap uniformity check.

    The gap check compares differences of O(E_top)-sized eigenvalues against
    a gap of (a+1) hbar omega, so the sector oracles are re-run at the
    tighter relative tolerance that makes the gap deviation meaningful.
    """
    if family is Family.CANONICAL:
        return [suite_spectrum_vs_oracle(params, Sector.FULL, k, tol)]
    tol = tol if tol is not None else _ORACLE_FLOOR[Family.PARABOSE]
    rep_even = suite_spectrum_vs_oracle(params, Sector.PARABOSE_EVEN, k, tol)
    rep_odd = suite_spectrum_vs_oracle(params, Sector.PARABOSE_ODD, k, tol)
    merged = VerificationReport("spectrum")
    gap = (params.a + 1.0) * params.hbar * params.omega
    e_top = model.odd_state_energy(params, k - 1)
    tol_value = max(0.4 * tol * gap / e_top, 1e-8)

    def best_effort(sector):
        # the case below measures the actual gap deviation, so even values
        # whose internal certificate fell short are worth checking
        try:
            return converge_spectrum(params, sector, k, target_tol=tol_value).values
        except OracleConvergenceError as exc:
            return np.asarray(exc.values)

    even = best_effort(Sector.PARABOSE_EVEN)
    odd = best_effort(Sector.PARABOSE_ODD)
    both = np.sort(np.concatenate((even, odd)))
    gaps = np.diff(both)
    merged.add("merged spectrum gap uniformity",
               np.max(np.abs(gaps - gap)) / gap, tol,
               "interleaved sectors share the equidistant spacing (a+1) hbar omega")
    return [rep_even, rep_odd, merged]


# ---------------------------------------------------------------------------
# limit recoveries


def _textbook_oscillator(params, n, x):
    """Constant-mass oscillator wavefunction, written independently."""
    lam0 = params.lam0
    z = lam0 * x
    norm = (lam0**2 / math.pi) ** 0.25 / math.sqrt(2.0**n * math.factorial(n))
    return norm * math.exp(-0.5 * z * z) * hermite(n, z)


def suite_limits(a_values=(-0.6, 2.0), gammas=(1.0, 1.5), n_max=9,
                 base=None, tol_textbook=1e-13, tol_energy=1e-15, tol_match=1e-12):
    """Limit recoveries tying the deformed families to the textbook ones."""
    rep = VerificationReport("limits")
    base = base or {}
    xs = np.linspace(-4.0, 4.0, 41)

    # (i) a = 0, gamma = 1/2: both families reduce to the constant-mass case.
    p0 = OscillatorParams(a=0.0, gamma=0.5, **base)
    worst = 0.0
    for n in range(n_max + 1):
        for fam in (Family.CANONICAL, Family.PARABOSE):
            for x in xs:
                if x == 0.0 and n % 2 == 1:
                    continue
                worst = max(worst, abs(model.wavefunction(p0, StateIndex(fam, n), x)
                                       - _textbook_oscillator(p0, n, x)))
    rep.add("a=0, gamma=1/2 wavefunctions vs constant-mass forms", worst, tol_textbook,
            "undeformed limit of both families")
    worst = max(abs(model.energy(p0, StateIndex(Family.CANONICAL, n))
                    - p0.hbar * p0.omega * (n + 0.5)) for n in range(51))
    rep.add("a=0, gamma=1/2 energies vs hbar omega (n + 1/2)", worst, 0.0,
            "undeformed equidistant spectrum, exact equality")

    # (ii) a = 0, gamma > 1/2: constant-mass parabose spectrum hbar omega (n + gamma).
    worst = 0.0
    for g in gammas:
        pg = OscillatorParams(a=0.0, gamma=g, **base)
        for n in range(21):
            want = pg.hbar * pg.omega * (n + g)
            got = model.energy(pg, StateIndex(Family.PARABOSE, n))
            worst = max(worst, abs(got - want) / want)
    rep.add("a=0 parabose energies vs hbar omega (n + gamma)", worst, tol_energy,
            "constant-mass parabose spectrum")

    # (iii) gamma = 1/2: parabose states equal canonical-deformed states.
    worst = 0.0
    for a in a_values:
        pa = OscillatorParams(a=a, gamma=0.5, **base)
        pts = sample_points(pa, count=20, x_min=1e-2, x_max=4.0)
        for n in range(n_max + 1):
            can = np.array([model.wavefunction(pa, StateIndex(Family.CANONICAL, n), x)
                            for x in pts])
            par = np.array([model.wavefunction(pa, StateIndex(Family.PARABOSE, n), x)
                            for x in pts])
            # global phase fixed at the first positive sample point
            first = np.argmax(pts > 0)
            if can[first] * par[first] < 0:
                par = -par
            worst = max(worst, float(np.max(np.abs(can - par))))
    rep.add("gamma=1/2 parabose states equal canonical-deformed states", worst, tol_match,
            "parity split of Hermite into generalized Laguerre polynomials")
    return rep


# ---------------------------------------------------------------------------
# ladder action on eigenstates


def _wavefunction_nodes(params, state):
    """Interior zeros of psi_n from the Jacobi matrices of its polynomial."""
    if state.family is Family.CANONICAL:
        n = state.n
        if n == 0:
            return np.array([])
        jac = SymTriMatrix(np.zeros(n), np.sqrt(np.arange(1, n) / 2.0))
        roots = eigenvalues_lowest(jac, n)
        return np.array([model.x_of_xi(params, xi) for xi in roots])
    m = state.m
    if m == 0:
        return np.array([])
    exps = model.solution_exponents(params, Family.PARABOSE)
    alpha = exps.alpha_even if state.parity == 0 else exps.alpha_odd
    kk = np.arange(m, dtype=float)
    jac = SymTriMatrix(2.0 * kk + alpha + 1.0,
                       np.sqrt(np.arange(1, m) * (np.arange(1, m) + alpha)))
    ts = eigenvalues_lowest(jac, m)
    xs = np.array([model.x_of_xi(params, math.sqrt(t)) for t in ts])
    return np.concatenate((-xs[::-1], xs))


def suite_ladder(params, family, n_max=8, tol_spread=1e-9, tol_annihilation=1e-12,
                 points=None):
    """Measured ladder action: a- kills psi_0; a+ psi_n is proportional to psi_{n+1}.

    The proportionality constants are measured, reported in the case labels,
    and cross-checked against the value the commutation relations force,
    sqrt((a+1)(n+1) + (2 gamma - 1) [n even]).
    """
    rep = VerificationReport("ladder")
    if points is None:
        # comfortably away from the origin: the ratio is a constant, and
        # measuring it where a+ cancellations and |x|^s-flat denominators
        # are benign keeps the measurement itself at the 1e-12 level
        points = sample_points(params, count=24, x_min=0.3, x_max=3.5)
    plus = operators.op_ladder(params, family, Sign.PLUS)
    minus = operators.op_ladder(params, family, Sign.MINUS)

    psi0 = operators.wavefunction_analytic(params, StateIndex(family, 0))
    lowered = minus.apply(psi0)
    num = max(abs(lowered(x)) for x in points)
    den = max(abs(psi0(x)) for x in points)
    rep.add("annihilation |a- psi_0| / max |psi_0|", num / den, tol_annihilation,
            "ground state of the deformed algebra")

    g2 = 2.0 * params.gamma - 1.0 if family is Family.PARABOSE else 0.0
    worst_spread = 0.0
    worst_coeff = 0.0
    for n in range(n_max):
        upper_state = StateIndex(family, n + 1)
        psi_n = operators.wavefunction_analytic(params, StateIndex(family, n))
        psi_up = operators.wavefunction_analytic(params, upper_state)
        raised = plus.apply(psi_n)
        nodes = _wavefunction_nodes(params, upper_state)
        ratios = []
        for x in points:
            if nodes.size and np.min(np.abs(nodes - x)) < 1e-3:
                continue
            denom = psi_up(x)
            if abs(denom) < 1e-12:
                continue
            val = raised(x)
            ratios.append((val / denom).real)
        ratios = np.array(ratios)
        spread = (ratios.max() - ratios.min()) / abs(np.mean(ratios))
        worst_spread = max(worst_spread, spread)
        expected = math.sqrt((params.a + 1.0) * (n + 1) + (g2 if n % 2 == 0 else 0.0))
        worst_coeff = max(worst_coeff, abs(np.mean(ratios) - expected) / expected)
        rep.add(f"a+ psi_{n} proportional to psi_{n+1} (measured r_{n} = {np.mean(ratios):.12g})",
                spread, tol_spread, "ladder action measured pointwise")
    rep.add("measured ladder constants vs algebra-derived sqrt((a+1)(n+1) + (2g-1)[n even])",
            worst_coeff, 1e-7,
            "norm of a+ psi_n from the commutation relations")
    return rep


# ---------------------------------------------------------------------------
# orchestration


def run_suites(params, which="all", seed=DEFAULT_SEED, k_oracle=8, n_max=8,
               tol_overrides=None, family=None):
    """Run the selected suites for one parameter set; never aborts siblings."""
    family = family or _family_of(params)
    tols = tol_overrides or {}
    selected = SUITE_NAMES if which == "all" else (which,)
    reports = []

    def guarded(fn, *args, **kwargs):
        try:
            result = fn(*args, **kwargs)
            reports.extend(result if isinstance(result, list) else [result])
        except Exception as exc:  # report-and-continue contract
            rep = VerificationReport(fn.__name__.replace("suite_", ""))
            rep.add_failure(f"suite raised {type(exc).__name__}: {exc}", "runner diagnostic")
            reports.append(rep)

    for name in selected:
        if name == "orthonormality":
            guarded(suite_orthonormality, params, family,
                    n_max=12, tol=tols.get("orthonormality", 1e-11))
        elif name == "residual":
            guarded(suite_schrodinger_residual, params, family,
                    n_max=n_max, tol=tols.get("residual"))
        elif name == "algebra":
            guarded(suite_algebra, params, family, seed=seed,
                    tol=tols.get("algebra", 1e-9))
        elif name == "spectrum":
            guarded(spectrum_reports, params, family,
                    k=k_oracle, tol=tols.get("spectrum"))
        elif name == "limits":
            base = {"m0": params.m0, "omega": params.omega, "hbar": params.hbar}
            guarded(suite_limits, base=base)
        elif name == "ladder":
            guarded(suite_ladder, params, family, n_max=n_max,
                    tol_spread=tols.get("ladder", 1e-9))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return reports
