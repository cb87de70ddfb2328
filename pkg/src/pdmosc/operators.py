"""Operator realizations acting on analytic functions through jets.

Position and momentum in their mass-substituted (tilde) forms, ladder
operators, Hamiltonians, and the reflection operator, plus commutator
assembly by composition.  Operators carry their literal -i factors, so
results are complex even for real inputs; every identity is checked
pointwise on test functions, never symbolically.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .jets import AnalyticFunction, Jet, abs_power_jet
from .model import Family, OscillatorParams, StateIndex, normalization, solution_exponents
from .specfun import hermite, laguerre

__all__ = [
    "Sign",
    "OperatorSpec",
    "identity_op",
    "op_position_tilde",
    "op_momentum_tilde",
    "op_ladder",
    "op_hamiltonian",
    "op_hamiltonian_direct",
    "op_reflection",
    "op_mass_power",
    "commutator",
    "anticommutator",
    "wavefunction_analytic",
]


class Sign(Enum):
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class OperatorSpec:
    """Linear map on analytic functions with a stated derivative budget.

    Applying the operator to a function queryable to jet order K yields one
    queryable to order K - derivative_budget.  parity_action marks
    operators that reference f(-x).
    """

    name: str
    derivative_budget: int
    parity_action: bool
    _apply: Callable[[AnalyticFunction], AnalyticFunction] = field(repr=False)

    def apply(self, f: AnalyticFunction) -> AnalyticFunction:
        return self._apply(f)

    def __matmul__(self, other):
        return OperatorSpec(
            f"({self.name} {other.name})",
            self.derivative_budget + other.derivative_budget,
            self.parity_action or other.parity_action,
            lambda f: self.apply(other.apply(f)),
        )

    def __add__(self, other):
        return OperatorSpec(
            f"({self.name} + {other.name})",
            max(self.derivative_budget, other.derivative_budget),
            self.parity_action or other.parity_action,
            lambda f: self.apply(f) + other.apply(f),
        )

    def __sub__(self, other):
        return self + (other * (-1.0))

    def __mul__(self, scalar):
        return OperatorSpec(
            self.name, self.derivative_budget, self.parity_action,
            lambda f: self.apply(f) * scalar,
        )

    __rmul__ = __mul__


def identity_op() -> OperatorSpec:
    return OperatorSpec("1", 0, False, lambda f: f)


def _mult_operator(name, jet_factory):
    """Multiplication operator f(x) -> g(x) f(x) with g given as a jet factory."""
    def apply(f):
        return AnalyticFunction(lambda x, k: jet_factory(x, k) * f.jet(x, k))
    return OperatorSpec(name, 0, False, apply)


def op_position_tilde(params: OscillatorParams) -> OperatorSpec:
    """x-tilde = M^{1/2} x: multiplication by sqrt(m0) lam0^a |x|^a x."""
    scale = math.sqrt(params.m0) * params.lam0**params.a
    a = params.a
    return _mult_operator(
        "x~", lambda x, k: abs_power_jet(x, a + 1.0, k, odd=True) * scale)


def op_mass_power(params: OscillatorParams, nu: float) -> OperatorSpec:
    """Multiplication by M(x)^nu (an even function of x)."""
    q = 2.0 * params.a * nu
    scale = params.m0**nu * params.lam0**q
    return _mult_operator(
        f"M^{nu}", lambda x, k: abs_power_jet(x, q, k) * scale)


def op_reflection() -> OperatorSpec:
    """Reflection: f(x) -> f(-x); jet derivatives pick up (-1)^k."""
    return OperatorSpec("R", 0, True, lambda f: f.reflected())


def op_momentum_tilde(params: OscillatorParams, statistics: Family) -> OperatorSpec:
    """Momentum p-tilde = M^{-1/4} p M^{-1/4}.

    Canonical: -i hbar lam0^{-a} m0^{-1/2} (|x|^{-a} f' - (a/2)|x|^{-a-2} x f).
    Parabose adds + i hbar lam0^{-a} m0^{-1/2} (gamma-1/2) |x|^{-a-2} x f(-x)
    from the reflection term of the underlying momentum.  Undefined at x=0.
    """
    a = params.a
    pref = -1j * params.hbar / (params.lam0**a * math.sqrt(params.m0))
    g_half = params.gamma - 0.5
    parabose = statistics is Family.PARABOSE

    def apply(f):
        def evaluate(x, k):
            fj = f.jet(x, k + 1)
            res = abs_power_jet(x, -a, k) * fj.differentiate()
            res = res - abs_power_jet(x, -a - 1.0, k, odd=True) * fj.truncate(k) * (0.5 * a)
            if parabose and g_half != 0.0:
                fr = f.jet(-x, k).reflect()
                res = res + abs_power_jet(x, -a - 1.0, k, odd=True) * fr * (-g_half)
            return res * pref
        return AnalyticFunction(evaluate)

    return OperatorSpec("p~", 1, parabose and g_half != 0.0, apply)


def op_ladder(params: OscillatorParams, statistics: Family, sign: Sign) -> OperatorSpec:
    """Creation (PLUS) / annihilation (MINUS) operator.

    a^+- = (1/sqrt2) (sqrt(omega/hbar) x~ -+ (i/sqrt(omega hbar)) p~).
    """
    x_op = op_position_tilde(params)
    p_op = op_momentum_tilde(params, statistics)
    s = -1.0 if sign is Sign.PLUS else 1.0
    combo = (x_op * math.sqrt(params.omega / params.hbar)
             + p_op * (s * 1j / math.sqrt(params.omega * params.hbar)))
    label = "a+" if sign is Sign.PLUS else "a-"
    return OperatorSpec(label, 1, p_op.parity_action,
                        (combo * (1.0 / math.sqrt(2.0)))._apply)


def op_hamiltonian(params: OscillatorParams, statistics: Family) -> OperatorSpec:
    """Hamiltonian assembled from ladder operators.

    Canonical-deformed: hbar omega (a+ a- + (1+a)/2); the deformed algebra
    [a-, a+] = 1+a shifts the familiar +1/2 zero point by the same factor,
    and at a = 0 the textbook form returns.  Parabose: the symmetrized
    (hbar omega / 2)(a+ a- + a- a+).  Both must agree with the direct
    p~^2/2 + omega^2 x~^2/2 form; that equality is a test, not an input.
    """
    plus = op_ladder(params, statistics, Sign.PLUS)
    minus = op_ladder(params, statistics, Sign.MINUS)
    hw = params.hbar * params.omega
    if statistics is Family.CANONICAL:
        op = (plus @ minus) * hw + identity_op() * (0.5 * hw * (1.0 + params.a))
    else:
        op = ((plus @ minus) + (minus @ plus)) * (0.5 * hw)
    return OperatorSpec("H", 2, op.parity_action, op._apply)


def op_hamiltonian_direct(params: OscillatorParams, statistics: Family) -> OperatorSpec:
    """Hamiltonian in its direct form p~ p~ / 2 + (omega^2/2) x~ x~."""
    p_op = op_momentum_tilde(params, statistics)
    x_op = op_position_tilde(params)
    op = (p_op @ p_op) * 0.5 + (x_op @ x_op) * (0.5 * params.omega**2)
    return OperatorSpec("H_direct", 2, op.parity_action, op._apply)


def commutator(op_a: OperatorSpec, op_b: OperatorSpec) -> OperatorSpec:
    """[A, B] = AB - BA by composition; budget is the sum of budgets."""
    diff = (op_a @ op_b) - (op_b @ op_a)
    return OperatorSpec(f"[{op_a.name},{op_b.name}]",
                        op_a.derivative_budget + op_b.derivative_budget,
                        op_a.parity_action or op_b.parity_action,
                        diff._apply)


def anticommutator(op_a: OperatorSpec, op_b: OperatorSpec) -> OperatorSpec:
    """{A, B} = AB + BA by composition."""
    tot = (op_a @ op_b) + (op_b @ op_a)
    return OperatorSpec(f"{{{op_a.name},{op_b.name}}}",
                        op_a.derivative_budget + op_b.derivative_budget,
                        op_a.parity_action or op_b.parity_action,
                        tot._apply)


def wavefunction_analytic(params: OscillatorParams, state: StateIndex) -> AnalyticFunction:
    """psi_n as an AnalyticFunction (jets of any order, x != 0).

    Built from |x|-power atoms, the exp jet and the polynomial recurrences,
    mirroring the closed forms used by model.wavefunction; plain-domain
    arithmetic, adequate for the moderate n and |x| the suites probe.
    """
    a, lam0 = params.a, params.lam0
    c_n = normalization(params, state)
    exps = solution_exponents(params, state.family)
    xi_scale = lam0 ** (a + 1.0) / math.sqrt(a + 1.0)

    if state.family is Family.CANONICAL:
        bexp = a / 2.0

        def evaluate(x, order):
            gauss = (abs_power_jet(x, 2.0 * a + 2.0, order)
                     * (-0.5 * lam0 ** (2.0 * a + 2.0) / (a + 1.0))).exp()
            xi = abs_power_jet(x, a + 1.0, order, odd=True) * xi_scale
            poly = hermite(state.n, xi)
            bound = abs_power_jet(x, bexp, order) * lam0**bexp
            return bound * gauss * poly * c_n

        return AnalyticFunction(evaluate)

    alpha = exps.alpha_even if state.parity == 0 else exps.alpha_odd
    bexp = (0.5 * (a + 2.0 * params.gamma - 1.0) if state.parity == 0
            else 0.5 * (3.0 * a + 2.0 * params.gamma - 1.0))

    def evaluate(x, order):
        t = abs_power_jet(x, 2.0 * a + 2.0, order) * (lam0 ** (2.0 * a + 2.0) / (a + 1.0))
        gauss = (t * -0.5).exp()
        poly = laguerre(state.m, alpha, t)
        bound = abs_power_jet(x, bexp, order) * lam0**bexp
        psi = bound * gauss * poly * c_n
        if state.parity == 1:
            psi = psi * Jet.variable(x, order)
        return psi

    return AnalyticFunction(evaluate)
