"""Closed-form physics of both oscillator families.

Holds the parameter set, the position-dependent mass law and potential, the
point canonical transformation xi(x) and its inverse, the energy spectra,
normalization constants and wavefunctions.  Wavefunction magnitudes are
assembled in log-domain and exponentiated once, so high quantum numbers do
not overflow.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import ParameterDomainError, SingularPointError
from .specfun import hermite, laguerre, ln_gamma

__all__ = [
    "Family",
    "OscillatorParams",
    "StateIndex",
    "SolutionExponents",
    "solution_exponents",
    "mass",
    "potential",
    "xi_of_x",
    "x_of_xi",
    "energy",
    "even_state_energy",
    "odd_state_energy",
    "normalization",
    "wavefunction",
]


class Family(Enum):
    CANONICAL = "canonical"
    PARABOSE = "parabose"


@dataclass(frozen=True)
class OscillatorParams:
    """Physical constants plus the deformation and parabose parameters.

    a > -1 strictly (the algebra degenerates at a = -1); gamma >= 1/2, with
    gamma = 1/2 reducing every parabose formula to the canonical-deformed
    one.  lam0 = sqrt(m0*omega/hbar) is derived once and read-only.
    """

    m0: float = 1.0
    omega: float = 1.0
    hbar: float = 1.0
    a: float = 0.0
    gamma: float = 0.5
    lam0: float = field(init=False)

    def __post_init__(self):
        if self.m0 <= 0 or self.omega <= 0 or self.hbar <= 0:
            raise ParameterDomainError("m0, omega and hbar must be positive")
        if self.a <= -1.0:
            raise ParameterDomainError(f"deformation must satisfy a > -1, got {self.a}")
        if self.gamma < 0.5:
            raise ParameterDomainError(f"parabose parameter needs gamma >= 1/2, got {self.gamma}")
        object.__setattr__(self, "lam0", math.sqrt(self.m0 * self.omega / self.hbar))


@dataclass(frozen=True)
class StateIndex:
    """Global quantum number n within a family.

    For the parabose family, parity = n mod 2 and the radial index is
    m = n // 2, so n = 2m + parity exactly.
    """

    family: Family
    n: int

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise ParameterDomainError("quantum number must be a non-negative integer")

    @property
    def parity(self):
        return self.n % 2

    @property
    def m(self):
        return self.n // 2


@dataclass(frozen=True)
class SolutionExponents:
    """Ansatz constants of the solved boundary factor |xi|^A e^{B xi^2}."""

    A_even: float
    B: float
    alpha_even: float
    alpha_odd: float


def _gamma_eff(params, family):
    return params.gamma if family is Family.PARABOSE else 0.5


def solution_exponents(params: OscillatorParams, family: Family) -> SolutionExponents:
    """Solved exponents for the given family.

    B = -1/2 always (the +1/2 root violates the boundary conditions).  For
    the canonical family the alpha fields carry their gamma = 1/2 limit
    values (-1/2 and +1/2), consistent with the parity split of Hermite
    into Laguerre polynomials.
    """
    a = params.a
    g = _gamma_eff(params, family)
    alpha_even = 0.5 * ((2.0 * g - 1.0) / (a + 1.0) - 1.0)
    return SolutionExponents(
        A_even=0.5 * (a + 2.0 * g - 1.0) / (a + 1.0),
        B=-0.5,
        alpha_even=alpha_even,
        alpha_odd=alpha_even + 1.0,
    )


def mass(params: OscillatorParams, x: float) -> float:
    """Position-dependent mass m0 * (lam0^2 x^2)^a.

    Singular at x = 0 for a < 0; returns 0 there for a > 0 (valid limit).
    """
    a = params.a
    if x == 0.0:
        if a < 0.0:
            raise SingularPointError("mass is singular at x = 0 for a < 0")
        return params.m0 if a == 0.0 else 0.0
    return params.m0 * abs(params.lam0 * x) ** (2.0 * a)


def potential(params: OscillatorParams, x: float) -> float:
    """Oscillator potential (m0 omega^2 / 2) (lam0^2 x^2)^a x^2.

    Finite (and zero) at the origin for every a > -1; written through
    |x|^(2a+2) so no 0*inf arises for a < 0.
    """
    z = abs(params.lam0 * x)
    return (0.5 * params.m0 * params.omega**2 / params.lam0**2) * z ** (2.0 * params.a + 2.0)


def xi_of_x(params: OscillatorParams, x: float) -> float:
    """Dimensionless variable xi = lam0^{a+1} |x|^a x / sqrt(a+1)."""
    z = abs(params.lam0 * x)
    return math.copysign(z ** (params.a + 1.0), x) / math.sqrt(params.a + 1.0)


def x_of_xi(params: OscillatorParams, xi: float) -> float:
    """Inverse of xi_of_x (unique since xi is a strictly increasing bijection)."""
    a = params.a
    return math.copysign((math.sqrt(a + 1.0) * abs(xi)) ** (1.0 / (a + 1.0)), xi) / params.lam0


def energy(params: OscillatorParams, state: StateIndex) -> float:
    """Energy E_n = (a+1) hbar omega (n + 1/2) + hbar omega (gamma - 1/2).

    The second term vanishes for the canonical family; for the parabose
    family this single expression reproduces both the even and odd sector
    formulas exactly (see even_state_energy / odd_state_energy).
    """
    g = _gamma_eff(params, state.family)
    hw = params.hbar * params.omega
    return (params.a + 1.0) * hw * (state.n + 0.5) + hw * (g - 0.5)


def even_state_energy(params: OscillatorParams, m: int) -> float:
    """Parabose even-sector form E_2m = (a+1) hbar omega (2m + 1/2 + (gamma-1/2)/(a+1))."""
    a = params.a
    return (a + 1.0) * params.hbar * params.omega * (
        2.0 * m + 0.5 + (params.gamma - 0.5) / (a + 1.0))


def odd_state_energy(params: OscillatorParams, m: int) -> float:
    """Parabose odd-sector form E_2m+1 = (a+1) hbar omega (2m + 3/2 + (gamma-1/2)/(a+1))."""
    a = params.a
    return (a + 1.0) * params.hbar * params.omega * (
        2.0 * m + 1.5 + (params.gamma - 0.5) / (a + 1.0))


def normalization(params: OscillatorParams, state: StateIndex) -> float:
    """Normalization constant of psi_n, including the (-1)^m parabose sign.

    Assembled from ln_gamma so large n neither overflows nor loses the
    leading digits.
    """
    a, lam0 = params.a, params.lam0
    if state.family is Family.CANONICAL:
        n = state.n
        ln_c = (0.25 * math.log((a + 1.0) / math.pi)
                + 0.5 * (math.log(lam0) - n * math.log(2.0) - ln_gamma(n + 1.0)))
        return math.exp(ln_c)
    g_half = params.gamma - 0.5
    m = state.m
    exps = solution_exponents(params, Family.PARABOSE)
    if state.parity == 0:
        ln_c = (0.5 * (0.5 - g_half / (a + 1.0)) * math.log(a + 1.0)
                + 0.5 * (math.log(lam0) + ln_gamma(m + 1.0)
                         - ln_gamma(m + exps.alpha_even + 1.0)))
    else:
        ln_c = (-0.5 * (0.5 + g_half / (a + 1.0)) * math.log(a + 1.0)
                + 0.5 * (3.0 * math.log(lam0) + ln_gamma(m + 1.0)
                         - ln_gamma(m + exps.alpha_odd + 1.0)))
    return (-1.0) ** m * math.exp(ln_c)


def _small_x_exponent(params, state):
    """Power of |x| controlling psi_n near the origin."""
    a = params.a
    if state.family is Family.CANONICAL:
        s = 0.5 * a
        return s + (a + 1.0 if state.parity else 0.0)
    g_half = params.gamma - 0.5
    if state.parity == 0:
        return 0.5 * (a + 2.0 * g_half)
    return 0.5 * (3.0 * a + 2.0 * g_half) + 1.0


def wavefunction(params: OscillatorParams, state: StateIndex, x: float) -> float:
    """Stationary-state wavefunction psi_n(x).

    Canonical family: C_n |lam0 x|^{a/2} e^{-xi^2/2} H_n(xi).  Parabose even:
    C_2m |lam0 x|^{(a+2gamma-1)/2} e^{-xi^2/2} L_m^{(alpha_even)}(xi^2); odd
    states carry an extra factor x and alpha_odd = alpha_even + 1.  Raises
    at x = 0 only when the state actually diverges there.
    """
    a, lam0 = params.a, params.lam0
    if x == 0.0:
        exp_total = _small_x_exponent(params, state)
        if exp_total > 0.0:
            return 0.0
        if exp_total < 0.0:
            raise SingularPointError(
                "wavefunction diverges at x = 0 for these parameters")
        # exp_total == 0: the |x| factors cancel.  An even state has a
        # finite two-sided limit; an odd one jumps sign across the origin.
        if state.parity == 1:
            raise SingularPointError(
                "wavefunction has a sign discontinuity at x = 0 for these parameters")
        if state.family is Family.CANONICAL:
            return normalization(params, state) * hermite(state.n, 0.0)
        return normalization(params, state) * laguerre(
            state.m, solution_exponents(params, Family.PARABOSE).alpha_even, 0.0)

    z = abs(lam0 * x)
    ln_z = math.log(z)
    xi2 = z ** (2.0 * a + 2.0) / (a + 1.0)
    c = normalization(params, state)
    sign = math.copysign(1.0, c)
    ln_mag = math.log(abs(c)) - 0.5 * xi2

    if state.family is Family.CANONICAL:
        poly = hermite(state.n, math.copysign(math.sqrt(xi2), x))
        ln_mag += 0.5 * a * ln_z
    else:
        exps = solution_exponents(params, Family.PARABOSE)
        if state.parity == 0:
            poly = laguerre(state.m, exps.alpha_even, xi2)
            ln_mag += 0.5 * (a + 2.0 * params.gamma - 1.0) * ln_z
        else:
            poly = laguerre(state.m, exps.alpha_odd, xi2)
            ln_mag += 0.5 * (3.0 * a + 2.0 * params.gamma - 1.0) * ln_z
            ln_mag += math.log(abs(x))
            sign *= math.copysign(1.0, x)

    if poly == 0.0:
        return 0.0
    sign *= math.copysign(1.0, poly)
    return sign * math.exp(ln_mag + math.log(abs(poly)))
