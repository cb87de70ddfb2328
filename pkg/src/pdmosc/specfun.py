"""Orthogonal polynomials, log-gamma and Gaussian quadrature rules.

Hermite and generalized Laguerre polynomials are evaluated by their upward
three-term recurrences (stable for the degrees used here, n <~ 100).  The
quadrature rules are built Golub--Welsch style: nodes from the symmetric
tridiagonal Jacobi matrix via the shared bisection eigensolver, polished by
one or two Newton steps on the orthonormal polynomial, weights from the
Christoffel function 1/sum_k p_k(x)^2.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterDomainError
from .tridiag import SymTriMatrix, eigenvalues_lowest

__all__ = [
    "hermite",
    "laguerre",
    "ln_gamma",
    "QuadratureRule",
    "gauss_hermite",
    "gauss_generalized_laguerre",
]


def hermite(n, x):
    """Hermite polynomial H_n(x).

    Uses H_{k+1} = 2 x H_k - 2 k H_{k-1} with H_0 = 1, H_1 = 2x.  Works on
    floats, numpy arrays and anything else supporting ring arithmetic.
    """
    if n < 0:
        raise ParameterDomainError("polynomial degree must be non-negative")
    h_prev = x * 0 + 1.0
    if n == 0:
        return h_prev
    h = 2.0 * x
    for k in range(1, n):
        h, h_prev = 2.0 * x * h - (2.0 * k) * h_prev, h
    return h


def laguerre(m, alpha, x):
    """Generalized Laguerre polynomial L_m^(alpha)(x), alpha > -1.

    Uses (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
    """
    if m < 0:
        raise ParameterDomainError("polynomial degree must be non-negative")
    if alpha <= -1.0:
        raise ParameterDomainError(f"Laguerre parameter must exceed -1, got {alpha}")
    l_prev = x * 0 + 1.0
    if m == 0:
        return l_prev
    lag = (1.0 + alpha) - x
    for k in range(1, m):
        lag, l_prev = ((2.0 * k + 1.0 + alpha - x) * lag
                       - (k + alpha) * l_prev) / (k + 1.0), lag
    return lag


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ParameterDomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


@dataclass(frozen=True)
class QuadratureRule:
    """Gaussian rule: sum_i weights[i] f(nodes[i]) ~ integral of weight * f.

    kind is "gauss_hermite" (weight e^{-x^2} on R) or
    "gauss_generalized_laguerre" (weight x^alpha e^{-x} on (0, inf)).
    """

    kind: str
    alpha: float | None
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.size != weights.size or nodes.size < 1:
            raise ValueError("nodes/weights length mismatch")
        if not np.all(np.diff(nodes) > 0):
            raise ValueError("nodes must be strictly increasing")
        if not np.all(weights > 0):
            raise ValueError("weights must be strictly positive")
        if self.kind == "gauss_hermite":
            mu0, tol = math.sqrt(math.pi), 1e-13
        elif self.kind == "gauss_generalized_laguerre":
            if self.alpha is None or self.alpha <= -1.0:
                raise ParameterDomainError("generalized Laguerre rule needs alpha > -1")
            if nodes[0] <= 0.0:
                raise ValueError("Laguerre nodes must be positive")
            mu0, tol = math.exp(ln_gamma(self.alpha + 1.0)), 1e-12
        else:
            raise ValueError(f"unknown rule kind {self.kind!r}")
        if abs(float(weights.sum()) - mu0) > tol * mu0:
            raise ValueError("weight sum does not reproduce the zeroth moment")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @property
    def n(self):
        return self.nodes.size

    def integrate(self, f):
        """Apply the rule to a callable or to precomputed node values."""
        vals = f(self.nodes) if callable(f) else np.asarray(f)
        return float(np.dot(self.weights, vals))


def _orthonormal_hermite_table(x, n):
    """Orthonormal (w.r.t. e^{-x^2}) Hermite values p_0..p_n at points x."""
    x = np.asarray(x, dtype=float)
    table = np.empty((n + 1,) + x.shape)
    table[0] = math.pi ** -0.25
    if n >= 1:
        table[1] = x * math.sqrt(2.0) * table[0]
    for k in range(1, n):
        table[k + 1] = (x * math.sqrt(2.0 / (k + 1)) * table[k]
                        - math.sqrt(k / (k + 1.0)) * table[k - 1])
    return table


def _orthonormal_laguerre_table(x, n, alpha):
    """Orthonormal (w.r.t. x^alpha e^{-x}) Laguerre values p_0..p_n at x.

    Positive-leading-coefficient convention, so p_n is (-1)^n times the
    normalized L_n^(alpha); only squares and consistent ratios are used.
    """
    x = np.asarray(x, dtype=float)
    table = np.empty((n + 1,) + x.shape)
    table[0] = math.exp(-0.5 * ln_gamma(alpha + 1.0))
    if n >= 1:
        table[1] = (x - (alpha + 1.0)) * table[0] / math.sqrt(alpha + 1.0)
    for k in range(1, n):
        b_k = math.sqrt(k * (k + alpha))
        b_k1 = math.sqrt((k + 1.0) * (k + 1.0 + alpha))
        table[k + 1] = ((x - (2.0 * k + alpha + 1.0)) * table[k]
                        - b_k * table[k - 1]) / b_k1
    return table


def gauss_hermite(n: int) -> QuadratureRule:
    """N-point Gauss--Hermite rule, exact for e^{-x^2} * poly(deg <= 2N-1).

    Parameters
    ----------
    n : int
        Number of nodes, n >= 1.
    """
    if n < 1:
        raise ParameterDomainError("quadrature size must be >= 1")
    jac = SymTriMatrix(np.zeros(n), np.sqrt(np.arange(1, n) / 2.0))
    nodes = eigenvalues_lowest(jac, n)
    for _ in range(2):
        table = _orthonormal_hermite_table(nodes, n)
        deriv = math.sqrt(2.0 * n) * table[n - 1]
        nodes = nodes - table[n] / deriv
    # The rule is symmetric; symmetrize to kill the last rounding asymmetry.
    nodes = 0.5 * (nodes - nodes[::-1])
    table = _orthonormal_hermite_table(nodes, n - 1)
    weights = 1.0 / np.sum(table * table, axis=0)
    weights = 0.5 * (weights + weights[::-1])
    return QuadratureRule("gauss_hermite", None, nodes, weights)


def gauss_generalized_laguerre(n: int, alpha: float) -> QuadratureRule:
    """N-point generalized Gauss--Laguerre rule for weight x^alpha e^{-x}.

    Parameters
    ----------
    n : int
        Number of nodes, n >= 1.
    alpha : float
        Weight exponent, alpha > -1.
    """
    if n < 1:
        raise ParameterDomainError("quadrature size must be >= 1")
    if alpha <= -1.0:
        raise ParameterDomainError(f"Laguerre parameter must exceed -1, got {alpha}")
    k = np.arange(n, dtype=float)
    diag = 2.0 * k + alpha + 1.0
    off = np.sqrt(np.arange(1, n) * (np.arange(1, n) + alpha))
    nodes = eigenvalues_lowest(SymTriMatrix(diag, off), n)
    for _ in range(2):
        table = _orthonormal_laguerre_table(nodes, n, alpha)
        # x p_n' = n p_n + sqrt(n(n+alpha)) p_{n-1} in this sign convention
        deriv = (n * table[n] + math.sqrt(n * (n + alpha)) * table[n - 1]) / nodes
        nodes = nodes - table[n] / deriv
    table = _orthonormal_laguerre_table(nodes, n - 1, alpha)
    weights = 1.0 / np.sum(table * table, axis=0)
    return QuadratureRule("gauss_generalized_laguerre", alpha, nodes, weights)
