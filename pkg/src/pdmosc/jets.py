"""Truncated Taylor (jet) arithmetic for applying differential operators.

A Jet stores the value and derivatives 1..K of a complex-valued function at
a real point.  Products follow the Leibniz rule exactly, so applying an
operator built from jets is exact to machine precision at the truncation
order; no symbolic algebra is involved.
"""

import math

import numpy as np

from .errors import SingularPointError

__all__ = ["Jet", "AnalyticFunction", "abs_power_jet", "gaussian_poly_function"]

_COMB_CACHE = {}


def _comb_row(k):
    row = _COMB_CACHE.get(k)
    if row is None:
        row = np.array([math.comb(k, j) for j in range(k + 1)], dtype=float)
        _COMB_CACHE[k] = row
    return row


class Jet:
    """Value and derivatives 1..order of a function at a point."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = np.asarray(coeffs, dtype=complex)

    @classmethod
    def variable(cls, x, order):
        c = np.zeros(order + 1, dtype=complex)
        c[0] = x
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def constant(cls, value, order):
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(c)

    @property
    def order(self):
        return self.coeffs.size - 1

    @property
    def value(self):
        return self.coeffs[0]

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a jet")
        return Jet(self.coeffs[: order + 1])

    def differentiate(self):
        """Jet of the derivative (order drops by one)."""
        if self.order < 1:
            raise ValueError("jet carries no derivative information")
        return Jet(self.coeffs[1:])

    def reflect(self):
        """Jet of x -> f(-x) at the mirrored point: k-th derivative gains (-1)^k."""
        signs = np.where(np.arange(self.coeffs.size) % 2 == 0, 1.0, -1.0)
        return Jet(self.coeffs * signs)

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.coeffs + other.coeffs)
        c = self.coeffs.copy()
        c[0] += other
        return Jet(c)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.coeffs * other)
        k_max = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = np.empty(k_max + 1, dtype=complex)
        for k in range(k_max + 1):
            row = _comb_row(k)
            out[k] = np.dot(row * a[: k + 1], b[k::-1])
        return Jet(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Jet(self.coeffs / scalar)

    def exp(self):
        """Jet of exp(f) via the Taylor-coefficient recurrence."""
        k = self.order
        fact = np.array([math.factorial(j) for j in range(k + 1)], dtype=float)
        c_hat = self.coeffs / fact
        g_hat = np.zeros(k + 1, dtype=complex)
        g_hat[0] = np.exp(c_hat[0])
        for m in range(1, k + 1):
            g_hat[m] = sum(j * c_hat[j] * g_hat[m - j] for j in range(1, m + 1)) / m
        return Jet(g_hat * fact)


def abs_power_jet(x, exponent, order, odd=False):
    """Jet of |x|^q (or sgn(x)|x|^q when odd=True) at x != 0.

    d^k |x|^q = q(q-1)...(q-k+1) |x|^{q-k} sgn(x)^k; the odd variant picks
    up one extra overall sign of x.
    """
    if x == 0.0:
        raise SingularPointError("|x|^q jets are undefined at x = 0")
    q = float(exponent)
    sgn = 1.0 if x > 0 else -1.0
    coeffs = np.empty(order + 1, dtype=complex)
    ln_ax = math.log(abs(x))
    falling = 1.0
    for k in range(order + 1):
        coeffs[k] = falling * math.exp((q - k) * ln_ax) * sgn**k
        falling *= q - k
    if odd:
        coeffs *= sgn
    return Jet(coeffs)


class AnalyticFunction:
    """Function on R \\ {0} (or all of R) evaluated as jets of any order."""

    __slots__ = ("_eval",)

    def __init__(self, evaluator):
        self._eval = evaluator

    def jet(self, x, order):
        j = self._eval(float(x), int(order))
        if j.order != order:
            raise ValueError(f"evaluator returned order {j.order}, wanted {order}")
        return j

    def __call__(self, x):
        return self.jet(x, 0).value

    def reflected(self):
        return AnalyticFunction(lambda x, k: self.jet(-x, k).reflect())

    def __add__(self, other):
        return AnalyticFunction(lambda x, k: self.jet(x, k) + other.jet(x, k))

    def __sub__(self, other):
        return AnalyticFunction(lambda x, k: self.jet(x, k) - other.jet(x, k))

    def __mul__(self, scalar):
        return AnalyticFunction(lambda x, k: self.jet(x, k) * scalar)

    __rmul__ = __mul__


def gaussian_poly_function(poly_coeffs, decay, center=0.0):
    """(sum_j c_j x^j) * exp(-decay (x - center)^2) as an AnalyticFunction."""
    coeffs = [complex(c) for c in poly_coeffs]

    def evaluator(x, order):
        xj = Jet.variable(x, order)
        acc = Jet.constant(0.0, order)
        for c in reversed(coeffs):
            acc = acc * xj + c
        shift = xj - center
        return acc * (shift * shift * (-decay)).exp()

    return AnalyticFunction(evaluator)
