"""Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.

Self-contained (no LAPACK): the eigenvalue count below a shift is read off
the signs of the LDL^T pivots of (T - shift*I), and each of the k smallest
eigenvalues is bracketed by bisection.  Used both by the grid oracle and as
the root finder behind the Gaussian quadrature rules.
"""

from dataclasses import dataclass

import numpy as np
from numba import njit

__all__ = ["SymTriMatrix", "sturm_count", "eigenvalues_lowest"]


@dataclass(frozen=True)
class SymTriMatrix:
    """Real symmetric tridiagonal matrix (diagonal + one off-diagonal)."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float)
        e = np.asarray(self.offdiag, dtype=float)
        if d.ndim != 1 or e.ndim != 1 or d.size < 1 or e.size != d.size - 1:
            raise ValueError("need diag of length N >= 1 and offdiag of length N-1")
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def n(self):
        return self.diag.size


@njit(cache=True)
def _count_below(d, e2, shift, pivmin):
    # Negative pivots of LDL^T of (T - shift I); guard tiny pivots LAPACK-style.
    count = 0
    q = d[0] - shift
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        count += 1
    for i in range(1, d.shape[0]):
        q = d[i] - shift - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


@njit(cache=True)
def _bisect_smallest(d, e2, k, lo0, hi0, abs_tol, rel_tol, pivmin):
    out = np.empty(k)
    for j in range(k):
        lo = lo0
        hi = hi0
        for _ in range(250):
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            tol = max(abs_tol, rel_tol * abs(mid))
            if hi - lo <= tol:
                break
            if _count_below(d, e2, mid, pivmin) >= j + 1:
                hi = mid
            else:
                lo = mid
        out[j] = 0.5 * (lo + hi)
    return out


def _pivmin(e2):
    return 1e-290 * max(1.0, float(e2.max()) if e2.size else 1.0)


def sturm_count(matrix: SymTriMatrix, shift: float) -> int:
    """Number of eigenvalues strictly below ``shift``."""
    e2 = matrix.offdiag**2
    return int(_count_below(matrix.diag, e2, float(shift), _pivmin(e2)))


def eigenvalues_lowest(matrix: SymTriMatrix, k: int,
                       abs_tol: float = 1e-12, rel_tol: float = 1e-12) -> np.ndarray:
    """k smallest eigenvalues, ascending.

    Each eigenvalue is bisected until the bracket width drops below
    max(abs_tol, rel_tol*|lambda|) or the bracket is resolved to adjacent
    floats.
    """
    if not 1 <= k <= matrix.n:
        raise ValueError(f"k must be in 1..{matrix.n}, got {k}")
    d, e = matrix.diag, matrix.offdiag
    e2 = e**2
    r = np.zeros_like(d)
    if e.size:
        r[:-1] += np.abs(e)
        r[1:] += np.abs(e)
    lo = float(np.min(d - r))
    hi = float(np.max(d + r))
    span = max(hi - lo, 1.0)
    return _bisect_smallest(d, e2, k, lo - 1e-12 * span, hi + 1e-12 * span,
                            abs_tol, rel_tol, _pivmin(e2))
