"""Modular-arithmetic rank bounds.

Reducing an exact rational matrix modulo a prime can only lower its rank,
so a mod-p rank gives a certified lower bound on the rational rank, hence a
certified upper bound on a solution-space dimension.  Combined with an
exact containment certificate this closes equality sandwiches without huge
exact eliminations.  Everything here is integer arithmetic.
"""

from __future__ import annotations

import numpy as np

from .linalg import GaussianRational

# primes = 1 mod 4, so that a square root of -1 exists and Gaussian
# rationals embed; small enough that p^2 fits comfortably in int64
PRIMES = (999999937, 998244353, 1004535809)

_SQRT_M1: dict[int, int] = {}


def sqrt_minus_one(p: int) -> int:
    """A square root of -1 mod p (p must be 1 mod 4)."""
    x = _SQRT_M1.get(p)
    if x is not None:
        return x
    if p % 4 != 1:
        raise ValueError("need p = 1 mod 4")
    for a in range(2, p):
        x = pow(a, (p - 1) // 4, p)
        if (x * x) % p == p - 1:
            _SQRT_M1[p] = x
            return x
    raise AssertionError("no sqrt(-1) found; p not prime?")


class BadPrime(Exception):
    """A denominator vanished mod p; retry with another prime."""


def _rat_modp(q, p: int) -> int:
    num, den = q.numerator, q.denominator
    d = int(den) % p
    if d == 0:
        raise BadPrime(f"denominator divisible by {p}")
    return (int(num) % p) * pow(d, p - 2, p) % p


def scalar_modp(x, p: int) -> int:
    if isinstance(x, int):
        return x % p
    if isinstance(x, GaussianRational):
        re = _rat_modp(x.re, p)
        if x.im == 0:
            return re
        return (re + _rat_modp(x.im, p) * sqrt_minus_one(p)) % p
    return _rat_modp(x, p)


def matrix_modp(rows, p: int) -> np.ndarray:
    """Reduce a matrix (ExactMatrix.data or list of lists) mod p."""
    return np.array([[scalar_modp(x, p) for x in row] for row in rows],
                    dtype=np.int64)


def rank_modp(mat: np.ndarray, p: int) -> int:
    """Gaussian elimination over GF(p); the input is not modified."""
    a = np.array(mat, dtype=np.int64, copy=True) % p
    n_rows, n_cols = a.shape
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        rows_below = a[r + 1:, c]
        nzb = np.nonzero(rows_below)[0]
        if nzb.size:
            idx = r + 1 + nzb
            factors = a[idx, c][:, None]
            a[idx, c:] = (a[idx, c:] - factors * a[r, c:][None, :]) % p
        r += 1
    return r


def kron_modp(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return np.kron(a, b) % p


def intertwiner_constraint_modp(a_rep: np.ndarray, b_rep: np.ndarray,
                                p: int) -> np.ndarray:
    """Coefficient matrix of T a_rep = b_rep T on the row-major vectorized
    unknown T (shape dim_l x dim_k): I (x) a^T - b (x) I."""
    dim_k = a_rep.shape[0]
    dim_l = b_rep.shape[0]
    first = kron_modp(np.eye(dim_l, dtype=np.int64), a_rep.T % p, p)
    second = kron_modp(b_rep % p, np.eye(dim_k, dtype=np.int64), p)
    return (first - second) % p
