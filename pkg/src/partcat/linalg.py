"""Exact scalars and dense exact matrices.

Scalars are arbitrary-precision rationals (gmpy2.mpq when available, else
fractions.Fraction) and Gaussian rationals built on top of them.  Matrices
are plain row-major lists of lists; entries may be ints, rationals, or
GaussianRational and mix freely.  No floating point anywhere.
"""

from __future__ import annotations

from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as RAT

RAT_ZERO = RAT(0)
RAT_ONE = RAT(1)


def _fmt_rat(q) -> str:
    return str(q)


class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = RAT(re) if not isinstance(re, type(RAT_ZERO)) else re
        self.im = RAT(im) if not isinstance(im, type(RAT_ZERO)) else im

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, type(RAT_ZERO))):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, type(RAT_ZERO))):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, type(RAT_ZERO))):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, type(RAT_ZERO))):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            n = other.re * other.re + other.im * other.im
            if n == 0:
                raise ZeroDivisionError("division by zero GaussianRational")
            a, b, c, d = self.re, self.im, other.re, -other.im
            return GaussianRational((a * c - b * d) / n, (a * d + b * c) / n)
        if isinstance(other, (int, type(RAT_ZERO))):
            return GaussianRational(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, type(RAT_ZERO))):
            return GaussianRational(other) / self
        return NotImplemented

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self):
        return self.re * self.re + self.im * self.im

    # -- comparison / printing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(RAT_ZERO))):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __repr__(self) -> str:
        if self.im == 0:
            return _fmt_rat(self.re)
        if self.re == 0:
            return f"{_fmt_rat(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{_fmt_rat(self.re)}{sign}{_fmt_rat(abs(self.im))}i"

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        def to_rat(s: str):
            s = s.lstrip("+")
            if s in ("", "-"):
                s += "1"
            return RAT(s)

        text = text.strip()
        if text.endswith("i"):
            body = text[:-1]
            for cut in range(len(body) - 1, 0, -1):
                if body[cut] in "+-" and body[cut - 1] not in "+-/":
                    return cls(to_rat(body[:cut]), to_rat(body[cut:]))
            return cls(0, to_rat(body))
        return cls(to_rat(text), 0)


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def conj_scalar(x):
    """Complex conjugation; real scalar types are fixed."""
    return x.conjugate() if isinstance(x, GaussianRational) else x


class ExactMatrix:
    """A dense matrix over exact scalars (int / rational / GaussianRational)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.data)

    def __getitem__(self, rc):
        return self.data[rc[0]][rc[1]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        return all(a == b for ra, rb in zip(self.data, other.data)
                   for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a - b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.data, other.data)])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = list(zip(*other.data))
        out = []
        for row in self.data:
            out.append([sum(a * b for a, b in zip(row, col) if a and b)
                        for col in ot])
        return ExactMatrix(out)

    def scale(self, s) -> "ExactMatrix":
        return ExactMatrix([[s * a for a in row] for row in self.data])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.data)))

    def conj(self) -> "ExactMatrix":
        return ExactMatrix([[conj_scalar(a) for a in row] for row in self.data])

    def conj_transpose(self) -> "ExactMatrix":
        return ExactMatrix([[conj_scalar(a) for a in row]
                            for row in zip(*self.data)])

    def is_zero(self) -> bool:
        return all(not a for row in self.data for a in row)

    def vectorize(self) -> list:
        """Row-major flattening."""
        return [a for row in self.data for a in row]

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"

    def pretty(self) -> str:
        cells = [[str(a) for a in row] for row in self.data]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row)
                         for row in cells)


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    out = []
    for ra in a.data:
        for rb in b.data:
            row = []
            for x in ra:
                if x:
                    row.extend(x * y if y else 0 for y in rb)
                else:
                    row.extend([0] * len(rb))
            out.append(row)
    return ExactMatrix(out)


def _promote_rows(rows: Iterable[Iterable]) -> list[list]:
    """Copy rows, mapping ints to rationals so that division stays exact."""
    out = []
    for r in rows:
        out.append([RAT(x) if isinstance(x, int) else x for x in r])
    return out


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over an exact field.  Returns (rows, pivot
    column indices).  The input is not modified."""
    m = _promote_rows(rows)
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        if pv != 1:
            inv = 1 / pv if not isinstance(pv, GaussianRational) else GR_ONE / pv
            row_r = m[r]
            for j in range(c, n_cols):
                if row_r[j]:
                    row_r[j] = row_r[j] * inv
        row_r = m[r]
        for i in range(n_rows):
            if i != r and m[i][c]:
                f = m[i][c]
                row_i = m[i]
                for j in range(c, n_cols):
                    if row_r[j]:
                        row_i[j] = row_i[j] - f * row_r[j]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(mat: ExactMatrix | list) -> int:
    rows = mat.data if isinstance(mat, ExactMatrix) else mat
    if not rows or not rows[0]:
        return 0
    return len(rref(rows)[1])


def nullspace(mat: ExactMatrix | list) -> list[list]:
    """A basis of the right nullspace, as exact vectors (free variables set
    to 1 one at a time)."""
    rows = mat.data if isinstance(mat, ExactMatrix) else mat
    if not rows:
        return []
    n_cols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [RAT_ZERO] * n_cols
        v[fc] = RAT_ONE
        for r_idx, pc in enumerate(pivots):
            v[pc] = -red[r_idx][fc]
        basis.append(v)
    return basis


def inverse(mat: ExactMatrix) -> ExactMatrix:
    if mat.rows != mat.cols:
        raise ValueError("inverse of a non-square matrix")
    n = mat.rows
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(mat.data)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return ExactMatrix([row[n:] for row in red])
