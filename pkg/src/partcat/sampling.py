"""Deterministic exact samples: rational orthogonal and Gaussian-rational
unitary matrices via Cayley transforms, unit circle scalars, antidiagonal
block models, and exact unit vectors.

Every sample is a pure function of (kind, N, seed, index); the randomness
is a seeded PRNG over small rational parameters, so results are identical
across runs and platforms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import PartcatError
from .linalg import RAT, ExactMatrix, GaussianRational, inverse

SAMPLE_KINDS = ("orthogonal", "unitary", "circle_scalar",
                "antidiag_real_pair", "antidiag_complex_pair")


@dataclass(frozen=True)
class SampleSource:
    """A deterministic stream of exact samples."""

    kind: str
    N: int
    seed: int

    def __post_init__(self):
        if self.kind not in SAMPLE_KINDS:
            raise PartcatError(f"unknown sample kind {self.kind!r}")
        if self.N < 1:
            raise PartcatError("dimension must be >= 1")

    def rng(self, index: int) -> random.Random:
        return random.Random(f"{self.kind}:{self.N}:{self.seed}:{index}")


def _rand_rat(rng: random.Random) -> "RAT":
    num = rng.randint(-2, 2)
    den = rng.randint(1, 3)
    return RAT(num, den)


def _rand_gauss(rng: random.Random) -> GaussianRational:
    return GaussianRational(_rand_rat(rng), _rand_rat(rng))


def cayley_orthogonal(N: int, rng: random.Random,
                      det_sign: int = 1) -> ExactMatrix:
    """(I-A)(I+A)^{-1} for a random rational antisymmetric A, multiplied by
    a random +-1 diagonal whose determinant is forced to det_sign.

    The Cayley transform is always defined (an antisymmetric matrix has
    purely imaginary spectrum, so I+A is invertible over the rationals) and
    lands in SO_N; the reflection factor reaches the other component of O_N.
    """
    a = ExactMatrix.zeros(N, N)
    for i in range(N):
        for j in range(i + 1, N):
            q = _rand_rat(rng)
            a.data[i][j] = q
            a.data[j][i] = -q
    eye = ExactMatrix.identity(N)
    m = (eye - a) @ inverse(eye + a)
    signs = [rng.choice((1, -1)) for _ in range(N)]
    prod = 1
    for s in signs:
        prod *= s
    if prod != det_sign:
        signs[0] = -signs[0]
    return ExactMatrix([[signs[i] * m.data[i][j] for j in range(N)]
                        for i in range(N)])


def cayley_unitary(N: int, rng: random.Random) -> ExactMatrix:
    """(I-K)(I+K)^{-1} for a random Gaussian-rational skew-Hermitian K.

    Skew-Hermitian matrices have purely imaginary spectrum, so I+K is
    invertible and the result is exactly unitary.
    """
    k = ExactMatrix.zeros(N, N)
    for i in range(N):
        k.data[i][i] = GaussianRational(0, _rand_rat(rng))
        for j in range(i + 1, N):
            g = _rand_gauss(rng)
            k.data[i][j] = g
            k.data[j][i] = -g.conjugate()
    eye = ExactMatrix.identity(N)
    return (eye - k) @ inverse(eye + k)


def circle_scalar(rng: random.Random) -> GaussianRational:
    """A point on the unit circle: ((1-t^2) + 2t i)/(1+t^2), rational t."""
    t = RAT(rng.randint(-4, 4), rng.randint(1, 4))
    d = 1 + t * t
    return GaussianRational((1 - t * t) / d, 2 * t / d)


def antidiag_real_blocks(N: int, rng: random.Random) -> list[list[ExactMatrix]]:
    """N x N grid of self-adjoint antidiagonal 2x2 blocks [[0, v_ij],
    [conj v_ij, 0]] built from one sampled unitary v (half-classical real
    model)."""
    v = cayley_unitary(N, rng)
    grid = []
    for i in range(N):
        row = []
        for j in range(N):
            x = v.data[i][j]
            row.append(ExactMatrix([[0, x], [x.conjugate(), 0]]))
        grid.append(row)
    return grid


def antidiag_complex_blocks(N: int,
                            rng: random.Random) -> list[list[ExactMatrix]]:
    """N x N grid of antidiagonal 2x2 blocks [[0, a_ij], [b_ij, 0]] from two
    independent sampled unitaries (half-classical complex model)."""
    a = cayley_unitary(N, rng)
    b = cayley_unitary(N, rng)
    return [[ExactMatrix([[0, a.data[i][j]], [b.data[i][j], 0]])
             for j in range(N)] for i in range(N)]


def blocks_to_matrix(grid: list[list[ExactMatrix]]) -> ExactMatrix:
    """Assemble a grid of 2x2 blocks into one 2N x 2N matrix."""
    n = len(grid)
    out = ExactMatrix.zeros(2 * n, 2 * n)
    for i in range(n):
        for j in range(n):
            blk = grid[i][j]
            for a in range(2):
                for b in range(2):
                    out.data[2 * i + a][2 * j + b] = blk.data[a][b]
    return out


def sample(src: SampleSource, index: int = 0):
    """The index-th exact sample of the source.

    orthogonal/unitary: one N x N ExactMatrix (exactly orthogonal/unitary);
    circle_scalar: a 1x1 ExactMatrix holding a unit Gaussian rational;
    antidiag kinds: one 2N x 2N ExactMatrix assembled from the 2x2 blocks.
    Orthogonal samples alternate determinant sign with the index so that
    consecutive samples generate O_N rather than SO_N.
    """
    rng = src.rng(index)
    if src.kind == "orthogonal":
        return cayley_orthogonal(src.N, rng, det_sign=1 if index % 2 else -1)
    if src.kind == "unitary":
        return cayley_unitary(src.N, rng)
    if src.kind == "circle_scalar":
        return ExactMatrix([[circle_scalar(rng)]])
    if src.kind == "antidiag_real_pair":
        return blocks_to_matrix(antidiag_real_blocks(src.N, rng))
    if src.kind == "antidiag_complex_pair":
        return blocks_to_matrix(antidiag_complex_blocks(src.N, rng))
    raise PartcatError(f"unknown sample kind {src.kind!r}")


def antidiag_relations_report(kind: str, N: int, seed: int,
                              index: int = 0) -> dict:
    """Exact check of the defining relations on an antidiagonal sample.

    real kind: a b* = a* b for every pair of blocks (and each block is
    self-adjoint); complex kind: all products {a b*} commute pairwise and
    all products {a* b} commute pairwise.
    """
    src = SampleSource(kind, N, seed)
    rng = src.rng(index)
    if kind == "antidiag_real_pair":
        grid = antidiag_real_blocks(N, rng)
    elif kind == "antidiag_complex_pair":
        grid = antidiag_complex_blocks(N, rng)
    else:
        raise PartcatError(f"not an antidiagonal kind: {kind!r}")
    blocks = [grid[i][j] for i in range(N) for j in range(N)]
    adj = [b.conj_transpose() for b in blocks]
    report = {"kind": kind, "N": N, "seed": seed, "index": index}
    if kind == "antidiag_real_pair":
        report["self_adjoint"] = all(b == bs for b, bs in zip(blocks, adj))
        report["flip_relation"] = all(
            (a @ bs) == (ast @ b)
            for a, ast in zip(blocks, adj) for b, bs in zip(blocks, adj))
        report["ok"] = report["self_adjoint"] and report["flip_relation"]
        return report
    prods_ab_star = [a @ bs for a in blocks for bs in adj]
    prods_astar_b = [ast @ b for ast in adj for b in blocks]
    ok1 = all((x @ y) == (y @ x)
              for x in prods_ab_star for y in prods_ab_star)
    ok2 = all((x @ y) == (y @ x)
              for x in prods_astar_b for y in prods_astar_b)
    report["ab_star_commute"] = ok1
    report["a_star_b_commute"] = ok2
    report["ok"] = ok1 and ok2
    return report


def rational_unit_vector(N: int, rng: random.Random,
                         complex_: bool = False) -> list:
    """An exact unit vector: start at e_1 and apply rational plane rotations
    (and unit phases in the complex case), which preserve the norm exactly."""
    v: list = [RAT(1)] + [RAT(0)] * (N - 1)
    for _ in range(2 * N):
        i = rng.randrange(N)
        j = rng.randrange(N)
        if i == j:
            continue
        t = RAT(rng.randint(-3, 3), rng.randint(1, 3))
        d = 1 + t * t
        c, s = (1 - t * t) / d, 2 * t / d
        vi, vj = v[i], v[j]
        v[i] = c * vi - s * vj
        v[j] = s * vi + c * vj
    if complex_:
        v = [circle_scalar(rng) * x for x in v]
    return v
