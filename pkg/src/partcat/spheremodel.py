"""The 2x2 antidiagonal sphere model: X_i = [[0, u_i], [v_i, 0]] for two
vectors u, v of exact Gaussian rationals.

All identities checked here (block product formulae, commutation of the
products X_i X_j* and X_i* X_j, the three-letter reversal relations, and
the unit-normalization identity on exactly normalized points) hold with
zero tolerance; the relations are multilinear, so unnormalized seeded
vectors witness them just as well as sphere points.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .linalg import ExactMatrix, GaussianRational
from .sampling import rational_unit_vector


@dataclass(frozen=True)
class ModelPoint:
    """Two exact coordinate vectors (generally unnormalized) and their seed."""

    u: tuple
    v: tuple
    seed: int

    def __post_init__(self):
        if not (any(x for x in self.u) or any(x for x in self.v)):
            raise ValueError("u and v must not both be zero")

    @property
    def N(self) -> int:
        return len(self.u)


def _seeded_gauss(rng: random.Random) -> GaussianRational:
    from .linalg import RAT
    return GaussianRational(RAT(rng.randint(-3, 3), rng.randint(1, 3)),
                            RAT(rng.randint(-3, 3), rng.randint(1, 3)))


def model_point(N: int, seed: int, normalized: bool = False) -> ModelPoint:
    """A seeded model point; normalized=True produces exact unit vectors
    (sum of |coordinate|^2 equal to 1) via rational rotations."""
    rng = random.Random(f"sphere-model:{N}:{seed}")
    if normalized:
        u = tuple(rational_unit_vector(N, rng, complex_=True))
        v = tuple(rational_unit_vector(N, rng, complex_=True))
        return ModelPoint(u, v, seed)
    while True:
        u = tuple(_seeded_gauss(rng) for _ in range(N))
        v = tuple(_seeded_gauss(rng) for _ in range(N))
        if any(x for x in u) or any(x for x in v):
            return ModelPoint(u, v, seed)


def build_model(p: ModelPoint) -> list[ExactMatrix]:
    """The blocks X_i = [[0, u_i], [v_i, 0]]."""
    return [ExactMatrix([[0, p.u[i]], [p.v[i], 0]]) for i in range(p.N)]


def _adjoint(x: ExactMatrix) -> ExactMatrix:
    return x.conj_transpose()


def check_block_formulae(x: list[ExactMatrix], p: ModelPoint) -> bool:
    """X_i X_j* = diag(u_i conj(u_j), v_i conj(v_j)) and X_j* X_i =
    diag(v_i conj(v_j), u_i conj(u_j)), exactly, for all i, j."""
    n = len(x)
    for i in range(n):
        for j in range(n):
            uu = p.u[i] * p.u[j].conjugate()
            vv = p.v[i] * p.v[j].conjugate()
            if x[i] @ _adjoint(x[j]) != ExactMatrix([[uu, 0], [0, vv]]):
                return False
            if _adjoint(x[j]) @ x[i] != ExactMatrix([[vv, 0], [0, uu]]):
                return False
    return True


def check_half_commutation(x: list[ExactMatrix]) -> bool:
    """All pairwise commutators among {X_i X_j*} and {X_i* X_j} vanish."""
    prods = [a @ _adjoint(b) for a in x for b in x]
    prods += [_adjoint(a) @ b for a in x for b in x]
    return all((f @ g) == (g @ f) for f in prods for g in prods)


def check_starstar_relations(x: list[ExactMatrix]) -> bool:
    """abc = cba exactly for all a, b, c among the X_i and their adjoints
    (all 8 adjoint patterns, all index triples)."""
    n = len(x)
    adj = [_adjoint(m) for m in x]
    for pattern in itertools.product((0, 1), repeat=3):
        pool = [adj if star else x for star in pattern]
        for i, j, k in itertools.product(range(n), repeat=3):
            a, b, c = pool[0][i], pool[1][j], pool[2][k]
            if (a @ b @ c) != (c @ b @ a):
                return False
    return True


def check_normalization(x: list[ExactMatrix]) -> bool:
    """Sum X_i X_i* = Sum X_i* X_i = identity (meaningful on normalized
    points)."""
    n = len(x)
    s1 = ExactMatrix.zeros(2, 2)
    s2 = ExactMatrix.zeros(2, 2)
    for i in range(n):
        s1 = s1 + x[i] @ _adjoint(x[i])
        s2 = s2 + _adjoint(x[i]) @ x[i]
    eye = ExactMatrix.identity(2)
    return s1 == eye and s2 == eye


def noncommutativity_witness(x: list[ExactMatrix]) -> tuple[int, int] | None:
    """Indices (1-based) with X_i X_j != X_j X_i, if any."""
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            if (x[i] @ x[j]) != (x[j] @ x[i]):
                return (i + 1, j + 1)
    return None


def rescale(p: ModelPoint, scale_u, scale_v) -> ModelPoint:
    return ModelPoint(tuple(scale_u * c for c in p.u),
                      tuple(scale_v * c for c in p.v), p.seed)


def model_report(N: int, seed: int) -> dict:
    """All checks on one seeded point (plus the normalization identity on
    the exactly-normalized variant of the same seed)."""
    p = model_point(N, seed)
    x = build_model(p)
    pn = model_point(N, seed, normalized=True)
    xn = build_model(pn)
    witness = noncommutativity_witness(x)
    return {
        "N": N, "seed": seed,
        "block_formulae": check_block_formulae(x, p),
        "half_commutation": check_half_commutation(x),
        "starstar_relations": check_starstar_relations(x),
        "normalization_on_unit_point": check_normalization(xn),
        "noncommutativity_witness": list(witness) if witness else None,
    }
