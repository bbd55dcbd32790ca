"""Linear realization of diagrams and desk-scale Brauer verification.

A diagram pi with k upper and l lower points induces the 0/1 matrix T_pi of
size N^l x N^k whose (j, i) entry is 1 exactly when every block of pi is
constant on the combined index assignment (i on top, j on bottom).  This
module realizes those maps exactly, checks the functorial identities,
computes span ranks, solves exact intertwiner equations against sampled
group elements, and compares the two sides.

Equality verdicts are certified by a sandwich: span <= sampled space is
checked entry-exactly, and the sampled dimension is bounded above via
modular rank (a mod-p rank never exceeds the rational rank).  When the two
bounds meet, equality is exact; when they do not, a small exact elimination
decides, or the gap is reported as modular evidence only.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

import numpy as np

from .diagrams import PartitionDiagram, enumerate_pairings, involute, tensor, compose
from .errors import ColorMismatch, PartcatError, SizeOverflow
from .geometries import GeometrySpec
from .linalg import (
    ExactMatrix,
    GaussianRational,
    RAT,
    conj_scalar,
    nullspace,
    rank,
)
from .modp import (
    BadPrime,
    PRIMES,
    intertwiner_constraint_modp,
    matrix_modp,
    rank_modp,
)
from .sampling import (
    SampleSource,
    antidiag_complex_blocks,
    antidiag_real_blocks,
    cayley_orthogonal,
    cayley_unitary,
    circle_scalar,
)

DIM_CAP = int(os.environ.get("PARTCAT_DIM_CAP", "10000"))

VERDICT_EQUAL = "EQUAL"
VERDICT_SMALLER = "SPAN-STRICTLY-SMALLER"
VERDICT_SMALLER_MODULAR = "SPAN-STRICTLY-SMALLER-MODULAR"
VERDICT_NOT_CONTAINED = "SPAN-NOT-CONTAINED"


# -- delta and T_pi -----------------------------------------------------------


def delta(pi: PartitionDiagram, upper_index: tuple, lower_index: tuple) -> int:
    """1 if every block of pi joins equal indices, else 0 (indices 1..N)."""
    k = len(pi.upper)
    if len(upper_index) != k or len(lower_index) != len(pi.lower):
        raise ValueError("index tuples must match the word lengths")
    for blk in pi.blocks:
        first = blk[0]
        v = upper_index[first] if first < k else lower_index[first - k]
        for p in blk[1:]:
            w = upper_index[p] if p < k else lower_index[p - k]
            if w != v:
                return 0
    return 1


def _check_dims(pi: PartitionDiagram, N: int, cap: int | None = None) -> None:
    cap = DIM_CAP if cap is None else cap
    if N ** len(pi.upper) > cap or N ** len(pi.lower) > cap:
        raise SizeOverflow(
            f"N^k or N^l exceeds cap {cap} for {pi} at N={N}")


def t_nonzeros(pi: PartitionDiagram, N: int) -> list[tuple[int, int]]:
    """Sparse support of T_pi: (row, col) pairs, N^(number of blocks) many.

    Columns enumerate upper multi-indices lexicographically with the first
    letter most significant; rows enumerate lower multi-indices the same way.
    """
    k, l = len(pi.upper), len(pi.lower)
    block_of = [0] * (k + l)
    for b, blk in enumerate(pi.blocks):
        for p in blk:
            block_of[p] = b
    out = []
    for assign in itertools.product(range(N), repeat=len(pi.blocks)):
        col = 0
        for p in range(k):
            col = col * N + assign[block_of[p]]
        row = 0
        for p in range(k, k + l):
            row = row * N + assign[block_of[p]]
        out.append((row, col))
    return out


def t_matrix(pi: PartitionDiagram, N: int, cap: int | None = None) -> ExactMatrix:
    """The dense 0/1 matrix of T_pi (N^l x N^k)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    _check_dims(pi, N, cap)
    k, l = len(pi.upper), len(pi.lower)
    m = ExactMatrix.zeros(N ** l, N ** k)
    for row, col in t_nonzeros(pi, N):
        m.data[row][col] = 1
    return m


def verify_functor(pi: PartitionDiagram, sigma: PartitionDiagram,
                   N: int) -> bool:
    """Exact functorial identities on the pair (pi, sigma):

    - t(pi tensor sigma) = t(pi) (x) t(sigma);
    - t(sigma) . t(pi) = N^loops . t(compose(pi, sigma)) when composable;
    - t(involute(x)) = conjugate-transpose of t(x) for both arguments.
    """
    pi_nnz = t_nonzeros(pi, N)
    sg_nnz = t_nonzeros(sigma, N)

    # tensor identity, on sparse supports (all entries are 0 or 1: the
    # Kronecker product of 0/1 matrices has support = product of supports)
    k2, l2 = len(sigma.upper), len(sigma.lower)
    nk2, nl2 = N ** k2, N ** l2
    expected = {(r1 * nl2 + r2, c1 * nk2 + c2)
                for (r1, c1) in pi_nnz for (r2, c2) in sg_nnz}
    if set(t_nonzeros(tensor(pi, sigma), N)) != expected:
        return False

    # adjoint identity: T of the upside-down turn is the transpose (the
    # entries are 0/1, so conjugation is invisible)
    if {(c, r) for (r, c) in t_nonzeros(involute(pi), N)} != set(pi_nnz):
        return False
    if {(c, r) for (r, c) in t_nonzeros(involute(sigma), N)} != set(sg_nnz):
        return False

    # composition scaling law
    if pi.lower == sigma.upper:
        result, loops = compose(pi, sigma)
        by_mid: dict[int, list[int]] = {}
        for (m, i) in pi_nnz:
            by_mid.setdefault(m, []).append(i)
        product: dict[tuple[int, int], int] = {}
        for (j, m) in sg_nnz:
            cols = by_mid.get(m)
            if cols:
                for i in cols:
                    key = (j, i)
                    product[key] = product.get(key, 0) + 1
        factor = N ** loops
        expected_prod = {rc: factor for rc in t_nonzeros(result, N)}
        if product != expected_prod:
            return False
    return True


# -- span ranks ---------------------------------------------------------------


def _common_words(diagrams) -> tuple[str, str]:
    words = {(d.upper, d.lower) for d in diagrams}
    if len(words) != 1:
        raise ValueError("diagrams must share their upper and lower words")
    return next(iter(words))


def span_rank(diagrams, N: int, cap: int | None = None) -> int:
    """Rank of {vectorized T_pi} over the rationals, by exact elimination."""
    diagrams = list(diagrams)
    if not diagrams:
        return 0
    upper, lower = _common_words(diagrams)
    _check_dims(diagrams[0], N, cap)
    n = N ** (len(upper) + len(lower))
    rows = []
    for d in diagrams:
        nk = N ** len(d.upper)
        row = [0] * n
        for (r, c) in t_nonzeros(d, N):
            row[r * nk + c] = 1
        rows.append(row)
    return rank(rows)


def gram_matrix(diagrams, N: int) -> ExactMatrix:
    """The Gram matrix of the maps T_pi, computed combinatorially: the inner
    product <T_sigma, T_pi> counts joint index assignments, which is N to
    the number of blocks of the join of the two partitions."""
    diagrams = list(diagrams)
    _common_words(diagrams)
    n_pts = diagrams[0].n_points if diagrams else 0
    out = []
    for a in diagrams:
        row = []
        for b in diagrams:
            parent = list(range(n_pts))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for blk in itertools.chain(a.blocks, b.blocks):
                r = find(blk[0])
                for p in blk[1:]:
                    parent[find(p)] = r
            classes = len({find(x) for x in range(n_pts)})
            row.append(N ** classes)
        out.append(row)
    return ExactMatrix(out)


def span_rank_gram(diagrams, N: int) -> int:
    """Independent oracle for span_rank via the Gram matrix (the vectors are
    real 0/1, so the spanned dimension equals the Gram rank)."""
    diagrams = list(diagrams)
    if not diagrams:
        return 0
    return rank(gram_matrix(diagrams, N))


# -- exact representation samples --------------------------------------------


class RepSample:
    """A fundamental matrix with exact entries in a *-algebra.

    entries are scalars (rationals or Gaussian rationals) for the classical
    samplers, or 2x2 ExactMatrix blocks for the antidiagonal models; white
    legs use the entry, black legs its conjugate (adjoint for blocks).
    """

    __slots__ = ("N", "block", "key", "mats")

    def __init__(self, grid: list[list], block: bool, key: tuple):
        self.N = len(grid)
        self.block = block
        self.key = key
        if block:
            conj = [[e.conj_transpose() for e in row] for row in grid]
        else:
            conj = [[conj_scalar(e) for e in row] for row in grid]
        self.mats = {"w": grid, "b": conj}

    @property
    def real(self) -> bool:
        return self.mats["w"] == self.mats["b"]

    def one(self):
        return ExactMatrix.identity(2) if self.block else 1

    def zero(self):
        return ExactMatrix.zeros(2, 2) if self.block else 0

    def mul(self, x, y):
        return (x @ y) if self.block else (x * y)


def fundamental_sample(kind: str, N: int, seed: int, index: int) -> RepSample:
    """The index-th exact fundamental-matrix sample of a sampler kind."""
    key = (kind, N, seed, index)
    src = SampleSource("orthogonal" if kind == "circle_orthogonal" else kind,
                       N, seed)
    rng = src.rng(index)
    if kind == "orthogonal":
        m = cayley_orthogonal(N, rng, det_sign=1 if index % 2 else -1)
        return RepSample(m.data, False, key)
    if kind == "unitary":
        return RepSample(cayley_unitary(N, rng).data, False, key)
    if kind == "circle_orthogonal":
        z = circle_scalar(rng)
        m = cayley_orthogonal(N, rng, det_sign=1 if index % 2 else -1)
        grid = [[z * m.data[i][j] for j in range(N)] for i in range(N)]
        return RepSample(grid, False, key)
    if kind == "antidiag_real_pair":
        return RepSample(antidiag_real_blocks(N, rng), True, key)
    if kind == "antidiag_complex_pair":
        return RepSample(antidiag_complex_blocks(N, rng), True, key)
    raise PartcatError(f"unknown sampler kind {kind!r}")


def _index_tuples(length: int, N: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(N), repeat=length))


def rep_dense(rep: RepSample, word: str) -> list[list]:
    """The algebra-valued matrix of the tensor-word representation: entry
    [(i_1..i_k), (j_1..j_k)] is the ordered product of the letter entries."""
    cur = [[rep.one()]]
    mul = rep.mul
    for c in word:
        m = rep.mats[c]
        N = rep.N
        nxt = []
        for row in cur:
            for a in range(N):
                out_row = []
                for x in row:
                    mr = m[a]
                    out_row.extend(mul(x, mr[b]) for b in range(N))
                nxt.append(out_row)
        cur = nxt
    return cur


def intertwines_exactly(pi: PartitionDiagram, rep: RepSample) -> bool:
    """Whether T_pi rho_upper(u) = rho_lower(u) T_pi holds exactly for this
    sample, computing the products entry by entry (no big dense rep)."""
    N = rep.N
    k, l = len(pi.upper), len(pi.lower)
    nk, nl = N ** k, N ** l
    up = [rep.mats[c] for c in pi.upper]
    lo = [rep.mats[c] for c in pi.lower]
    idx_k = _index_tuples(k, N)
    idx_l = _index_tuples(l, N)
    nnz = t_nonzeros(pi, N)
    mul = rep.mul
    zero = rep.zero()
    one = rep.one()

    lhs = [[zero] * nk for _ in range(nl)]
    for (j, i) in nnz:
        di = idx_k[i]
        row = lhs[j]
        for ip in range(nk):
            dip = idx_k[ip]
            p = one
            for t in range(k):
                p = mul(p, up[t][di[t]][dip[t]])
            row[ip] = row[ip] + p
    rhs = [[zero] * nk for _ in range(nl)]
    for (j, i) in nnz:
        dj = idx_l[j]
        for jp in range(nl):
            djp = idx_l[jp]
            p = one
            for s in range(l):
                p = mul(p, lo[s][djp[s]][dj[s]])
            row = rhs[jp]
            row[i] = row[i] + p
    return lhs == rhs


# -- exact intertwiner spaces -------------------------------------------------


@dataclass
class HomSpace:
    """Exact solution space of T rho_k(u) = rho_l(u) T across samples."""

    upper: str
    lower: str
    N: int
    basis: list[ExactMatrix]
    dims_history: list[int] = field(default_factory=list)
    stabilized: bool = False
    samples_used: int = 0

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {"upper": self.upper, "lower": self.lower, "N": self.N,
                "dimension": self.dimension,
                "dims_history": self.dims_history,
                "stabilized": self.stabilized,
                "samples_used": self.samples_used}


def _constraint_rows_exact(rep: RepSample, upper: str, lower: str) -> list[list]:
    """Exact linear constraints on the row-major vectorized T."""
    N = rep.N
    nk, nl = N ** len(upper), N ** len(lower)
    a = rep_dense(rep, upper)
    b = rep_dense(rep, lower)
    n = nk * nl
    rows = []
    components = ((0, 0), (0, 1), (1, 0), (1, 1)) if rep.block else (None,)
    for j in range(nl):
        for ip in range(nk):
            for comp in components:
                row = [0] * n
                for i in range(nk):
                    x = a[i][ip]
                    v = x.data[comp[0]][comp[1]] if comp else x
                    if v:
                        row[j * nk + i] = row[j * nk + i] + v
                for jp in range(nl):
                    x = b[j][jp]
                    v = x.data[comp[0]][comp[1]] if comp else x
                    if v:
                        row[jp * nk + ip] = row[jp * nk + ip] - v
                rows.append(row)
    return rows


def sample_stream(kind: str, N: int, seeds) -> list[RepSample]:
    """One sample per seed; the position in the list also feeds the sampler
    (orthogonal samples alternate determinant sign by position)."""
    return [fundamental_sample(kind, N, s, i) for i, s in enumerate(seeds)]


def intertwiner_space(kind: str, upper: str, lower: str, N: int,
                      seeds, num_samples: int | None = None,
                      exact_cap: int = 400) -> HomSpace:
    """Intersect exact solution spaces sample by sample until the dimension
    is unchanged for two consecutive samples (or seeds are exhausted)."""
    if num_samples is None:
        num_samples = len(list(seeds))
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    n = N ** (len(upper) + len(lower))
    if n > exact_cap:
        raise SizeOverflow(
            f"{n} unknowns exceed exact cap {exact_cap}; "
            "use brauer_check for certified comparisons at this size")
    reps = sample_stream(kind, N, list(seeds)[:num_samples])
    rows: list[list] = []
    dims: list[int] = []
    used = 0
    stabilized = False
    for rep in reps:
        rows.extend(_constraint_rows_exact(rep, upper, lower))
        used += 1
        dims.append(n - (rank(rows) if rows else 0))
        if len(dims) >= 3 and dims[-1] == dims[-2] == dims[-3]:
            stabilized = True
            break
    basis_vecs = nullspace(rows) if rows else \
        [[RAT(int(i == j)) for j in range(n)] for i in range(n)]
    nk = N ** len(upper)
    basis = [ExactMatrix([v[r * nk:(r + 1) * nk]
                          for r in range(N ** len(lower))])
             for v in basis_vecs]
    return HomSpace(upper, lower, N, basis, dims, stabilized, used)


# -- certified Brauer comparison ---------------------------------------------


def _rep_modp_scalar(rep: RepSample, word: str, p: int) -> np.ndarray:
    grids = {c: matrix_modp(rep.mats[c], p) for c in set(word)}
    cur = np.array([[1]], dtype=np.int64)
    for c in word:
        cur = np.kron(cur, grids[c]) % p
    return cur


def _rep_modp_block(rep: RepSample, word: str, p: int) -> dict:
    """Component grids of the algebra-valued representation mod p."""
    comp = {}
    for c in set(word):
        g = rep.mats[c]
        comp[c] = [[matrix_modp([[g[i][j].data[a][b] for j in range(rep.N)]
                                 for i in range(rep.N)], p)
                    for b in range(2)] for a in range(2)]
    one = np.array([[1]], dtype=np.int64)
    zero = np.array([[0]], dtype=np.int64)
    cur = [[one, zero], [zero, one]]
    for c in word:
        m = comp[c]
        nxt = [[None, None], [None, None]]
        for a in range(2):
            for b in range(2):
                acc = None
                for g in range(2):
                    term = np.kron(cur[a][g], m[g][b]) % p
                    acc = term if acc is None else (acc + term) % p
                nxt[a][b] = acc
        cur = nxt
    return cur


def _constraints_modp(rep: RepSample, upper: str, lower: str,
                      p: int) -> np.ndarray:
    if not rep.block:
        a = _rep_modp_scalar(rep, upper, p)
        b = _rep_modp_scalar(rep, lower, p)
        return intertwiner_constraint_modp(a, b, p)
    a = _rep_modp_block(rep, upper, p)
    b = _rep_modp_block(rep, lower, p)
    blocks = []
    for i in range(2):
        for j in range(2):
            blocks.append(intertwiner_constraint_modp(a[i][j], b[i][j], p))
    return np.vstack(blocks) % p


def sampled_dim_upper_bound(reps, upper: str, lower: str, N: int) -> int:
    """A certified upper bound on the dimension of the sampled intertwiner
    space: n minus a mod-p rank of the stacked constraints."""
    n = N ** (len(upper) + len(lower))
    best = n
    for p in PRIMES:
        try:
            stacked = np.vstack([_constraints_modp(rep, upper, lower, p)
                                 for rep in reps])
        except BadPrime:
            continue
        best = min(best, n - rank_modp(stacked, p))
        break
    else:
        raise PartcatError("all primes failed (denominators)")
    # one extra prime guards against an unlucky reduction
    for p in PRIMES[1:]:
        if best == 0:
            break
        try:
            stacked = np.vstack([_constraints_modp(rep, upper, lower, p)
                                 for rep in reps])
            best = min(best, n - rank_modp(stacked, p))
        except BadPrime:
            continue
        break
    return best


def _word_pairs(budget: int, colored: bool):
    out = []
    for total in range(budget + 1):
        for k in range(total + 1):
            l = total - k
            if colored:
                for u in map("".join, itertools.product("wb", repeat=k)):
                    for w in map("".join, itertools.product("wb", repeat=l)):
                        out.append((u, w))
            else:
                out.append(("w" * k, "w" * l))
    return out


def brauer_check(g: GeometrySpec, N: int, budget: int, seeds,
                 category=None, exact_cap: int = 400) -> dict:
    """Compare span{T_pi : pi in the category} with the sampled intertwiner
    space, word pair by word pair.

    Verdicts: EQUAL is certified exactly (entrywise containment plus a
    matching modular dimension bound).  SPAN-NOT-CONTAINED carries an exact
    witness.  A dimension gap is decided by exact elimination when small
    enough, else reported as SPAN-STRICTLY-SMALLER-MODULAR (evidence, not
    proof).  For the antidiagonal model samplers containment is the hard
    assertion and any equality verdict is flagged experimental.
    """
    if g.sampler_kind is None:
        raise PartcatError(f"geometry {g.name} has no sampler")
    reps = sample_stream(g.sampler_kind, N, seeds)
    real = all(rep.real for rep in reps)
    experimental = g.sampler_kind.startswith("antidiag")
    pairs = []
    all_equal = True
    for upper, lower in _word_pairs(budget, colored=not real):
        if category is not None:
            diags = list(category.diagrams(upper, lower))
        elif g.class_predicate is not None:
            diags = enumerate_pairings(upper, lower, g.class_predicate)
        else:
            raise PartcatError("need a category closure or a predicate")
        dim_span = span_rank(diags, N) if diags else 0
        witness = None
        for d in diags:
            for rep in reps:
                if not intertwines_exactly(d, rep):
                    witness = (str(d), rep.key)
                    break
            if witness:
                break
        n = N ** (len(upper) + len(lower))
        entry = {"upper": upper, "lower": lower, "n_diagrams": len(diags),
                 "dim_span": dim_span}
        if witness is not None:
            entry["verdict"] = VERDICT_NOT_CONTAINED
            entry["witness"] = witness[0]
            entry["certified"] = True
            all_equal = False
        else:
            bound = sampled_dim_upper_bound(reps, upper, lower, N)
            entry["sampled_dim_upper_bound"] = bound
            if bound == dim_span:
                entry["verdict"] = VERDICT_EQUAL
                entry["certified"] = not experimental
                if experimental:
                    entry["experimental"] = True
            elif n <= exact_cap:
                rows = []
                for rep in reps:
                    rows.extend(_constraint_rows_exact(rep, upper, lower))
                exact_dim = n - (rank(rows) if rows else 0)
                entry["sampled_dim"] = exact_dim
                entry["verdict"] = (VERDICT_EQUAL if exact_dim == dim_span
                                    else VERDICT_SMALLER)
                entry["certified"] = True
                if exact_dim != dim_span:
                    all_equal = False
            else:
                entry["verdict"] = VERDICT_SMALLER_MODULAR
                entry["certified"] = False
                all_equal = False
        pairs.append(entry)
    return {"geometry": g.name, "N": N, "budget": budget,
            "seeds": list(seeds), "real_sampler_colors_collapse": real,
            "experimental_sampler": experimental,
            "pairs": pairs, "all_equal": all_equal}
