"""Discrete torus groups attached to categories.

A saturated closure induces relations g_{i_1}^{e_1}..g_{i_k}^{e_k} =
g_{j_1}^{n_1}..g_{j_l}^{n_l} on the free group F_N, one for every diagram
and every index assignment that its blocks allow (white legs carry
exponent +1, black legs -1).  Word problems are solved in two exact models:
the free product Z * Z^N (normal forms), and a group of 2x2 monomial
matrices over a free abelian group (the half-classical torus model).

"Trivial in a model" is conclusive only when the model map is injective;
reports always state which direction is sound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .closure import CategoryClosure
from .errors import NotSaturated

# a torus word is a sequence of (generator index 1..N, exponent +-1)
TorusWord = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GroupRelation:
    lhs: TorusWord
    rhs: TorusWord

    def __str__(self) -> str:
        return f"{word_str(self.lhs)} = {word_str(self.rhs)}"


def word_str(w: TorusWord) -> str:
    if not w:
        return "e"
    return " ".join(f"g{i}" if e == 1 else f"g{i}^-1" for i, e in w)


def free_reduce(w: Iterable[tuple[int, int]]) -> TorusWord:
    """Cancel adjacent g g^-1 pairs (free-group reduction)."""
    out: list[tuple[int, int]] = []
    for i, e in w:
        if out and out[-1][0] == i and out[-1][1] == -e:
            out.pop()
        else:
            out.append((i, e))
    return tuple(out)


def invert_word(w: TorusWord) -> TorusWord:
    return tuple((i, -e) for i, e in reversed(w))


# -- normal forms in Z * Z^N --------------------------------------------------


class FreeProductElement:
    """Normal form in Z * Z^N: alternating syllables ("z", k) with k != 0
    and ("h", v) with v a nonzero integer vector."""

    __slots__ = ("syllables",)

    def __init__(self, syllables: Sequence[tuple] = ()):
        self.syllables = tuple(syllables)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeProductElement) and \
            self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: "FreeProductElement") -> "FreeProductElement":
        return reduce_free_product(list(self.syllables) + list(other.syllables))

    def inverse(self) -> "FreeProductElement":
        out = []
        for kind, v in reversed(self.syllables):
            out.append((kind, -v if kind == "z" else tuple(-x for x in v)))
        return FreeProductElement(out)

    def __str__(self) -> str:
        if not self.syllables:
            return "e"
        parts = []
        for kind, v in self.syllables:
            if kind == "z":
                parts.append(f"z^{v}")
            else:
                parts.append("h(" + ",".join(str(x) for x in v) + ")")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FreeProductElement({self})"


def reduce_free_product(syllables: Iterable[tuple]) -> FreeProductElement:
    """Merge adjacent same-factor syllables and drop identity syllables,
    repeating to a fixpoint."""
    out: list[tuple] = []
    for kind, v in syllables:
        if kind == "h":
            v = tuple(v)
        while True:
            if (kind == "z" and v == 0) or (kind == "h" and not any(v)):
                break
            if out and out[-1][0] == kind:
                pk, pv = out.pop()
                v = pv + v if kind == "z" else tuple(a + b
                                                     for a, b in zip(pv, v))
                continue
            out.append((kind, v))
            break
    return FreeProductElement(out)


def z_syllable(k: int = 1) -> tuple:
    return ("z", k)


def h_syllable(i: int, N: int, exponent: int = 1) -> tuple:
    return ("h", tuple(exponent if j == i - 1 else 0 for j in range(N)))


def embed_zh(w: Iterable[tuple[int, int]], N: int) -> FreeProductElement:
    """The morphism g_i -> z h_i into Z * Z^N (so g_i^-1 -> h_i^-1 z^-1)."""
    syllables: list[tuple] = []
    for i, e in w:
        if e == 1:
            syllables.append(z_syllable(1))
            syllables.append(h_syllable(i, N, 1))
        else:
            syllables.append(h_syllable(i, N, -1))
            syllables.append(z_syllable(-1))
    return reduce_free_product(syllables)


def check_relation_in_image(r: GroupRelation, N: int) -> bool:
    return embed_zh(r.lhs, N) == embed_zh(r.rhs, N)


# -- monomial-matrix model ----------------------------------------------------


class MonomialElement:
    """2x2 monomial matrix over the free abelian group on s_1..s_N,
    t_1..t_N: either diag(A, mirror(A)) or antidiag(A, mirror(A)), where
    mirror swaps the s and t coordinates of the exponent vector A."""

    __slots__ = ("swap", "exponents")

    def __init__(self, swap: bool, exponents: Sequence[int]):
        self.swap = swap
        self.exponents = tuple(exponents)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialElement) and \
            self.swap == other.swap and self.exponents == other.exponents

    def __hash__(self):
        return hash((self.swap, self.exponents))

    def is_identity(self) -> bool:
        return not self.swap and not any(self.exponents)

    def mirror(self) -> tuple[int, ...]:
        n = len(self.exponents) // 2
        return self.exponents[n:] + self.exponents[:n]

    def __mul__(self, other: "MonomialElement") -> "MonomialElement":
        rhs = other.mirror() if self.swap else other.exponents
        return MonomialElement(self.swap != other.swap,
                               tuple(a + b for a, b in zip(self.exponents, rhs)))

    def inverse(self) -> "MonomialElement":
        if self.swap:
            # antidiag(A, mir A)^-1 = antidiag((mir A)^-1, A^-1)
            n = len(self.exponents) // 2
            mir = self.exponents[n:] + self.exponents[:n]
            return MonomialElement(True, tuple(-x for x in mir))
        return MonomialElement(False, tuple(-x for x in self.exponents))

    def __str__(self) -> str:
        if self.is_identity():
            return "e"
        n = len(self.exponents) // 2
        parts = []
        for idx, e in enumerate(self.exponents):
            if e:
                sym = f"s{idx + 1}" if idx < n else f"t{idx - n + 1}"
                parts.append(sym if e == 1 else f"{sym}^{e}")
        shape = "antidiag" if self.swap else "diag"
        return f"{shape}({'·'.join(parts) if parts else '1'})"

    def __repr__(self) -> str:
        return f"MonomialElement({self})"


def monomial_generator(i: int, N: int) -> MonomialElement:
    """g_i as the antidiagonal matrix with s_i above and t_i below."""
    expo = [0] * (2 * N)
    expo[i - 1] = 1
    return MonomialElement(True, expo)


def monomial_eval(w: Iterable[tuple[int, int]], N: int) -> MonomialElement:
    out = MonomialElement(False, (0,) * (2 * N))
    for i, e in w:
        g = monomial_generator(i, N)
        out = out * (g if e == 1 else g.inverse())
    return out


# -- relations from a closure -------------------------------------------------


def torus_relations(c: CategoryClosure, N: int,
                    include_trivial: bool = False) -> list[GroupRelation]:
    """All relations induced by the closure's diagrams on g_1..g_N.

    For every diagram and every index assignment constant on its blocks,
    the upper word (white -> g, black -> g^-1) is set equal to the lower
    word.  Relations are deduplicated by the free reduction of lhs rhs^-1;
    freely-trivial relations are dropped unless include_trivial.
    """
    if not c.saturated:
        raise NotSaturated("torus relations need a saturated closure")
    seen: set[TorusWord] = set()
    out: list[GroupRelation] = []
    for key in sorted(c.table):
        for d in c.table[key]:
            k = len(d.upper)
            n_blocks = len(d.blocks)
            block_of = [0] * d.n_points
            for b, blk in enumerate(d.blocks):
                for p in blk:
                    block_of[p] = b
            for assign in itertools.product(range(1, N + 1), repeat=n_blocks):
                lhs = tuple((assign[block_of[p]],
                             1 if d.upper[p] == "w" else -1)
                            for p in range(k))
                rhs = tuple((assign[block_of[k + p]],
                             1 if d.lower[p] == "w" else -1)
                            for p in range(len(d.lower)))
                canon = free_reduce(lhs + invert_word(rhs))
                if not canon and not include_trivial:
                    continue
                if canon in seen or invert_word(canon) in seen:
                    continue
                seen.add(canon)
                out.append(GroupRelation(lhs, rhs))
    return out


def relations_text(relations: Sequence[GroupRelation]) -> str:
    return "\n".join(str(r) for r in relations)


def relations_json(relations: Sequence[GroupRelation]) -> list:
    return [{"lhs": [list(t) for t in r.lhs],
             "rhs": [list(t) for t in r.rhs]} for r in relations]


# -- freeness witness and torus separation ------------------------------------


def freeness_witness(elements: Sequence[FreeProductElement],
                     max_len: int) -> dict:
    """Evaluate every reduced abstract word of length <= max_len in the
    given elements and their inverses; report the count checked and the
    first word (if any) that evaluates to the identity."""
    letters = []
    for idx, el in enumerate(elements):
        letters.append((idx + 1, el))
        letters.append((-(idx + 1), el.inverse()))
    count = 0
    failure = None

    def rec(prev: int, depth: int, value: FreeProductElement,
            word: tuple) -> bool:
        nonlocal count, failure
        for sym, el in letters:
            if prev == -sym:
                continue  # not reduced
            v = value * el
            w = word + (sym,)
            count += 1
            if v.is_identity():
                failure = w
                return False
            if depth + 1 < max_len and not rec(sym, depth + 1, v, w):
                return False
        return True

    ok = rec(0, 0, FreeProductElement(), ())
    return {"elements": [str(e) for e in elements], "max_len": max_len,
            "words_checked": count, "all_nontrivial": ok,
            "failure_word": list(failure) if failure else None}


def separate_tori(N: int) -> dict:
    """The word [g1 g2^-1, g1^-1 g2]: trivial in the monomial model of the
    half-classical torus, nontrivial in the z h_i image of the free-
    complexification torus group."""
    if N < 2:
        raise ValueError("need N >= 2")
    a: TorusWord = ((1, 1), (2, -1))
    b: TorusWord = ((1, -1), (2, 1))
    word = free_reduce(a + b + invert_word(a) + invert_word(b))
    mono = monomial_eval(word, N)
    zh = embed_zh(word, N)
    return {
        "N": N,
        "word": word_str(word),
        "monomial_value": str(mono),
        "monomial_trivial": mono.is_identity(),
        "zh_value": str(zh),
        "zh_trivial": zh.is_identity(),
        # soundness notes: nontrivial-in-model always proves nontrivial in
        # the group the model maps out of; trivial-in-model is conclusive
        # for the quotient only when the model is faithful
        "interpretation": {
            "monomial": "trivial in the monomial model of the half-classical"
                        " torus (model triviality, not a faithfulness claim)",
            "zh": "nontrivial normal form in Z * Z^N, so nontrivial in the"
                  " free-complexification torus group",
        },
    }
