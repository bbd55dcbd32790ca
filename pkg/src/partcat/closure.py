"""Category closures: generate all diagrams reachable from a generator set
under tensor, composition, involution and rotation, up to a point budget.

A closure is an honest truncation of an infinite object: saturated=True
means the fixpoint was reached inside the budget, and non-membership is
only ever reported as "not found within budget".

Categories that contain both single color-flip strands (the orthogonal-type
geometries) are color-blind: composing with flip strands toggles any leg
color, so membership does not depend on the coloring.  For those the engine
works with color-stripped diagrams, which shrinks the state space by a
factor 2^points; queries erase colors on the way in and colorings are
materialized on the way out.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .diagrams import (
    PartitionDiagram,
    WHITE,
    compose,
    enumerate_pairings,
    flip_strand,
    identity_strand,
    involute,
    matching_cap,
    matching_cup,
    pairings_of,
    rotate,
    tensor,
    unrotate,
)
from .errors import BudgetExceeded, NotSaturated

IMPLIED = "implied"
NOT_FOUND = "not-found-within-budget"


class _TargetReached(Exception):
    """Internal: the fixpoint produced exactly the supplied target set."""


@dataclass(frozen=True)
class ClosureBudget:
    """Bound on k+l per diagram and on fixpoint iterations."""

    max_points: int
    max_rounds: int = 1000

    def __post_init__(self):
        if self.max_points < 2:
            raise ValueError("max_points must be >= 2")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be >= 1")


@dataclass(frozen=True)
class RelationSpec:
    """A relation x_{i_1}..x_{i_n} = x_{i_sigma(1)}..x_{i_sigma(n)} with the
    left-hand color pattern `word`; sigma is 1-based."""

    word: str
    permutation: tuple[int, ...]

    def __post_init__(self):
        n = len(self.word)
        if sorted(self.permutation) != list(range(1, n + 1)):
            raise ValueError("permutation must be a bijection on 1..n")


def relation_to_diagram(r: RelationSpec) -> PartitionDiagram:
    """The two-row diagram of a relation: upper row carries the word, the
    lower row the permuted word, with strings u_t - l_{sigma(t)}."""
    n = len(r.word)
    lower = "".join(r.word[r.permutation[s] - 1] for s in range(n))
    blocks = [(t, n + r.permutation[t] - 1) for t in range(n)]
    return PartitionDiagram(r.word, lower, blocks)


def _strip(d: PartitionDiagram) -> PartitionDiagram:
    """Erase colors (legitimate inside categories containing both flips)."""
    return PartitionDiagram._new(WHITE * len(d.upper), WHITE * len(d.lower),
                                 d.blocks)


def base_diagrams(seed_matching_base: bool = True) -> list[PartitionDiagram]:
    """Identity strands, plus the matching cups and caps when seeded."""
    base = [identity_strand("w"), identity_strand("b")]
    if seed_matching_base:
        base += [matching_cup("w"), matching_cup("b"),
                 matching_cap("w"), matching_cap("b")]
    return base


class CategoryClosure:
    """The diagrams generated from a generator set within a budget.

    table maps (upper, lower) word pairs to sorted tuples of diagrams.  For
    color-blind closures the stored words are all-white; use diagrams() to
    query arbitrary colorings.
    """

    def __init__(self, generators: Sequence[PartitionDiagram],
                 budget: ClosureBudget, table: dict, saturated: bool,
                 color_blind: bool, seed_matching_base: bool = True):
        self.generators = tuple(sorted(set(generators)))
        self.budget = budget
        self.table = table
        self.saturated = saturated
        self.color_blind = color_blind
        self.seed_matching_base = seed_matching_base
        self._sets = {k: frozenset(v) for k, v in table.items()}

    def __len__(self) -> int:
        return sum(len(v) for v in self.table.values())

    def word_pairs(self) -> list[tuple[str, str]]:
        """The stored word pairs (all-white keys when color-blind)."""
        return sorted(self.table.keys())

    def contains(self, a: PartitionDiagram) -> bool:
        """Membership within budget.  When saturated is False a negative
        answer only means "not found within budget"."""
        if a.n_points > self.budget.max_points:
            raise BudgetExceeded(
                f"{a.n_points} points exceeds budget {self.budget.max_points}")
        if self.color_blind:
            a = _strip(a)
        s = self._sets.get((a.upper, a.lower))
        return s is not None and a in s

    def diagrams(self, upper: str, lower: str) -> tuple[PartitionDiagram, ...]:
        """All diagrams of the closure with the given colored words."""
        if len(upper) + len(lower) > self.budget.max_points:
            raise BudgetExceeded("word pair exceeds budget")
        if self.color_blind:
            key = (WHITE * len(upper), WHITE * len(lower))
            stripped = self.table.get(key, ())
            return tuple(PartitionDiagram._new(upper, lower, d.blocks)
                         for d in stripped)
        return self.table.get((upper, lower), ())

    def all_diagrams(self) -> Iterator[PartitionDiagram]:
        """Iterate the stored diagrams (stripped ones when color-blind)."""
        for key in sorted(self.table):
            yield from self.table[key]

    def to_json(self) -> dict:
        return {
            "generators": [str(g) for g in self.generators],
            "budget": {"max_points": self.budget.max_points,
                       "max_rounds": self.budget.max_rounds},
            "seed_matching_base": self.seed_matching_base,
            "color_blind": self.color_blind,
            "saturated": self.saturated,
            "table": {f"{u}|{l}": [str(d) for d in self.table[(u, l)]]
                      for (u, l) in sorted(self.table)},
        }

    def dump(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, obj: dict) -> "CategoryClosure":
        budget = ClosureBudget(obj["budget"]["max_points"],
                               obj["budget"]["max_rounds"])
        table: dict = {}
        for key, items in obj["table"].items():
            upper, lower = key.split("|", 1)
            table[(upper, lower)] = tuple(PartitionDiagram.parse(s)
                                          for s in items)
        return cls([PartitionDiagram.parse(s) for s in obj["generators"]],
                   budget, table, obj["saturated"], obj["color_blind"],
                   obj.get("seed_matching_base", True))


def close(generators: Iterable[PartitionDiagram], budget: ClosureBudget,
          seed_matching_base: bool = True,
          color_blind: bool | None = None,
          target: frozenset | set | None = None,
          compose_width: int | None = None) -> CategoryClosure:
    """Fixpoint of generators + base strands under the category operations,
    truncated to the budget.

    color_blind=None auto-detects: when both single flip strands are among
    the generators the closure contains every recoloring of each of its
    diagrams, and the engine runs color-stripped.

    target, when given, must be a diagram set the caller has independently
    verified to be closed under the four operations within budget and to
    contain the generators and base.  The closure is then contained in
    target, so the fixpoint may stop as soon as it has produced exactly
    target; if any diagram outside target ever appears, the shortcut is
    abandoned and the ordinary saturation run completes.

    compose_width (only honored together with target) restricts composition
    attempts to pairs where one side has at most that many points.  Every
    attempted operation is still a genuine category operation, so anything
    generated is in the closure; the restriction is merely a witness-search
    heuristic, and if it fails to produce the full target the unrestricted
    engine is rerun automatically.
    """
    generators = list(generators)
    for g in generators:
        if g.n_points > budget.max_points:
            raise BudgetExceeded(f"generator {g} exceeds budget")
    if color_blind is None:
        gen_set = set(generators)
        color_blind = flip_strand("w") in gen_set and flip_strand("b") in gen_set

    max_points = budget.max_points
    seeds = generators + base_diagrams(seed_matching_base)
    if color_blind:
        seeds = [_strip(d) for d in seeds]

    seen: set[PartitionDiagram] = set()
    all_list: list[PartitionDiagram] = []
    # tensor partners bucketed by point count; compose partners keyed by the
    # glued word.  Entries carry the insertion index so each unordered pair
    # is attempted exactly once (when the later of the two is processed).
    by_pts: list[list] = [[] for _ in range(max_points + 1)]
    by_upper: dict[str, list] = {}
    by_lower: dict[str, list] = {}
    queue: deque[int] = deque()

    target_set = frozenset(target) if (target is not None and not color_blind) \
        else None
    if target_set is None:
        compose_width = None
    state = {"hits": 0, "clean": True}

    def add(d: PartitionDiagram) -> None:
        if color_blind and ("b" in d.upper or "b" in d.lower):
            d = _strip(d)
        if d in seen:
            return
        seen.add(d)
        i = len(all_list)
        all_list.append(d)
        by_pts[d.n_points].append((i, d))
        by_upper.setdefault(d.upper, []).append((i, d, len(d.lower)))
        by_lower.setdefault(d.lower, []).append((i, d, len(d.upper)))
        queue.append(i)
        if target_set is not None:
            if d in target_set:
                state["hits"] += 1
                if state["clean"] and state["hits"] == len(target_set) \
                        and state["hits"] == len(seen):
                    raise _TargetReached  # seen == target, which is op-closed
            else:
                state["clean"] = False

    rounds = 0
    saturated = False
    try:
        for d in seeds:
            add(d)
        while queue:
            rounds += 1
            if rounds > budget.max_rounds:
                break
            for _ in range(len(queue)):
                i_d = queue.popleft()
                d = all_list[i_d]
                add(involute(d))
                if d.upper:
                    add(rotate(d))
                if d.lower:
                    add(unrotate(d))
                du, dl = len(d.upper), len(d.lower)
                d_pts = du + dl
                d_small = compose_width is None or d_pts <= compose_width
                for bucket in by_pts[:max_points - d_pts + 1]:
                    for (j, e) in bucket:
                        if j > i_d:
                            break
                        add(tensor(d, e))
                        if e is not d:
                            add(tensor(e, d))
                glue = len(d.lower)
                lst = by_upper.get(d.lower)
                if lst is not None:
                    for (j, e, e_low) in lst:
                        if j > i_d:
                            break
                        if du + e_low <= max_points and (
                                d_small or glue + e_low <= compose_width):
                            add(compose(d, e)[0])
                glue = len(d.upper)
                lst = by_lower.get(d.upper)
                if lst is not None:
                    for (j, e, e_up) in lst:
                        if j > i_d:
                            break
                        if e_up + dl <= max_points and e is not d and (
                                d_small or e_up + glue <= compose_width):
                            add(compose(e, d)[0])
        else:
            saturated = True
    except _TargetReached:
        saturated = True

    if target_set is not None and compose_width is not None \
            and seen != target_set:
        # witness-search heuristic fell short: rerun the full engine
        return close(generators, budget, seed_matching_base,
                     color_blind=color_blind, target=target_set)

    table: dict[tuple[str, str], list[PartitionDiagram]] = {}
    for d in all_list:
        table.setdefault((d.upper, d.lower), []).append(d)
    frozen = {k: tuple(sorted(v)) for k, v in table.items()}
    return CategoryClosure(generators, budget, frozen, saturated,
                           color_blind, seed_matching_base)


def contains(c: CategoryClosure, a: PartitionDiagram) -> bool:
    return c.contains(a)


def _colored_words(length: int) -> Iterator[str]:
    for bits in range(1 << length):
        yield "".join("wb"[(bits >> i) & 1] for i in range(length))


def equals_up_to(a: CategoryClosure, b: CategoryClosure,
                 budget: ClosureBudget) -> bool:
    """Whether two saturated closures agree on every word pair within budget."""
    if not (a.saturated and b.saturated):
        raise NotSaturated("equality test requires saturated closures")
    mp = min(budget.max_points, a.budget.max_points, b.budget.max_points)
    if a.color_blind == b.color_blind:
        keys = {k for k in set(a.table) | set(b.table)
                if len(k[0]) + len(k[1]) <= mp}
        return all(a._sets.get(k, frozenset()) == b._sets.get(k, frozenset())
                   for k in keys)
    for k in range(mp + 1):
        for l in range(mp + 1 - k):
            for u in _colored_words(k):
                for w in _colored_words(l):
                    if set(a.diagrams(u, w)) != set(b.diagrams(u, w)):
                        return False
    return True


def implication_check(hypotheses: Sequence[RelationSpec],
                      conclusion: RelationSpec,
                      budget: ClosureBudget) -> str:
    """Whether the conclusion's diagram lies in the category generated by
    the hypotheses' diagrams (with the matching base)."""
    gens = [relation_to_diagram(h) for h in hypotheses]
    c = close(gens, budget, seed_matching_base=True)
    target = relation_to_diagram(conclusion)
    return IMPLIED if c.contains(target) else NOT_FOUND


# -- the uniqueness scan ------------------------------------------------------


def _one_row_diagram(n: int, pairs) -> PartitionDiagram:
    return PartitionDiagram._new("", WHITE * n,
                                 tuple(sorted(tuple(sorted(p)) for p in pairs)))


def _dihedral_canonical(n: int, pairs) -> tuple:
    """Canonical form of a one-row pairing under cyclic shifts and the
    reflection; generating categories are invariant under both."""
    best = None
    flat = [tuple(p) for p in pairs]
    for refl in (False, True):
        pts = [(n - 1 - p, n - 1 - q) if refl else (p, q) for p, q in flat]
        for s in range(n):
            shifted = tuple(sorted(tuple(sorted(((p + s) % n, (q + s) % n)))
                                   for p, q in pts))
            if best is None or shifted < best:
                best = shifted
    return best


def crossing_pairing_representatives(max_points: int) -> list[dict]:
    """One-row crossing pairings up to rotation/reflection, with orbit sizes."""
    reps: dict[tuple, dict] = {}
    for n in range(4, max_points + 1, 2):
        for pairs in pairings_of(n):
            if all(not (p < r < q < s or r < p < s < q)
                   for i, (p, q) in enumerate(pairs)
                   for (r, s) in pairs[i + 1:]):
                continue  # noncrossing
            canon = _dihedral_canonical(n, pairs)
            entry = reps.setdefault(canon, {"n_points": n, "orbit_size": 0,
                                            "canonical": canon})
            entry["orbit_size"] += 1
    out = []
    for canon in sorted(reps):
        e = reps[canon]
        e["diagram"] = _one_row_diagram(e["n_points"], canon)
        out.append(e)
    return out


def intermediate_scan(budget: ClosureBudget) -> dict:
    """Classify <NC_2 + pi> for every crossing pairing pi within budget
    (colors erased).  Each closure is compared against the P2*- and
    P2-truncations; anything else is reported as OTHER."""
    if budget.max_points < 6:
        raise ValueError("scan needs a budget of at least 6 points")
    mp = budget.max_points

    p2_sets: dict[tuple[int, int], frozenset] = {}
    p2star_sets: dict[tuple[int, int], frozenset] = {}
    for k in range(mp + 1):
        for l in range(mp + 1 - k):
            if (k + l) % 2:
                continue
            words = (WHITE * k, WHITE * l)
            p2_sets[(k, l)] = frozenset(enumerate_pairings(*words, "P2"))
            p2star_sets[(k, l)] = frozenset(enumerate_pairings(*words, "P2star"))

    def classify(c: CategoryClosure) -> str:
        if not c.saturated:
            return "OTHER"
        got = {(len(u), len(l)): c._sets[(u, l)] for (u, l) in c.table}
        if all(got.get(kl, frozenset()) == s for kl, s in p2star_sets.items()):
            return "P2star"
        if all(got.get(kl, frozenset()) == s for kl, s in p2_sets.items()):
            return "P2"
        return "OTHER"

    entries = []
    counts = {"P2star": 0, "P2": 0, "OTHER": 0}
    for rep in crossing_pairing_representatives(mp):
        c = close([rep["diagram"]], budget, seed_matching_base=True,
                  color_blind=True)
        verdict = classify(c)
        counts[verdict] += rep["orbit_size"]
        entries.append({"pairing": str(rep["diagram"]),
                        "n_points": rep["n_points"],
                        "orbit_size": rep["orbit_size"],
                        "saturated": c.saturated,
                        "classification": verdict})
    return {"budget": mp, "entries": entries, "counts": counts,
            "total_crossing_pairings": sum(counts.values())}
