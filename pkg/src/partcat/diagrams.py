"""Two-colored partition diagrams and their categorical operations.

A diagram has an upper row of k colored points and a lower row of l colored
points, together with a set partition of the k+l points.  Internally points
are numbered 0..k-1 (upper, left to right) and k..k+l-1 (lower, left to
right); the text format uses the names u1..uk and l1..ll.

Everything here is immutable after construction and all operations are pure
functions, so values can be shared freely between threads.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence

from .errors import ColorMismatch, EmptyUpperRow, MalformedPartition, NotAPairing

WHITE = "w"
BLACK = "b"
COLORS = (WHITE, BLACK)

_INVERT = {WHITE: BLACK, BLACK: WHITE}
_INVERT_TABLE = str.maketrans("wb", "bw")


def invert_color(c: str) -> str:
    """The color involution: white <-> black."""
    return _INVERT[c]


def invert_word(word: str) -> str:
    """Invert every letter of a colored word."""
    return word.translate(_INVERT_TABLE)


def validate_word(word: str) -> str:
    if any(c not in _INVERT for c in word):
        raise MalformedPartition(f"invalid colored word {word!r}")
    return word


def canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Sort points within blocks and blocks by least point."""
    return tuple(sorted((tuple(sorted(b)) for b in blocks)))


class PartitionDiagram:
    """A two-row colored set partition, kept in canonical form.

    Equality and hashing are canonical-form equality, so diagrams can be
    used as set elements and dict keys.
    """

    __slots__ = ("upper", "lower", "blocks", "_hash")

    def __init__(self, upper: str, lower: str, blocks: Iterable[Iterable[int]]):
        self.upper = validate_word(upper)
        self.lower = validate_word(lower)
        self.blocks = canonical_blocks(blocks)
        self._hash = hash((self.upper, self.lower, self.blocks))
        n = len(upper) + len(lower)
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise MalformedPartition("empty block")
            for p in b:
                if not 0 <= p < n:
                    raise MalformedPartition(f"point {p} out of range for {n} points")
                if p in seen:
                    raise MalformedPartition(f"point {p} in two blocks")
                seen.add(p)
        if len(seen) != n:
            raise MalformedPartition("blocks do not cover all points")

    @classmethod
    def _new(cls, upper: str, lower: str,
             blocks: tuple[tuple[int, ...], ...]) -> "PartitionDiagram":
        """Trusted constructor: blocks must already be canonical and valid."""
        d = object.__new__(cls)
        d.upper = upper
        d.lower = lower
        d.blocks = blocks
        d._hash = hash((upper, lower, blocks))
        return d

    # -- basic attributes ------------------------------------------------

    @property
    def n_upper(self) -> int:
        return len(self.upper)

    @property
    def n_lower(self) -> int:
        return len(self.lower)

    @property
    def n_points(self) -> int:
        return len(self.upper) + len(self.lower)

    def is_pairing(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    # -- equality / ordering --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionDiagram):
            return NotImplemented
        return (self.upper == other.upper and self.lower == other.lower
                and self.blocks == other.blocks)

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return (self.upper, self.lower, self.blocks)

    def __lt__(self, other: "PartitionDiagram") -> bool:
        return self.sort_key() < other.sort_key()

    # -- text / JSON forms ------------------------------------------------

    def point_name(self, p: int) -> str:
        k = len(self.upper)
        return f"u{p + 1}" if p < k else f"l{p - k + 1}"

    def __str__(self) -> str:
        blocks = ",".join("-".join(self.point_name(p) for p in b)
                          for b in self.blocks)
        return f"{self.upper}|{self.lower};{blocks}"

    def __repr__(self) -> str:
        return f"PartitionDiagram({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "PartitionDiagram":
        """Parse the `UPPER|LOWER;BLOCKS` text format (round-trips with str)."""
        try:
            words, blocks_part = text.split(";", 1)
            upper, lower = words.split("|", 1)
        except ValueError:
            raise MalformedPartition(f"cannot parse diagram {text!r}") from None
        k = len(upper)
        blocks = []
        if blocks_part:
            for blk in blocks_part.split(","):
                points = []
                for name in blk.split("-"):
                    name = name.strip()
                    if len(name) < 2 or name[0] not in "ul" or not name[1:].isdigit():
                        raise MalformedPartition(f"bad point name {name!r}")
                    idx = int(name[1:]) - 1
                    points.append(idx if name[0] == "u" else k + idx)
                blocks.append(points)
        return cls(upper, lower, blocks)

    def to_json(self) -> dict:
        return {"upper": self.upper, "lower": self.lower,
                "blocks": [[self.point_name(p) for p in b] for b in self.blocks]}

    @classmethod
    def from_json(cls, obj: dict) -> "PartitionDiagram":
        upper = obj["upper"]
        k = len(upper)
        blocks = []
        for blk in obj["blocks"]:
            points = []
            for name in blk:
                idx = int(name[1:]) - 1
                points.append(idx if name[0] == "u" else k + idx)
            blocks.append(points)
        return cls(upper, obj["lower"], blocks)

    def json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def make_diagram(upper: str, lower: str,
                 blocks: Iterable[Iterable[str]]) -> PartitionDiagram:
    """Build a diagram from point names u1..uk, l1..ll.

    Raises MalformedPartition if blocks overlap, miss a point, or reference
    unknown points.
    """
    upper = validate_word(upper)
    lower = validate_word(lower)
    k, l = len(upper), len(lower)
    int_blocks = []
    for blk in blocks:
        points = []
        for name in blk:
            if not isinstance(name, str) or len(name) < 2 or not name[1:].isdigit():
                raise MalformedPartition(f"bad point name {name!r}")
            idx = int(name[1:]) - 1
            if name[0] == "u":
                if not 0 <= idx < k:
                    raise MalformedPartition(f"unknown upper point {name!r}")
                points.append(idx)
            elif name[0] == "l":
                if not 0 <= idx < l:
                    raise MalformedPartition(f"unknown lower point {name!r}")
                points.append(k + idx)
            else:
                raise MalformedPartition(f"bad point name {name!r}")
        int_blocks.append(points)
    return PartitionDiagram(upper, lower, int_blocks)


# -- categorical operations ----------------------------------------------


def tensor(a: PartitionDiagram, b: PartitionDiagram) -> PartitionDiagram:
    """Horizontal concatenation; b's points are renumbered after a's."""
    ka, la = len(a.upper), len(a.lower)
    kb, lb = len(b.upper), len(b.lower)
    # new layout: upper = a.upper + b.upper, lower = a.lower + b.lower
    blocks = [tuple(p if p < ka else p + kb for p in blk) for blk in a.blocks]
    for blk in b.blocks:
        blocks.append(tuple(p + ka if p < kb else p + ka + la for p in blk))
    return PartitionDiagram._new(a.upper + b.upper, a.lower + b.lower,
                                 tuple(sorted(blocks)))


def compose(top: PartitionDiagram,
            bottom: PartitionDiagram) -> tuple[PartitionDiagram, int]:
    """Vertical composition: glue top's lower row to bottom's upper row.

    Returns the composed diagram together with the number of closed loops
    (fused classes supported entirely on the glued middle points).
    """
    if top.lower != bottom.upper:
        raise ColorMismatch(
            f"cannot compose: {top.lower!r} glued to {bottom.upper!r}")
    a = len(top.upper)
    c = len(top.lower)
    b = len(bottom.lower)
    n = a + c + b
    # points 0..a-1: result upper; a..a+c-1: middle; a+c..n-1: result lower
    parent = list(range(n))
    for blk in top.blocks:  # top's points already sit at 0..a+c-1
        x = blk[0]
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        r = x
        for p in blk[1:]:
            x = p
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            parent[x] = r
    for blk in bottom.blocks:  # bottom's point p maps to a + p
        x = a + blk[0]
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        r = x
        for p in blk[1:]:
            x = a + p
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            parent[x] = r
    mid_end = a + c
    classes: dict[int, list[int]] = {}
    n_roots = 0
    for x in range(n):
        r = x
        while parent[r] != r:
            r = parent[r]
        parent[x] = r
        if r == x:
            n_roots += 1
        if x < a:
            classes.setdefault(r, []).append(x)
        elif x >= mid_end:
            classes.setdefault(r, []).append(x - c)
    # outer points were visited in increasing result order, so each class
    # list is already sorted
    loops = n_roots - len(classes)
    blocks = tuple(sorted(tuple(v) for v in classes.values()))
    return (PartitionDiagram._new(top.upper, bottom.lower, blocks), loops)


def involute(a: PartitionDiagram, reverse_colors: bool = False) -> PartitionDiagram:
    """Turn the diagram upside down (left-to-right order preserved).

    By default leg colors are preserved; reverse_colors=True additionally
    inverts every letter (the alternative reading of the upside-down turn).
    """
    k, l = len(a.upper), len(a.lower)
    blocks = tuple(sorted(
        tuple(sorted((p - k) if p >= k else (l + p) for p in blk))
        for blk in a.blocks))
    upper, lower = a.lower, a.upper
    if reverse_colors:
        upper, lower = invert_word(upper), invert_word(lower)
    return PartitionDiagram._new(upper, lower, blocks)


def rotate(a: PartitionDiagram) -> PartitionDiagram:
    """Move the leftmost upper leg to the leftmost lower position.

    The moved leg's color is inverted; blocks follow the point.
    """
    k = len(a.upper)
    if k == 0:
        raise EmptyUpperRow("rotate needs a nonempty upper row")
    # new indices: old upper p (p>=1) -> p-1; old u1 -> k-1; old lower p -> p
    blocks = tuple(sorted(
        tuple(sorted((k - 1) if p == 0 else (p - 1) if p < k else p
                     for p in blk))
        for blk in a.blocks))
    return PartitionDiagram._new(a.upper[1:],
                                 invert_color(a.upper[0]) + a.lower, blocks)


def unrotate(a: PartitionDiagram) -> PartitionDiagram:
    """Inverse of rotate: leftmost lower leg moves to the leftmost upper
    position, with its color inverted."""
    k, l = len(a.upper), len(a.lower)
    if l == 0:
        raise EmptyUpperRow("unrotate needs a nonempty lower row")
    # new indices: old lower point k -> 0; old upper p -> p+1; other lower p -> p
    blocks = tuple(sorted(
        tuple(sorted(0 if p == k else (p + 1) if p < k else p for p in blk))
        for blk in a.blocks))
    return PartitionDiagram._new(invert_color(a.lower[0]) + a.upper,
                                 a.lower[1:], blocks)


def flatten(a: PartitionDiagram) -> PartitionDiagram:
    """Rotate all upper legs down, producing a one-row diagram.

    The resulting lower word is the color-inverted reverse of the upper word
    followed by the original lower word.
    """
    word, pairs = flat_form(a)
    return PartitionDiagram._new("", word, pairs)


def flat_form(a: PartitionDiagram) -> tuple[str, tuple[tuple[int, ...], ...]]:
    """The flattened word and blocks of a diagram, computed directly.

    Upper point p lands at flat position k-1-p with inverted color; lower
    point p stays at flat position p.
    """
    k = len(a.upper)
    word = invert_word(a.upper[::-1]) + a.lower
    blocks = tuple(sorted(
        tuple(sorted((k - 1 - p) if p < k else p for p in blk))
        for blk in a.blocks))
    return word, blocks


# -- named classes of pairings ---------------------------------------------

CLASS_NAMES = ("P2", "NC2", "calP2", "calNC2", "P2star", "P2bar",
               "calP2starstar", "P2barstar", "NC2bar")


def _no_crossing(pairs: Sequence[tuple[int, ...]]) -> bool:
    for i, (p, q) in enumerate(pairs):
        for r, s in pairs[i + 1:]:
            if p < r < q < s or r < p < s < q:
                return False
    return True


def _matching(word: str, pairs: Sequence[tuple[int, ...]]) -> bool:
    return all(word[p] != word[q] for p, q in pairs)


def _even_enclosure(pairs: Sequence[tuple[int, ...]]) -> bool:
    # each string encloses an even number of points: leg distance is odd
    return all((q - p) % 2 == 1 for p, q in pairs)


def _balanced(word: str) -> bool:
    return 2 * word.count(WHITE) == len(word)


def is_in_class(name: str, a: PartitionDiagram) -> bool:
    """Membership of a pairing in one of the nine named classes.

    All predicates are evaluated on the flattened one-row form.
    """
    if name not in CLASS_NAMES:
        raise ValueError(f"unknown class name {name!r}")
    if not a.is_pairing():
        raise NotAPairing(f"{a} has a block of size != 2")
    word, pairs = flat_form(a)
    if name == "P2":
        return True
    if name == "NC2":
        return _no_crossing(pairs)
    if name == "calP2":
        return _matching(word, pairs)
    if name == "P2star":
        return _even_enclosure(pairs)
    if name == "P2bar":
        return _balanced(word)
    if name == "calNC2":
        return _matching(word, pairs) and _no_crossing(pairs)
    if name == "calP2starstar":
        return _matching(word, pairs) and _even_enclosure(pairs)
    if name == "P2barstar":
        return _balanced(word) and _even_enclosure(pairs)
    if name == "NC2bar":
        return _balanced(word) and _no_crossing(pairs)
    raise AssertionError(name)


def pairings_of(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect matchings of points 0..n-1 (empty iterator for odd n)."""
    if n % 2 == 1:
        return
    points = tuple(range(n))

    def rec(free: tuple[int, ...], acc: tuple) -> Iterator[tuple]:
        if not free:
            yield acc
            return
        first = free[0]
        for i in range(1, len(free)):
            pair = (first, free[i])
            rest = free[1:i] + free[i + 1:]
            yield from rec(rest, acc + (pair,))

    yield from rec(points, ())


def enumerate_pairings(upper: str, lower: str, name: str = "P2"
                       ) -> list[PartitionDiagram]:
    """All pairings on the given words satisfying the class predicate,
    in canonical order.  Empty if k+l is odd."""
    validate_word(upper)
    validate_word(lower)
    n = len(upper) + len(lower)
    out = []
    for pairs in pairings_of(n):
        d = PartitionDiagram._new(upper, lower, canonical_blocks(pairs))
        if is_in_class(name, d):
            out.append(d)
    out.sort()
    return out


_CLASS_NEEDS = {
    # (crossing-free, parity, matching, balanced-word)
    "P2": (False, False, False, False),
    "NC2": (True, False, False, False),
    "calP2": (False, False, True, False),
    "calNC2": (True, False, True, False),
    "P2star": (False, True, False, False),
    "P2bar": (False, False, False, True),
    "calP2starstar": (False, True, True, False),
    "P2barstar": (False, True, False, True),
    "NC2bar": (True, False, False, True),
}


def _all_words(length: int) -> list[str]:
    out = []
    for bits in range(1 << length):
        out.append("".join("wb"[(bits >> i) & 1] for i in range(length)))
    return out


def class_table(name: str, max_points: int,
                colored: bool = True) -> dict[tuple[str, str], frozenset]:
    """The full predicate set per word pair, for every word pair within the
    point budget.  Equivalent to calling enumerate_pairings everywhere but
    shares the color-independent work across colorings.

    With colored=False only the all-white words are produced (the predicate
    must then be color-blind to be meaningful).
    """
    nocross, parity, matching, balanced = _CLASS_NEEDS[name]
    out: dict[tuple[str, str], frozenset] = {}
    for n in range(0, max_points + 1):
        if n % 2 == 1:
            for k in range(n + 1):
                for u in (_all_words(k) if colored else [WHITE * k]):
                    for w in (_all_words(n - k) if colored else [WHITE * (n - k)]):
                        out[(u, w)] = frozenset()
            continue
        structures = [canonical_blocks(p) for p in pairings_of(n)]
        for k in range(n + 1):
            l = n - k
            survivors = []
            for blocks in structures:
                flat = tuple(tuple(sorted((k - 1 - p) if p < k else p
                                          for p in pr)) for pr in blocks)
                if nocross and not _no_crossing(flat):
                    continue
                if parity and not _even_enclosure(flat):
                    continue
                survivors.append((blocks, flat))
            for u in (_all_words(k) if colored else [WHITE * k]):
                ru = invert_word(u[::-1])
                for w in (_all_words(l) if colored else [WHITE * l]):
                    flatword = ru + w
                    if balanced and not _balanced(flatword):
                        out[(u, w)] = frozenset()
                        continue
                    if matching:
                        members = [PartitionDiagram._new(u, w, blocks)
                                   for blocks, flat in survivors
                                   if all(flatword[p] != flatword[q]
                                          for p, q in flat)]
                    else:
                        members = [PartitionDiagram._new(u, w, blocks)
                                   for blocks, _ in survivors]
                    out[(u, w)] = frozenset(members)
    return out


def set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of 0..n-1 (canonical block order)."""
    if n == 0:
        yield ()
        return

    def rec(p: int, blocks: list[list[int]]) -> Iterator[tuple]:
        if p == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(p)
            yield from rec(p + 1, blocks)
            b.pop()
        blocks.append([p])
        yield from rec(p + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


# -- standard small diagrams ------------------------------------------------


def identity_strand(color: str = WHITE) -> PartitionDiagram:
    return PartitionDiagram(color, color, [(0, 1)])


def identity_diagram(word: str) -> PartitionDiagram:
    k = len(word)
    return PartitionDiagram(word, word, [(i, k + i) for i in range(k)])


def flip_strand(color: str = WHITE) -> PartitionDiagram:
    """The color-flip strand |^c_{c'} identifying a coordinate with its
    conjugate (relation a = a*)."""
    return PartitionDiagram(color, invert_color(color), [(0, 1)])


def flip_pair() -> PartitionDiagram:
    """The two-strand diagram of the relation ab* = a*b (colors flipped on
    both strands, strings vertical)."""
    return PartitionDiagram("wb", "bw", [(0, 2), (1, 3)])


def matching_cup(first: str = WHITE) -> PartitionDiagram:
    """A lower-row arc with matching colors, e.g. cup_wb."""
    return PartitionDiagram("", first + invert_color(first), [(0, 1)])


def matching_cap(first: str = WHITE) -> PartitionDiagram:
    return PartitionDiagram(first + invert_color(first), "", [(0, 1)])


def crossing(c1: str = WHITE, c2: str = WHITE) -> PartitionDiagram:
    """The transposition diagram: u1-l2, u2-l1 (colors travel with strings)."""
    return PartitionDiagram(c1 + c2, c2 + c1, [(0, 3), (1, 2)])


def half_crossing(c1: str = WHITE, c2: str = WHITE,
                  c3: str = WHITE) -> PartitionDiagram:
    """The 3-string reversal diagram (relation abc = cba in colors c1c2c3)."""
    return PartitionDiagram(c1 + c2 + c3, c3 + c2 + c1,
                            [(0, 5), (1, 4), (2, 3)])


def empty_diagram() -> PartitionDiagram:
    return PartitionDiagram("", "", [])
