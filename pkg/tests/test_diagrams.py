import random

import pytest
from hypothesis import given, settings, strategies as st

from partcat.diagrams import (
    CLASS_NAMES,
    PartitionDiagram,
    class_table,
    compose,
    crossing,
    empty_diagram,
    enumerate_pairings,
    flatten,
    flip_pair,
    flip_strand,
    half_crossing,
    identity_diagram,
    identity_strand,
    invert_word,
    involute,
    is_in_class,
    make_diagram,
    matching_cap,
    matching_cup,
    rotate,
    tensor,
    unrotate,
)
from partcat.errors import (
    ColorMismatch,
    EmptyUpperRow,
    MalformedPartition,
    NotAPairing,
)

from conftest import random_diagram

X3 = half_crossing()


def diagrams_strategy(pairing=False, max_points=6):
    return st.integers(0, 10 ** 9).map(
        lambda s: random_diagram(random.Random(s), max_points, pairing))


# -- construction -------------------------------------------------------------


def test_make_diagram_identity():
    d = make_diagram("w", "w", [("u1", "l1")])
    assert d == identity_strand("w")
    assert str(d) == "w|w;u1-l1"


def test_make_diagram_half_classical_crossing():
    d = make_diagram("www", "www", [("u1", "l3"), ("u2", "l2"), ("u3", "l1")])
    assert d == X3


def test_make_diagram_duality_cap():
    d = make_diagram("wb", "", [("u1", "u2")])
    assert d == matching_cap("w")


@pytest.mark.parametrize("blocks", [
    [("u1", "l1"), ("u1",)],          # overlap
    [("u1",)],                        # misses l1
    [("u1", "l1"), ("l2",)],          # unknown point
    [("x1", "l1")],                   # bad name
])
def test_make_diagram_malformed(blocks):
    with pytest.raises(MalformedPartition):
        make_diagram("w", "w", blocks)


def test_word_validation():
    with pytest.raises(MalformedPartition):
        PartitionDiagram("wx", "", [(0, 1)])


# -- tensor -------------------------------------------------------------------


def test_tensor_identity_strands():
    d = tensor(identity_strand(), identity_strand())
    assert d == identity_diagram("ww")


def test_tensor_with_crossing():
    d = tensor(X3, identity_strand())
    assert d.upper == "wwww" and d.lower == "wwww"
    assert (3, 7) in d.blocks  # the extra strand stays vertical


def test_tensor_unit():
    d = random_diagram(random.Random(5))
    assert tensor(empty_diagram(), d) == d
    assert tensor(d, empty_diagram()) == d


@given(st.tuples(diagrams_strategy(), diagrams_strategy(),
                 diagrams_strategy()))
@settings(max_examples=60, deadline=None)
def test_tensor_associative(triple):
    a, b, c = triple
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))


# -- compose ------------------------------------------------------------------


def test_compose_cup_cap_loop():
    d, loops = compose(matching_cup("w"), matching_cap("w"))
    assert d == empty_diagram() and loops == 1


def test_compose_crossing_involution():
    d, loops = compose(X3, X3)
    assert d == identity_diagram("www") and loops == 0


def test_compose_identities():
    d, loops = compose(identity_strand(), identity_strand())
    assert d == identity_strand() and loops == 0


def test_compose_color_mismatch():
    with pytest.raises(ColorMismatch):
        compose(identity_strand("w"), identity_strand("b"))


def test_compose_associative_with_loop_addition():
    rng = random.Random(99)
    checked = 0
    while checked < 40:
        a = random_diagram(rng, 4)
        b = random_diagram(rng, 4)
        c = random_diagram(rng, 4)
        if a.lower != b.upper or b.lower != c.upper:
            continue
        ab, n_ab = compose(a, b)
        bc, n_bc = compose(b, c)
        left, n_left = compose(ab, c)
        right, n_right = compose(a, bc)
        assert left == right
        assert n_ab + n_left == n_bc + n_right
        checked += 1


# -- involute -----------------------------------------------------------------


def test_involute_cup_to_cap():
    assert involute(matching_cup("w")) == matching_cap("w")


def test_involute_identity():
    assert involute(identity_strand()) == identity_strand()


@given(diagrams_strategy())
@settings(max_examples=80, deadline=None)
def test_involute_is_involution(d):
    assert involute(involute(d)) == d
    assert involute(involute(d, True), True) == d


@given(st.tuples(diagrams_strategy(), diagrams_strategy()))
@settings(max_examples=60, deadline=None)
def test_involute_tensor_compatibility(pair):
    a, b = pair
    assert involute(tensor(a, b)) == tensor(involute(a), involute(b))


def test_involute_antihomomorphism_for_compose(rng):
    checked = 0
    while checked < 40:
        a = random_diagram(rng, 5)
        b = random_diagram(rng, 5)
        if a.lower != b.upper:
            continue
        ab, n = compose(a, b)
        ba, m = compose(involute(b), involute(a))
        assert involute(ab) == ba and n == m
        checked += 1


def test_involute_color_reversing_variant():
    d = flip_strand("w")  # w over b
    assert involute(d) == PartitionDiagram("b", "w", [(0, 1)])
    assert involute(d, reverse_colors=True) == PartitionDiagram(
        "w", "b", [(0, 1)])


# -- rotate / flatten ---------------------------------------------------------


def test_rotate_strand_to_cup():
    d = rotate(identity_strand("w"))
    assert d == PartitionDiagram("", "bw", [(0, 1)])


def test_rotate_requires_upper():
    with pytest.raises(EmptyUpperRow):
        rotate(matching_cup("w"))
    with pytest.raises(EmptyUpperRow):
        unrotate(matching_cap("w"))


@given(diagrams_strategy())
@settings(max_examples=80, deadline=None)
def test_rotate_unrotate_inverse(d):
    if d.upper:
        assert unrotate(rotate(d)) == d
    if d.lower:
        assert rotate(unrotate(d)) == d


def test_rotate_preserves_points():
    d = rotate(X3)
    assert (len(d.upper), len(d.lower)) == (2, 4)
    assert d.n_points == X3.n_points


def test_rotate_full_cycle():
    d = crossing("w", "b")
    out = d
    for _ in range(d.n_points):
        out = rotate(out) if out.upper else unrotate(out)
    # k rotations followed by k un-rotations come back
    out = flatten(d)
    for _ in range(len(d.upper)):
        out = unrotate(out)
    assert out == d


def test_flatten_identity_strand():
    assert flatten(identity_strand("w")) == PartitionDiagram("", "bw", [(0, 1)])


def test_flatten_half_classical_crossing():
    # hand-iterated: three rotations move u3,u2,u1 down with inverted colors
    expected = PartitionDiagram("", "bbbwww", [(0, 3), (1, 4), (2, 5)])
    assert flatten(X3) == expected


def test_flatten_fixes_one_row():
    d = PartitionDiagram("", "wbwb", [(0, 1), (2, 3)])
    assert flatten(d) == d


@given(diagrams_strategy(pairing=True))
@settings(max_examples=80, deadline=None)
def test_flatten_preserves_pairing_and_crossing(d):
    f = flatten(d)
    assert f.n_points == d.n_points
    assert f.is_pairing() == d.is_pairing()
    if d.is_pairing():
        assert is_in_class("NC2", f) == is_in_class("NC2", d)


# -- class predicates ---------------------------------------------------------


def test_class_x3():
    assert is_in_class("P2star", X3)
    assert not is_in_class("NC2", X3)


def test_class_matching_cup():
    assert is_in_class("calNC2", matching_cup("w"))


def test_class_interval_crossing():
    d = PartitionDiagram("", "wwww", [(0, 2), (1, 3)])
    assert is_in_class("P2", d)
    assert not is_in_class("NC2", d)
    assert not is_in_class("P2star", d)


def test_not_a_pairing():
    d = PartitionDiagram("w", "w", [(0,), (1,)])
    with pytest.raises(NotAPairing):
        is_in_class("P2", d)


def test_intersect_classes():
    assert is_in_class("NC2bar", flatten(flip_pair()))
    assert is_in_class("P2barstar", flatten(flip_pair()))


def test_class_predicates_color_blind_for_real_classes():
    rng = random.Random(3)
    for _ in range(200):
        d = random_diagram(rng, 6, pairing=True)
        recolored = PartitionDiagram("w" * len(d.upper), "w" * len(d.lower),
                                     d.blocks)
        for name in ("P2", "NC2", "P2star"):
            assert is_in_class(name, d) == is_in_class(name, recolored)


# -- enumeration --------------------------------------------------------------


def double_factorial(n: int) -> int:
    return 1 if n <= 1 else n * double_factorial(n - 2)


def catalan(n: int) -> int:
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


def test_enumerate_all_pairings():
    assert len(enumerate_pairings("", "wwwwww", "P2")) == double_factorial(5)


def test_enumerate_matching_noncrossing():
    assert len(enumerate_pairings("", "wbwbwb", "calNC2")) == catalan(3)


def test_enumerate_odd_is_empty():
    for name in CLASS_NAMES:
        assert enumerate_pairings("", "w", name) == []


def test_enumerate_deterministic_and_sorted():
    out = enumerate_pairings("wb", "wb", "P2")
    assert out == sorted(out)
    assert out == enumerate_pairings("wb", "wb", "P2")


def test_class_table_matches_enumerate():
    for name in CLASS_NAMES:
        table = class_table(name, 5)
        for (u, w), got in table.items():
            assert got == frozenset(enumerate_pairings(u, w, name))


# -- text and JSON forms ------------------------------------------------------


def test_parse_examples():
    d = PartitionDiagram.parse("www|www;u1-l3,u2-l2,u3-l1")
    assert d == X3
    assert PartitionDiagram.parse("|;") == empty_diagram()
    assert PartitionDiagram.parse("|wb;l1-l2") == matching_cup("w")


@given(diagrams_strategy())
@settings(max_examples=100, deadline=None)
def test_text_roundtrip(d):
    assert PartitionDiagram.parse(str(d)) == d


@given(diagrams_strategy())
@settings(max_examples=100, deadline=None)
def test_json_roundtrip(d):
    assert PartitionDiagram.from_json(d.to_json()) == d


def test_parse_rejects_garbage():
    with pytest.raises(MalformedPartition):
        PartitionDiagram.parse("not a diagram")
    with pytest.raises(MalformedPartition):
        PartitionDiagram.parse("w|w;q1-l1")


def test_invert_word():
    assert invert_word("wbbw") == "bwwb"
    assert invert_word("") == ""
