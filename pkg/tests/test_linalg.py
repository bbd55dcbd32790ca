import pytest
from hypothesis import given, settings, strategies as st

from partcat.linalg import (
    ExactMatrix,
    GR_I,
    GR_ONE,
    GaussianRational,
    RAT,
    inverse,
    kron,
    nullspace,
    rank,
    rref,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12).map(
    lambda f: RAT(f.numerator, f.denominator))
gaussians = st.tuples(rationals, rationals).map(
    lambda t: GaussianRational(t[0], t[1]))


@given(gaussians, gaussians, gaussians)
@settings(max_examples=80, deadline=None)
def test_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a
    assert (a - b) + b == a
    if b:
        assert (a / b) * b == a


@given(gaussians, gaussians)
@settings(max_examples=80, deadline=None)
def test_conjugation(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a
    assert a * a.conjugate() == GaussianRational(a.norm_sq())


def test_i_squared():
    assert GR_I * GR_I == -GR_ONE
    assert GR_I.conjugate() == -GR_I


@given(gaussians)
@settings(max_examples=100, deadline=None)
def test_parse_roundtrip(a):
    assert GaussianRational.parse(repr(a)) == a


def test_int_interop():
    g = GaussianRational(RAT(1, 2), RAT(3))
    assert g + 1 == GaussianRational(RAT(3, 2), RAT(3))
    assert 2 * g == GaussianRational(1, 6)
    assert 1 - g == GaussianRational(RAT(1, 2), -RAT(3))
    assert g != 1
    assert GaussianRational(RAT(5)) == 5


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GR_ONE / GaussianRational(0)


def test_matrix_basics():
    m = ExactMatrix([[1, 2], [3, 4]])
    assert m @ ExactMatrix.identity(2) == m
    assert (m - m).is_zero()
    assert m.transpose().transpose() == m
    assert m.scale(RAT(1, 2)) == ExactMatrix([[RAT(1, 2), 1], [RAT(3, 2), 2]])


def test_conj_transpose():
    m = ExactMatrix([[GR_I, 1], [0, GaussianRational(2, -3)]])
    h = m.conj_transpose()
    assert h.data[0][0] == -GR_I
    assert h.data[1][0] == 1
    assert h.data[1][1] == GaussianRational(2, 3)


def test_inverse_and_rank():
    m = ExactMatrix([[2, 1], [7, 4]])
    assert m @ inverse(m) == ExactMatrix.identity(2)
    assert rank(m) == 2
    assert rank(ExactMatrix([[1, 2, 3], [2, 4, 6], [0, 0, 0]])) == 1
    with pytest.raises(ZeroDivisionError):
        inverse(ExactMatrix([[1, 2], [2, 4]]))


def test_rref_pivots():
    red, pivots = rref([[0, 1, 2], [0, 0, 0], [1, 0, 1]])
    assert pivots == [0, 1]
    assert red[0][0] == 1 and red[0][1] == 0


def test_nullspace_solves():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    basis = nullspace(rows)
    assert len(basis) == 1
    v = basis[0]
    for row in rows:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_nullspace_complex():
    rows = [[GR_ONE, GR_I]]
    (v,) = nullspace(rows)
    assert v[0] + GR_I * v[1] == 0


def test_kron_mixed_product():
    a = ExactMatrix([[1, 2], [0, 1]])
    b = ExactMatrix([[3], [5]])
    c = ExactMatrix([[1, 1], [1, 0]])
    d = ExactMatrix([[2, 0]])
    lhs = kron(a, b) @ kron(c, d)
    rhs = kron(a @ c, b @ d)
    assert lhs == rhs


def test_pretty_prints_fractions():
    m = ExactMatrix([[RAT(1, 3), GaussianRational(0, RAT(-2, 7))]])
    assert "1/3" in m.pretty() and "-2/7i" in m.pretty()
