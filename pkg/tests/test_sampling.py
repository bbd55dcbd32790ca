import random

import pytest

from partcat.errors import PartcatError
from partcat.linalg import ExactMatrix, GaussianRational, inverse
from partcat.sampling import (
    SampleSource,
    antidiag_relations_report,
    cayley_orthogonal,
    cayley_unitary,
    circle_scalar,
    rational_unit_vector,
    sample,
)


@pytest.mark.parametrize("N", [1, 2, 3, 4])
@pytest.mark.parametrize("seed", [1, 2, 17])
def test_orthogonal_exact(N, seed):
    m = sample(SampleSource("orthogonal", N, seed), 0)
    assert m @ m.transpose() == ExactMatrix.identity(N)
    assert m.transpose() @ m == ExactMatrix.identity(N)


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("seed", [1, 5])
def test_unitary_exact(N, seed):
    u = sample(SampleSource("unitary", N, seed), 0)
    assert u @ u.conj_transpose() == ExactMatrix.identity(N)
    # the entrywise conjugate agrees with the transpose-inverse
    assert u.conj() == inverse(u.transpose())


def test_determinism():
    a = sample(SampleSource("unitary", 3, 9), 4)
    b = sample(SampleSource("unitary", 3, 9), 4)
    c = sample(SampleSource("unitary", 3, 10), 4)
    assert a == b
    assert a != c


def _det(m: ExactMatrix):
    n = m.rows
    if n == 1:
        return m.data[0][0]
    total = 0
    for j in range(n):
        minor = ExactMatrix([row[:j] + row[j + 1:] for row in m.data[1:]])
        term = m.data[0][j] * _det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def test_orthogonal_determinant_alternates():
    src = SampleSource("orthogonal", 3, 12)
    assert _det(sample(src, 0)) == -1
    assert _det(sample(src, 1)) == 1
    assert _det(sample(src, 2)) == -1


def test_circle_scalar_unit():
    for seed in (1, 7, 23):
        z = sample(SampleSource("circle_scalar", 1, seed), 0).data[0][0]
        assert z * z.conjugate() == 1


@pytest.mark.parametrize("kind", ["antidiag_real_pair",
                                  "antidiag_complex_pair"])
def test_antidiag_unitary(kind):
    m = sample(SampleSource(kind, 2, 3), 0)
    assert m.rows == 4
    assert m @ m.conj_transpose() == ExactMatrix.identity(4)


def test_antidiag_relations_real():
    for seed in (1, 2, 3):
        rep = antidiag_relations_report("antidiag_real_pair", 2, seed)
        assert rep["ok"] and rep["self_adjoint"] and rep["flip_relation"]


def test_antidiag_relations_complex():
    for seed in (1, 2):
        rep = antidiag_relations_report("antidiag_complex_pair", 2, seed)
        assert rep["ok"] and rep["ab_star_commute"] and rep["a_star_b_commute"]


def test_antidiag_relations_kind_guard():
    with pytest.raises(PartcatError):
        antidiag_relations_report("orthogonal", 2, 1)


def test_unknown_kind():
    with pytest.raises(PartcatError):
        SampleSource("haar", 2, 1)


def test_unit_vectors():
    rng = random.Random("unit")
    for N in (1, 2, 5):
        v = rational_unit_vector(N, rng)
        assert sum(x * x for x in v) == 1
        w = rational_unit_vector(N, rng, complex_=True)
        total = sum((x * x.conjugate() for x in w), GaussianRational(0))
        assert total == 1


def test_cayley_helpers_deterministic():
    a = cayley_orthogonal(3, random.Random("s"), det_sign=1)
    b = cayley_orthogonal(3, random.Random("s"), det_sign=1)
    assert a == b
    u = cayley_unitary(2, random.Random("t"))
    v = cayley_unitary(2, random.Random("t"))
    assert u == v
    z = circle_scalar(random.Random("z"))
    assert z * z.conjugate() == 1
