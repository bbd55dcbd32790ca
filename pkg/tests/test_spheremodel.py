import pytest

from partcat.linalg import ExactMatrix, GaussianRational, RAT
from partcat.spheremodel import (
    ModelPoint,
    build_model,
    check_block_formulae,
    check_half_commutation,
    check_normalization,
    check_starstar_relations,
    model_point,
    model_report,
    noncommutativity_witness,
    rescale,
)

GR = GaussianRational


def basis_point():
    return ModelPoint((GR(1), GR(0)), (GR(0), GR(1)), 0)


def test_build_model_basis_vectors():
    x = build_model(basis_point())
    assert x[0] == ExactMatrix([[0, GR(1)], [GR(0), 0]])
    assert x[1] == ExactMatrix([[0, GR(0)], [GR(1), 0]])


def test_block_formula_example():
    p = basis_point()
    x = build_model(p)
    assert (x[0] @ x[0].conj_transpose()) == ExactMatrix([[1, 0], [0, 0]])
    assert check_block_formulae(x, p)


def test_equal_vectors_give_self_adjoint():
    u = (GR(1), GR(2))
    p = ModelPoint(u, u, 0)
    for m in build_model(p):
        assert m == m.conj_transpose()


def test_all_ones_cross_product():
    p = ModelPoint((GR(1), GR(1)), (GR(1), GR(1)), 0)
    x = build_model(p)
    assert (x[0] @ x[1].conj_transpose()) == ExactMatrix.identity(2)


def test_witness_on_basis_point():
    x = build_model(basis_point())
    assert noncommutativity_witness(x) == (1, 2)
    assert (x[0] @ x[1]) == ExactMatrix([[GR(1), 0], [0, GR(0)]])
    assert (x[1] @ x[0]) == ExactMatrix([[GR(0), 0], [0, GR(1)]])


def test_witness_absent_for_n1():
    p = model_point(1, 3)
    assert noncommutativity_witness(build_model(p)) is None


@pytest.mark.parametrize("seed", [1, 2, 3])
@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_seeded_checks(N, seed):
    p = model_point(N, seed)
    x = build_model(p)
    assert check_block_formulae(x, p)
    assert check_half_commutation(x)
    assert check_starstar_relations(x)


def test_homogeneity_under_rescaling():
    p = model_point(3, 5)
    for su, sv in [(RAT(3, 7), RAT(-2, 5)), (RAT(-1, 2), RAT(4))]:
        q = rescale(p, su, sv)
        x = build_model(q)
        assert check_block_formulae(x, q)
        assert check_half_commutation(x)
        assert check_starstar_relations(x)


def test_normalization_on_unit_points():
    for seed in (1, 2, 3):
        p = model_point(3, seed, normalized=True)
        assert check_normalization(build_model(p))


def test_normalization_fails_unnormalized():
    p = ModelPoint((GR(2), GR(0)), (GR(0), GR(3)), 0)
    assert not check_normalization(build_model(p))


def test_generic_matrices_fail_half_commutation():
    a = ExactMatrix([[1, 2], [3, 4]])
    b = ExactMatrix([[0, 1], [1, 1]])
    assert not check_half_commutation([a, b])
    assert not check_starstar_relations([a, b])


def test_report_shape():
    r = model_report(4, 9)
    assert r["block_formulae"] and r["half_commutation"]
    assert r["starstar_relations"] and r["normalization_on_unit_point"]
    assert r["noncommutativity_witness"] is not None


def test_zero_point_rejected():
    with pytest.raises(ValueError):
        ModelPoint((GR(0),), (GR(0),), 0)
