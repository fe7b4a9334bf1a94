from fractions import Fraction

import pytest

from lgsegre.exact import I_UNIT, ONE, ZERO, SquareMatrix, adjugate, det, minimal_polynomial
from lgsegre.liecore import GroupElement, LieElement, nilradical_basis
from lgsegre.orbit import (
    NonRegularError,
    OrbitSpec,
    TensorPoint,
    adjoint_point,
    chart_base,
    chart_membership,
    chart_param,
    complement_polynomial,
    factor_rank_one,
    make_rng,
    model_inverse,
    model_map,
    orbit_membership,
    random_scalar,
    sample_sl,
    tensor_point,
)


def test_spec_defaults_and_validation():
    spec = OrbitSpec(2)
    assert spec.H0 == SquareMatrix.diag([2, -1, -1])
    assert spec.lambdas == (2, 0, -2) and spec.is_regular and spec.is_minimal
    assert OrbitSpec(2, "3,-2,-1").lambdas == (3, -2, -1)
    assert OrbitSpec(1, ["1/2", "-1/2"]).lambdas == (Fraction(1, 2), Fraction(-1, 2))
    with pytest.raises(ValueError):
        OrbitSpec(2, [1, 1, 1])
    with pytest.raises(ValueError):
        OrbitSpec(2, [1, -1])
    with pytest.raises(ValueError):
        OrbitSpec(0)
    with pytest.raises(NonRegularError):
        OrbitSpec(2, [1, 1, -2]).require_regular()


def test_sampling_is_deterministic_and_unimodular():
    for n in (1, 2, 3, 4):
        g = sample_sl(n, 11)
        assert g == sample_sl(n, 11)
        assert det(g) == ONE
    assert sample_sl(2, 0) != sample_sl(2, 1)
    assert sample_sl(2, (3, 4), length=5) == sample_sl(2, (3, 4), length=5)


def test_random_scalar_stream():
    a = [random_scalar(make_rng((1, 2))) for _ in range(3)]
    b = [random_scalar(make_rng((1, 2))) for _ in range(3)]
    assert a == b


def test_adjoint_point_examples():
    spec = OrbitSpec(1, [1, -1])
    assert adjoint_point(GroupElement.identity(2), spec) == spec.H0
    assert adjoint_point(GroupElement([[1, 1], [0, 1]]), spec) == SquareMatrix([[1, -2], [0, -1]])
    spec2 = OrbitSpec(2)
    assert orbit_membership(adjoint_point(sample_sl(2, 0, 12), spec2), spec2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orbit_points_pass_membership(n):
    spec = OrbitSpec(n)
    for seed in range(25):
        A = adjoint_point(sample_sl(n, seed), spec)
        assert orbit_membership(A, spec)
        assert minimal_polynomial(A) == minimal_polynomial(spec.H0)


def test_membership_rejects():
    spec = OrbitSpec(2)
    assert orbit_membership(spec.H0, spec)
    assert not orbit_membership(SquareMatrix.zeros(3), spec)
    assert not orbit_membership(SquareMatrix.diag([2, 2, -4]), spec)
    assert not orbit_membership(SquareMatrix.identity(3), spec)


def test_membership_for_a_regular_orbit():
    spec = OrbitSpec(2, H0=[3, -1, -2])
    g = sample_sl(2, 5)
    assert orbit_membership(adjoint_point(g, spec), spec)
    assert orbit_membership(SquareMatrix.diag([-2, 3, -1]) + SquareMatrix.unit(3, 0, 2), spec)
    assert not orbit_membership(SquareMatrix.diag([2, -1, -1]), spec)
    assert not orbit_membership(SquareMatrix.diag([-3, 1, 2]), spec)


def test_tensor_point_examples():
    tp = tensor_point(GroupElement.identity(3))
    assert tp == TensorPoint.basis(3, 1)
    for seed in range(10):
        g = sample_sl(2, seed)
        tp = tensor_point(g)
        assert tp.matrix().trace() == ONE
        adj, _ = adjugate(g)
        # entrywise M_ij = a_i1 (adj g)_1j
        assert tp.matrix() == SquareMatrix([[g[i, 0] * adj[0, j] for j in range(3)] for i in range(3)])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_model_map_links_the_two_models(n):
    spec = OrbitSpec(n)
    assert model_map(TensorPoint.basis(n + 1, 1), n) == spec.H0
    for seed in range(20):
        g = sample_sl(n, seed)
        tp = tensor_point(g)
        A = model_map(tp, n)
        assert A == adjoint_point(g, spec)
        assert model_inverse(A, n) == tp.matrix()
        assert factor_rank_one(model_inverse(A, n)).matrix() == tp.matrix()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_equivariance(n):
    spec = OrbitSpec(n)
    for seed in range(20):
        g, h = sample_sl(n, (seed, 0)), sample_sl(n, (seed, 1))
        tp = tensor_point(h)
        adj, _ = adjugate(g)
        moved = TensorPoint(g.apply(tp.v), adj.transpose().apply(tp.eps))
        assert model_map(moved, n) == g @ model_map(tp, n) @ adj
        assert model_map(moved, n) == adjoint_point(g @ h, spec)


def test_model_map_requires_unit_pairing():
    with pytest.raises(ValueError):
        model_map(TensorPoint((1, 0), (0, 1)), 1)


def test_chart_param_examples():
    spec = OrbitSpec(1, [1, -1])
    z = SquareMatrix.zeros(2)
    assert chart_param(spec, 1, z, z) == spec.H0
    E, F = SquareMatrix.unit(2, 0, 1), SquareMatrix.unit(2, 1, 0)
    x = y = 1
    expected = (1 + 2 * x * y) * spec.H0 - 2 * x * E + (2 * y + 2 * x * y * y) * F
    assert chart_param(spec, 1, y * F, x * E) == expected
    with pytest.raises(ValueError):
        chart_param(spec, 1, E, z)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chart_outputs_lie_on_orbit(n):
    spec = OrbitSpec(n)
    dim = n + 1
    for seed in range(12):
        rng = make_rng((seed, n))
        j = 1 + seed % dim
        base = chart_base(spec, j)
        Y = sum((random_scalar(rng) * b for b in nilradical_basis(base, "-")), SquareMatrix.zeros(dim))
        X = sum((random_scalar(rng) * b for b in nilradical_basis(base, "+")), SquareMatrix.zeros(dim))
        A = chart_param(spec, j, Y, X)
        assert orbit_membership(A, spec)
        assert chart_membership(factor_rank_one(model_inverse(A, n)), j)


def test_chart_base_is_a_critical_tensor():
    spec = OrbitSpec(3)
    for j in range(1, 5):
        assert chart_base(spec, j) == model_map(TensorPoint.basis(4, j), 3)


def test_chart_membership_examples():
    e1 = TensorPoint.basis(3, 1)
    assert chart_membership(e1, 1)
    assert not chart_membership(e1, 2)
    for seed in range(20):
        tp = tensor_point(sample_sl(3, seed))
        assert any(chart_membership(tp, j) for j in range(1, 5))


def test_complement_polynomial_sees_isotropic_covectors():
    # eps = (1, i, 0) has eps_1^2 + eps_2^2 = 0, yet v_1 != 0
    tp = TensorPoint((1, 0, 0), (ONE, I_UNIT, ZERO))
    assert complement_polynomial(tp, 1) == 2
    assert chart_membership(tp, 1)
    assert complement_polynomial(tp, 2) == 0


def test_lie_element_result_types():
    spec = OrbitSpec(2)
    assert isinstance(adjoint_point(sample_sl(2, 1), spec), LieElement)
