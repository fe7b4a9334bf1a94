from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from conftest import from_sympy, gaussian_matrices, gaussians, nonzero_gaussians, seeded_matrix, sympy_matrix, to_sympy
from lgsegre.exact import (
    I_UNIT,
    ONE,
    ZERO,
    GaussianRational,
    SquareMatrix,
    UnivariatePolynomial,
    adjugate,
    characteristic_polynomial,
    cofactor,
    det,
    exp_nilpotent,
    inverse,
    kernel_basis,
    laplace_det,
    minimal_polynomial,
    parse_scalar,
    rank,
    rank_rows,
)

G = GaussianRational


# scalars


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", G(3)),
        ("-1/2", G(Fraction(-1, 2))),
        ("1/2+3/4 i", G(Fraction(1, 2), Fraction(3, 4))),
        ("1/2+-3/4 i", G(Fraction(1, 2), Fraction(-3, 4))),
        ("3/2 i", G(0, Fraction(3, 2))),
        ("i", I_UNIT),
        ("-i", -I_UNIT),
        ("2+i", G(2, 1)),
    ],
)
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["0.5", "1e3", "", "x", "1/2+", "1/0"])
def test_parse_scalar_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_scalar(text)


@given(gaussians)
def test_str_roundtrip(z):
    assert parse_scalar(str(z)) == z


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@given(nonzero_gaussians)
def test_inverse_and_norm(z):
    assert z * z.inverse() == ONE
    assert z * z.conjugate() == G(z.norm())


def test_sympy_agrees_on_arithmetic():
    a, b = G(Fraction(1, 3), -2), G(Fraction(-5, 7), Fraction(1, 2))
    assert from_sympy(to_sympy(a) * to_sympy(b)) == a * b
    assert from_sympy(to_sympy(a) / to_sympy(b)) == a / b


def test_equal_values_hash_equal():
    assert hash(G(Fraction(2, 4), 0)) == hash(G(Fraction(1, 2)))
    assert G(2) == 2 and G(Fraction(1, 2)) == Fraction(1, 2)


# determinants and adjugates


def test_identity_adjugate():
    adj, d = adjugate(SquareMatrix.identity(3))
    assert adj == SquareMatrix.identity(3) and d == ONE


def test_two_by_two_adjugate_by_hand():
    adj, d = adjugate(SquareMatrix([[1, 1], [0, 1]]))
    assert adj == SquareMatrix([[1, -1], [0, 1]])
    assert d == ONE


@pytest.mark.parametrize("dim", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("seed", range(4))
def test_det_and_adjugate_match_sympy(dim, seed):
    A = seeded_matrix((seed, dim), dim)
    S = sympy_matrix(A)
    assert det(A) == from_sympy(S.det())
    adj, d = adjugate(A)
    assert adj == SquareMatrix([[from_sympy(x) for x in row] for row in S.adjugate().tolist()])


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_singular_adjugate_matches_cofactors(dim):
    A = seeded_matrix((9, dim), dim)
    rows = [list(r) for r in A.rows]
    rows[-1] = [2 * x for x in rows[0]]
    A = SquareMatrix(rows)
    adj, d = adjugate(A)
    assert d == ZERO
    assert adj == SquareMatrix([[cofactor(A, j, i) for j in range(dim)] for i in range(dim)])
    assert (A @ adj).is_zero()


@settings(max_examples=40, deadline=None)
@given(gaussian_matrices(3))
def test_adjugate_identity_property(A):
    adj, d = adjugate(A)
    ident = SquareMatrix.identity(3)
    assert A @ adj == d * ident
    assert adj @ A == d * ident
    assert laplace_det(A.rows) == d


@settings(max_examples=30, deadline=None)
@given(gaussian_matrices(3), gaussian_matrices(3))
def test_det_multiplicative(A, B):
    assert det(A @ B) == det(A) * det(B)


def test_inverse_of_invertible():
    A = seeded_matrix(3, 4)
    assert A @ inverse(A) == SquareMatrix.identity(4)
    with pytest.raises(ZeroDivisionError):
        inverse(SquareMatrix.zeros(2))


# rank and kernels


def test_rank_examples():
    assert rank(SquareMatrix.zeros(3)) == 0
    assert rank(SquareMatrix.unit(3, 0, 0)) == 1
    assert rank_rows([[1, 2, 3], [2, 4, 6]]) == 1


def test_rank_of_shifted_orbit_point():
    from lgsegre.orbit import OrbitSpec, adjoint_point, sample_sl

    spec = OrbitSpec(2)
    for seed in range(5):
        A = adjoint_point(sample_sl(2, seed), spec)
        assert rank(A - 2 * SquareMatrix.identity(3)) == 2
        assert rank(A - 2 * SquareMatrix.identity(3)) == sympy_matrix(A - 2 * SquareMatrix.identity(3)).rank()


@pytest.mark.parametrize("seed", range(5))
def test_kernel_basis_against_sympy(seed):
    A = seeded_matrix(seed, 4)
    rows = [list(r) for r in A.rows]
    rows[2] = [a + b for a, b in zip(rows[0], rows[1])]
    ker = kernel_basis(rows)
    assert len(ker) == len(sympy.Matrix([[to_sympy(x) for x in r] for r in rows]).nullspace())
    for v in ker:
        assert not any(SquareMatrix(rows).apply(v))


# polynomials of matrices


def test_minimal_polynomial_examples():
    assert minimal_polynomial(SquareMatrix.diag([2, -1, -1])) == UnivariatePolynomial([-2, -1, 1])
    assert minimal_polynomial(SquareMatrix.identity(3)) == UnivariatePolynomial([-1, 1])
    assert minimal_polynomial(SquareMatrix.unit(2, 0, 1)) == UnivariatePolynomial([0, 0, 1])


@pytest.mark.parametrize("seed", range(4))
def test_characteristic_polynomial_against_sympy(seed):
    A = seeded_matrix(seed, 4)
    lam = sympy.Symbol("lam")
    expected = sympy.Poly(sympy_matrix(A).charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
    assert characteristic_polynomial(A) == UnivariatePolynomial([from_sympy(c) for c in expected])
    assert characteristic_polynomial(A)(A).is_zero()


def test_minimal_divides_characteristic():
    A = SquareMatrix.diag([3, 3, -1, -2])
    m = minimal_polynomial(A)
    assert m.degree == 3 and m(A).is_zero()


def test_exp_nilpotent():
    N = SquareMatrix([[0, 1, 2], [0, 0, 3], [0, 0, 0]])
    E = exp_nilpotent(N)
    assert E == SquareMatrix.identity(3) + N + (N @ N) / 2
    assert exp_nilpotent(-N) @ E == SquareMatrix.identity(3)
    with pytest.raises(ValueError):
        exp_nilpotent(SquareMatrix.identity(2))


def test_json_roundtrip():
    A = seeded_matrix(1, 3)
    assert SquareMatrix.from_json(A.to_json()) == A
