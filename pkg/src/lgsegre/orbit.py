"""The minimal adjoint orbit in its matrix and rank-one tensor models.

Matrix model: Ad(g) H0 with H0 = diag(n, -1, ..., -1) in sl(n+1).
Tensor model: g.(e1 x eps1) = v x eps with v the first column of g and eps
the first row of adj(g).  The two are related by A = (n+1) v x eps - Id.

Chart indices j run over 1..n+1 and label the critical points e_j x eps_j;
matrix indices are 0-based everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import (
    ONE,
    ZERO,
    GaussianRational,
    SquareMatrix,
    adjugate,
    as_scalar,
    characteristic_polynomial,
    UnivariatePolynomial,
)
from .liecore import (
    GroupElement,
    LieElement,
    WeylElement,
    exp_ad_nilpotent,
    nilradical_basis,
)

__all__ = [
    "NonRegularError",
    "OrbitSpec",
    "TensorPoint",
    "adjoint_point",
    "chart_membership",
    "chart_param",
    "complement_polynomial",
    "factor_rank_one",
    "make_rng",
    "model_inverse",
    "model_map",
    "orbit_membership",
    "random_scalar",
    "sample_sl",
    "tensor_point",
]


class NonRegularError(ValueError):
    """The potential H has a repeated eigenvalue where regularity is required."""


def _parse_h(values) -> tuple:
    if isinstance(values, str):
        values = [v for v in values.split(",") if v.strip()]
    return tuple(as_scalar(v.strip() if isinstance(v, str) else v) for v in values)


@dataclass(frozen=True)
class OrbitSpec:
    """One LG model instance: the orbit of H0 in sl(n+1) with potential H.

    H0 defaults to diag(n, -1, ..., -1).  H must be diagonal and trace-zero;
    regularity is checked by the operations that need it.
    """

    n: int
    H: LieElement
    H0: LieElement

    def __init__(self, n: int, H=None, H0=None):
        if not isinstance(n, int) or n < 1:
            raise ValueError("n must be a positive integer")
        dim = n + 1
        if H is None:
            H = [n - 2 * k for k in range(dim)]  # n, n-2, ..., -n: regular, trace zero
        if not isinstance(H, SquareMatrix):
            vals = _parse_h(H)
            if len(vals) != dim:
                raise ValueError(f"H needs {dim} entries, got {len(vals)}")
            H = SquareMatrix.diag(vals)
        if H.dim != dim or not H.is_diagonal():
            raise ValueError("H must be a diagonal matrix of size n+1")
        if H.trace():
            raise ValueError(f"H must be trace-zero, trace is {H.trace()}")
        if H0 is None:
            H0 = SquareMatrix.diag([n] + [-1] * n)
        elif not isinstance(H0, SquareMatrix):
            H0 = SquareMatrix.diag(_parse_h(H0))
        if H0.dim != dim or not H0.is_diagonal() or H0.trace():
            raise ValueError("H0 must be diagonal, trace-zero, of size n+1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "H", LieElement(H))
        object.__setattr__(self, "H0", LieElement(H0))

    @property
    def dim(self) -> int:
        return self.n + 1

    @property
    def lambdas(self) -> tuple:
        return self.H.diagonal()

    @property
    def is_regular(self) -> bool:
        lam = self.lambdas
        return len(set(lam)) == len(lam)

    @property
    def is_minimal(self) -> bool:
        return self.H0 == SquareMatrix.diag([self.n] + [-1] * self.n)

    def require_regular(self) -> None:
        if not self.is_regular:
            raise NonRegularError(f"H = diag({', '.join(map(str, self.lambdas))}) is not regular")

    def require_minimal(self) -> None:
        if not self.is_minimal:
            raise ValueError("this operation needs the minimal orbit H0 = diag(n, -1, ..., -1)")


@dataclass(frozen=True)
class TensorPoint:
    """A decomposable tensor v x eps; on the orbit exactly when eps(v) = 1."""

    v: tuple
    eps: tuple

    def __post_init__(self):
        v = tuple(as_scalar(x) for x in self.v)
        eps = tuple(as_scalar(x) for x in self.eps)
        if len(v) != len(eps):
            raise ValueError("v and eps must have equal length")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "eps", eps)

    @classmethod
    def basis(cls, dim: int, j: int) -> "TensorPoint":
        """e_j x eps_j for a 1-based index j."""
        e = tuple(ONE if k == j - 1 else ZERO for k in range(dim))
        return cls(e, e)

    def pairing(self) -> GaussianRational:
        s = ZERO
        for a, b in zip(self.v, self.eps):
            s = s + a * b
        return s

    def matrix(self) -> SquareMatrix:
        return SquareMatrix.outer(self.v, self.eps)


# ---------------------------------------------------------------------------
# sampling


def make_rng(seed) -> np.random.Generator:
    """PCG64 stream for an int seed or a tuple such as (seed, sample_index)."""
    if isinstance(seed, (tuple, list)):
        return np.random.default_rng(np.random.SeedSequence([int(s) for s in seed]))
    return np.random.default_rng(np.random.SeedSequence(int(seed)))


def random_scalar(rng: np.random.Generator, num: int = 3, den: int = 3, nonzero: bool = False) -> GaussianRational:
    """Gaussian rational with numerators in [-num, num] and denominators in [1, den]."""
    while True:
        a, b = rng.integers(-num, num + 1, size=2)
        c, d = rng.integers(1, den + 1, size=2)
        z = GaussianRational(Fraction(int(a), int(c)), Fraction(int(b), int(d)))
        if z or not nonzero:
            return z


def random_vector(rng: np.random.Generator, dim: int, num: int = 3, den: int = 3) -> tuple:
    while True:
        v = tuple(random_scalar(rng, num, den) for _ in range(dim))
        if any(v):
            return v


def sample_sl(n: int, seed, length: int | None = None) -> GroupElement:
    """Product of ``length`` seeded transvections Id + c E_ij; det is exactly 1.

    ``length`` defaults to 4(n+1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    dim = n + 1
    length = 4 * dim if length is None else length
    if length < 1:
        raise ValueError("length must be >= 1")
    rng = make_rng(seed)
    rows = [list(r) for r in SquareMatrix.identity(dim).rows]
    for _ in range(length):
        i, j = (int(x) for x in rng.choice(dim, size=2, replace=False))
        c = random_scalar(rng, nonzero=True)
        # left multiplication by Id + c E_ij adds c * row j to row i
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return GroupElement(rows)


# ---------------------------------------------------------------------------
# the two models


def _check_dim(M: SquareMatrix, spec: OrbitSpec) -> None:
    if M.dim != spec.dim:
        raise ValueError(f"dimension mismatch: {M.dim} vs {spec.dim}")


def adjoint_point(g: SquareMatrix, spec: OrbitSpec) -> LieElement:
    """Ad(g) H0 = g H0 g^-1, with g^-1 = adj(g) since det g = 1."""
    _check_dim(g, spec)
    adj, d = adjugate(g)
    if d != ONE:
        raise ValueError("g must have determinant 1")
    return LieElement(g @ spec.H0 @ adj)


def tensor_point(g: SquareMatrix) -> TensorPoint:
    """(first column of g, first row of adj g)."""
    adj, d = adjugate(g)
    if d != ONE:
        raise ValueError("g must have determinant 1")
    return TensorPoint(g.col(0), adj.row(0))


def model_map(M: TensorPoint, n: int) -> LieElement:
    """A = (n+1) v x eps - Id; sends e1 x eps1 to diag(n, -1, ..., -1)."""
    if len(M.v) != n + 1:
        raise ValueError("tensor point has the wrong dimension")
    if M.pairing() != ONE:
        raise ValueError(f"eps(v) must be 1, got {M.pairing()}")
    return LieElement((n + 1) * M.matrix() - SquareMatrix.identity(n + 1))


def model_inverse(A: SquareMatrix, n: int) -> SquareMatrix:
    """The rank-one matrix (A + Id)/(n+1)."""
    return (A + SquareMatrix.identity(n + 1)) / (n + 1)


def factor_rank_one(M: SquareMatrix) -> TensorPoint:
    """Write a rank-one matrix as v x eps (v a nonzero column of M)."""
    dim = M.dim
    for c in range(dim):
        col = M.col(c)
        r = next((i for i, x in enumerate(col) if x), None)
        if r is not None:
            eps = tuple(x / col[r] for x in M.row(r))
            tp = TensorPoint(col, eps)
            if tp.matrix() != M:
                raise ValueError("matrix is not of rank one")
            return tp
    raise ValueError("zero matrix has no rank-one factorization")


def orbit_membership(A: SquareMatrix, spec: OrbitSpec) -> bool:
    """Whether A lies on the orbit of H0.

    For the minimal orbit this is (A - n Id)(A + Id) = 0 with tr A = 0.  For
    other H0 the product over distinct eigenvalues must vanish and the
    characteristic polynomials must agree.
    """
    _check_dim(A, spec)
    if A.trace():
        return False
    ident = SquareMatrix.identity(spec.dim)
    if spec.is_minimal:
        n = spec.n
        return ((A - n * ident) @ (A + ident)).is_zero()
    roots = []
    for x in spec.H0.diagonal():
        if x not in roots:
            roots.append(x)
    if not UnivariatePolynomial.from_roots(roots)(A).is_zero():
        return False
    return characteristic_polynomial(A) == characteristic_polynomial(spec.H0)


# ---------------------------------------------------------------------------
# Bruhat charts


def chart_base(spec: OrbitSpec, j: int) -> LieElement:
    """(1 j) H0: the critical point e_j x eps_j in the matrix model."""
    if not 1 <= j <= spec.dim:
        raise ValueError(f"chart index must lie in 1..{spec.dim}")
    return WeylElement.transposition(spec.dim, 0, j - 1).act(spec.H0)


def _in_span(X: SquareMatrix, basis: Sequence[SquareMatrix]) -> bool:
    allowed = {(i, k) for b in basis for i in range(b.dim) for k in range(b.dim) if b[i, k]}
    return all(not X[i, k] or (i, k) in allowed for i in range(X.dim) for k in range(X.dim))


def chart_param(spec: OrbitSpec, j: int, Y: SquareMatrix, X: SquareMatrix) -> LieElement:
    """e^{ad Y} e^{ad X} ((1 j) H0) for Y, X in the negative/positive nilradicals."""
    base = chart_base(spec, j)
    if not _in_span(Y, nilradical_basis(base, "-")):
        raise ValueError(f"Y is not in the negative nilradical of chart {j}")
    if not _in_span(X, nilradical_basis(base, "+")):
        raise ValueError(f"X is not in the positive nilradical of chart {j}")
    return exp_ad_nilpotent(Y, exp_ad_nilpotent(X, base))


def complement_polynomial(M: TensorPoint, j: int) -> Fraction:
    """sum_k |v_j eps_k|^2, which vanishes exactly off the chart domain D_j."""
    vj = M.v[j - 1]
    total = Fraction(0)
    for e in M.eps:
        total += (vj * e).norm()
    return total


def chart_membership(M: TensorPoint, j: int) -> bool:
    """Whether the orbit point v x eps lies in the domain of chart j (v_j != 0)."""
    if not 1 <= j <= len(M.v):
        raise ValueError("chart index out of range")
    by_coordinate = bool(M.v[j - 1])
    by_polynomial = complement_polynomial(M, j) != 0
    if by_coordinate != by_polynomial:
        raise AssertionError("chart tests disagree")  # pragma: no cover - eps != 0 on the orbit
    return by_coordinate
