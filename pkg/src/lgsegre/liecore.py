"""Lie-theoretic layer on sl(n+1): forms, ad/Ad, nilpotent exponentials, Weyl group.

The basis of sl(n+1) is fixed as the off-diagonal units E_ij (row-major)
followed by the Cartan elements E_ii - E_{i+1,i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Sequence

from .exact import (
    I_UNIT,
    ONE,
    ZERO,
    GaussianRational,
    SquareMatrix,
    as_scalar,
    characteristic_polynomial,
    det,
)

__all__ = [
    "FormSpec",
    "GroupElement",
    "LieElement",
    "NotNilpotentError",
    "WeylElement",
    "ad_operator",
    "bilinear_form",
    "centralizer_dim",
    "exp_ad_nilpotent",
    "hermitian_form",
    "nilradical_basis",
    "omega",
    "omega_gram",
    "sl_basis",
    "sl_coordinates",
    "su_basis",
    "tau",
    "weyl_orbit_points",
]


class NotNilpotentError(ValueError):
    pass


class LieElement(SquareMatrix):
    """A trace-zero matrix, i.e. an element of sl(n+1)."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows.rows if isinstance(rows, SquareMatrix) else rows)
        if self.trace():
            raise ValueError(f"trace must vanish, got {self.trace()}")

    @classmethod
    def diag(cls, values: Sequence) -> "LieElement":
        return cls(SquareMatrix.diag(values))


class GroupElement(SquareMatrix):
    """A determinant-one matrix, i.e. an element of SL(n+1)."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows.rows if isinstance(rows, SquareMatrix) else rows)
        d = det(self)
        if d != ONE:
            raise ValueError(f"determinant must be 1, got {d}")

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(SquareMatrix.identity(n))


@dataclass(frozen=True)
class FormSpec:
    """Multiplier on the trace form: ``<X, Y> = scale * tr(XY)``."""

    scale: GaussianRational = ONE

    def __post_init__(self):
        object.__setattr__(self, "scale", as_scalar(self.scale))
        if not self.scale:
            raise ValueError("form scale must be nonzero")

    @classmethod
    def trace(cls) -> "FormSpec":
        return cls(ONE)

    @classmethod
    def killing(cls, n: int) -> "FormSpec":
        """Cartan-Killing form of sl(n+1), equal to 2(n+1) tr(XY)."""
        return cls(GaussianRational(2 * (n + 1)))


TRACE_FORM = FormSpec()


def _same_dim(X: SquareMatrix, Y: SquareMatrix) -> None:
    if X.dim != Y.dim:
        raise ValueError(f"dimension mismatch: {X.dim} vs {Y.dim}")


def bilinear_form(X: SquareMatrix, Y: SquareMatrix, form: FormSpec = TRACE_FORM) -> GaussianRational:
    _same_dim(X, Y)
    return form.scale * (X @ Y).trace()


# ---------------------------------------------------------------------------
# basis and ad


def sl_basis(dim: int) -> list[SquareMatrix]:
    off = [SquareMatrix.unit(dim, i, j) for i in range(dim) for j in range(dim) if i != j]
    cartan = [SquareMatrix.unit(dim, i, i) - SquareMatrix.unit(dim, i + 1, i + 1) for i in range(dim - 1)]
    return off + cartan


def sl_coordinates(Z: SquareMatrix) -> tuple[GaussianRational, ...]:
    """Coordinates of a trace-zero Z in the fixed sl basis."""
    if Z.trace():
        raise ValueError("not trace zero")
    dim = Z.dim
    off = [Z[i, j] for i in range(dim) for j in range(dim) if i != j]
    cartan = []
    acc = ZERO
    for i in range(dim - 1):
        acc = acc + Z[i, i]
        cartan.append(acc)
    return tuple(off + cartan)


def ad_operator(X: SquareMatrix) -> SquareMatrix:
    """Matrix of Z -> [X, Z] on the fixed sl basis (columns are images)."""
    cols = [sl_coordinates(X.bracket(b)) for b in sl_basis(X.dim)]
    return SquareMatrix(list(zip(*cols)))


def _is_nilpotent(X: SquareMatrix, cap: int) -> bool:
    p = X
    for _ in range(cap):
        if p.is_zero():
            return True
        p = p @ X
    return p.is_zero()


def exp_ad_nilpotent(X: SquareMatrix, Z: SquareMatrix) -> SquareMatrix:
    """``sum_k ad(X)^k Z / k!`` for nilpotent X; a finite sum.

    Nilpotency of X (equivalently of ad X on sl) is checked by powering X,
    capped at (n+1)^2 steps.
    """
    _same_dim(X, Z)
    if not _is_nilpotent(X, X.dim**2):
        raise NotNilpotentError("ad(X) is not nilpotent")
    total = Z
    term = Z
    k = 0
    while True:
        k += 1
        term = X.bracket(term)
        if term.is_zero():
            break
        total = total + term / factorial(k)
    return LieElement(total) if isinstance(Z, LieElement) else total


# ---------------------------------------------------------------------------
# Weyl group and nilradicals


@dataclass(frozen=True)
class WeylElement:
    """Permutation w of {0..n}; acts on diagonal matrices by permuting entries."""

    perm: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("not a permutation")

    @classmethod
    def transposition(cls, dim: int, i: int, j: int) -> "WeylElement":
        p = list(range(dim))
        p[i], p[j] = p[j], p[i]
        return cls(tuple(p))

    def matrix(self) -> SquareMatrix:
        """Permutation matrix P with P e_k = e_{perm[k]}."""
        dim = len(self.perm)
        return SquareMatrix(
            [[ONE if self.perm[c] == r else ZERO for c in range(dim)] for r in range(dim)]
        )

    def act(self, H: SquareMatrix) -> SquareMatrix:
        P = self.matrix()
        out = P @ H @ P.transpose()
        return LieElement(out) if isinstance(H, LieElement) else out


def _require_diagonal(H0: SquareMatrix) -> None:
    if not H0.is_diagonal():
        raise ValueError("expected a diagonal matrix")


def weyl_orbit_points(H0: SquareMatrix) -> list[LieElement]:
    """Distinct diagonal matrices obtained by permuting the diagonal of H0."""
    _require_diagonal(H0)
    d = H0.diagonal()
    seen = []
    for p in permutations(range(len(d))):
        entries = tuple(d[k] for k in p)
        if entries not in seen:
            seen.append(entries)
    return [LieElement.diag(e) for e in seen]


def _real_diag(H0: SquareMatrix) -> tuple:
    vals = H0.diagonal()
    if any(not v.is_real() for v in vals):
        raise ValueError("root signs need a real diagonal")
    return tuple(v.re for v in vals)


def nilradical_basis(H0: SquareMatrix, sign: str) -> list[SquareMatrix]:
    """E_ij with (H0)_ii - (H0)_jj positive (``"+"``) or negative (``"-"``)."""
    _require_diagonal(H0)
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    d = _real_diag(H0)
    dim = len(d)
    out = []
    for i in range(dim):
        for j in range(dim):
            if i == j:
                continue
            a = d[i] - d[j]
            if (a > 0 and sign == "+") or (a < 0 and sign == "-"):
                out.append(SquareMatrix.unit(dim, i, j))
    return out


def centralizer_dim(H0: SquareMatrix) -> int:
    """Dimension of the centralizer of a diagonal H0 in sl(n+1)."""
    _require_diagonal(H0)
    d = H0.diagonal()
    dim = len(d)
    return dim - 1 + sum(1 for i in range(dim) for j in range(dim) if i != j and d[i] == d[j])


# ---------------------------------------------------------------------------
# Hermitian and symplectic forms


def tau(Z: SquareMatrix) -> SquareMatrix:
    """Conjugation of the compact real form su(n+1): Z -> -Z^*."""
    return -Z.conj_transpose()


def hermitian_form(X: SquareMatrix, Y: SquareMatrix, form: FormSpec = TRACE_FORM) -> GaussianRational:
    """``-<X, tau Y>``, positive definite at trace scale."""
    _same_dim(X, Y)
    return -bilinear_form(X, tau(Y), form)


def omega(X: SquareMatrix, Y: SquareMatrix, form: FormSpec = TRACE_FORM):
    """Imaginary part of the Hermitian form; a real symplectic form."""
    return hermitian_form(X, Y, form).im


def su_basis(dim: int) -> list[SquareMatrix]:
    """Real basis of su(n+1): i(E_kk - E_k+1k+1), E_ij - E_ji, i(E_ij + E_ji)."""
    out = []
    for k in range(dim - 1):
        out.append(I_UNIT * (SquareMatrix.unit(dim, k, k) - SquareMatrix.unit(dim, k + 1, k + 1)))
    for i in range(dim):
        for j in range(i + 1, dim):
            e, f = SquareMatrix.unit(dim, i, j), SquareMatrix.unit(dim, j, i)
            out.append(e - f)
            out.append(I_UNIT * (e + f))
    return out


def real_tangent_spanning_set(A: SquareMatrix) -> list[SquareMatrix]:
    """Vectors [b, A] and i[b, A] over the sl basis: a real spanning set of T_A."""
    out = []
    for b in sl_basis(A.dim):
        v = b.bracket(A)
        out.append(v)
        out.append(I_UNIT * v)
    return out


def omega_gram(vectors: Sequence[SquareMatrix], form: FormSpec = TRACE_FORM) -> list[list]:
    return [[omega(u, v, form) for v in vectors] for u in vectors]


def same_spectrum(A: SquareMatrix, B: SquareMatrix) -> bool:
    return characteristic_polynomial(A) == characteristic_polynomial(B)
