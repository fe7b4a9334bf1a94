"""Segre coordinates of orbit points, the incidence variety and the ambient change.

An orbit point g.(e1 x eps1) has Segre coordinates M_ij = a_i1 (adj g)_1j in
P^{(n+1)^2 - 1}.  Its complement in P^n x P^n* is the incidence variety
{(w, xi) : xi(w) = 0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .exact import ONE, ZERO, SquareMatrix, adjugate, as_scalar

__all__ = [
    "IncidencePair",
    "ProjectivePoint",
    "ambient_change",
    "ambient_inverse",
    "eigenstructure",
    "incidence_member",
    "segre_coords",
    "two_by_two_minors",
]


class ProjectivePoint:
    """Homogeneous coordinates, compared up to a global nonzero scalar.

    The canonical representative divides by the first nonzero coordinate.
    """

    __slots__ = ("coords", "_normal")

    def __init__(self, coords: Sequence):
        self.coords = tuple(as_scalar(x) for x in coords)
        lead = next((x for x in self.coords if x), None)
        if lead is None:
            raise ValueError("a projective point needs a nonzero coordinate")
        self._normal = tuple(x / lead for x in self.coords)

    def normalized(self) -> tuple:
        return self._normal

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self._normal == other._normal

    def __hash__(self):
        return hash(self._normal)

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        return f"ProjectivePoint([{', '.join(str(x) for x in self._normal)}])"

    def as_matrix(self) -> SquareMatrix:
        """Reshape (n+1)^2 coordinates into a square matrix, row-major."""
        k = len(self.coords)
        dim = int(round(k**0.5))
        if dim * dim != k:
            raise ValueError("coordinate count is not a perfect square")
        return SquareMatrix([self.coords[i * dim : (i + 1) * dim] for i in range(dim)])


@dataclass(frozen=True)
class IncidencePair:
    w: tuple
    xi: tuple

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(as_scalar(x) for x in self.w))
        object.__setattr__(self, "xi", tuple(as_scalar(x) for x in self.xi))
        if len(self.w) != len(self.xi):
            raise ValueError("w and xi must have equal length")


def segre_coords(g: SquareMatrix) -> ProjectivePoint:
    """Coordinates M_ij = a_i1 (adj g)_1j of the orbit point of g."""
    adj, d = adjugate(g)
    if d != ONE:
        raise ValueError("g must have determinant 1")
    dim = g.dim
    return ProjectivePoint([g[i, 0] * adj[0, j] for i in range(dim) for j in range(dim)])


def two_by_two_minors(M: SquareMatrix) -> list:
    dim = M.dim
    return [
        M[i, j] * M[k, l] - M[i, l] * M[k, j]
        for i, k in combinations(range(dim), 2)
        for j, l in combinations(range(dim), 2)
    ]


def eigenstructure(M: SquareMatrix, g: SquareMatrix) -> tuple[tuple, list[tuple]]:
    """Image vector w1 (eigenvalue 1) and kernel vectors w2..w_{n+1} of M.

    These are the columns of g; the caller supplies M built from g.
    """
    if M.trace() != ONE:
        raise ValueError(f"tr M must be 1, got {M.trace()}")
    if M.dim != g.dim:
        raise ValueError("dimension mismatch")
    return g.col(0), [g.col(k) for k in range(1, g.dim)]


def incidence_member(pair: IncidencePair) -> bool:
    """True iff xi(w) = 0."""
    if not any(pair.w) or not any(pair.xi):
        raise ValueError("w and xi must be nonzero")
    s = ZERO
    for a, b in zip(pair.w, pair.xi):
        s = s + a * b
    return not s


def ambient_change(Z: SquareMatrix) -> tuple[SquareMatrix, object]:
    """(A, t) = ((n+1) Z - tr(Z) Id, tr Z)."""
    dim = Z.dim
    t = Z.trace()
    return dim * Z - t * SquareMatrix.identity(dim), t


def ambient_inverse(A: SquareMatrix, t) -> SquareMatrix:
    """Z = (A + t Id)/(n+1)."""
    dim = A.dim
    return (A + as_scalar(t) * SquareMatrix.identity(dim)) / dim
