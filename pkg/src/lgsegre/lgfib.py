"""Height potential, its rational extension, critical points and the sl2 fibres."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .exact import (
    ONE,
    ZERO,
    GaussianRational,
    SquareMatrix,
    as_scalar,
    det,
    inverse,
    kernel_basis,
    laplace_det,
    rank_rows,
)
from .liecore import TRACE_FORM, FormSpec, LieElement, nilradical_basis, weyl_orbit_points
from .orbit import NonRegularError, OrbitSpec, TensorPoint, chart_base, model_map
from .polyideal import Polynomial
from .segre import ProjectivePoint

__all__ = [
    "CriticalDatum",
    "FiberDescription",
    "IndeterminacyError",
    "chart_potential_poly",
    "chart_variables",
    "critical_points",
    "critical_values",
    "hessian_at_critical",
    "potential_f",
    "rational_potential_R",
    "sl2_fiber",
    "symbolic_rational_potential",
]


class IndeterminacyError(ZeroDivisionError):
    """R_H is undefined where tr M = 0, i.e. on the incidence variety."""


def potential_f(A: SquareMatrix, spec: OrbitSpec, form: FormSpec = TRACE_FORM) -> GaussianRational:
    """Height function scale * tr(H A)."""
    if A.dim != spec.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {spec.dim}")
    return form.scale * (spec.H @ A).trace()


def rational_potential_R(M, spec: OrbitSpec) -> GaussianRational:
    """tr(M H) / tr(M) on End(V); homogeneous of degree 0."""
    if isinstance(M, TensorPoint):
        M = M.matrix()
    if M.dim != spec.dim:
        raise ValueError("dimension mismatch")
    tr = M.trace()
    if not tr:
        raise IndeterminacyError("tr M = 0: the point lies on the incidence variety")
    return (M @ spec.H).trace() / tr


def critical_values(spec: OrbitSpec, form: FormSpec = TRACE_FORM) -> list:
    """f_H at the Weyl orbit of H0; works for any diagonal H0."""
    return [potential_f(p, spec, form) for p in weyl_orbit_points(spec.H0)]


# ---------------------------------------------------------------------------
# symbolic chart expansion


def chart_variables(n: int) -> tuple:
    return tuple(f"y{k}" for k in range(1, n + 1)) + tuple(f"x{k}" for k in range(1, n + 1))


def _pm_from(M: SquareMatrix, gens) -> list:
    return [[Polynomial.constant(M[i, j], gens) for j in range(M.dim)] for i in range(M.dim)]


def _pm_linear(basis: Sequence[SquareMatrix], names: Sequence[str], gens) -> list:
    dim = basis[0].dim if basis else 0
    out = [[Polynomial.zero(gens) for _ in range(dim)] for _ in range(dim)]
    for b, name in zip(basis, names):
        v = Polynomial.var(name, gens)
        for i in range(dim):
            for j in range(dim):
                if b[i, j]:
                    out[i][j] = out[i][j] + v * b[i, j]
    return out


def _pm_mul(A: list, B: list) -> list:
    dim = len(A)
    gens = A[0][0].gens
    out = []
    for i in range(dim):
        row = []
        nz = [(k, a) for k, a in enumerate(A[i]) if a]
        for j in range(dim):
            acc = Polynomial.zero(gens)
            for k, a in nz:
                b = B[k][j]
                if b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def _pm_bracket(A: list, B: list) -> list:
    P, Q = _pm_mul(A, B), _pm_mul(B, A)
    return [[p - q for p, q in zip(r, s)] for r, s in zip(P, Q)]


def _pm_exp_ad(X: list, Z: list) -> list:
    dim = len(Z)
    total = Z
    term = Z
    for k in range(1, dim * dim + 1):
        term = _pm_bracket(X, term)
        if not any(p for r in term for p in r):
            return total
        total = [[a + b / factorial(k) for a, b in zip(r, s)] for r, s in zip(total, term)]
    raise ValueError("ad(X) is not nilpotent")


def chart_point_symbolic(spec: OrbitSpec, j: int) -> tuple[list, tuple]:
    """Polynomial matrix e^{ad Y} e^{ad X} ((1 j) H0) over the chart variables."""
    base = chart_base(spec, j)
    neg, pos = nilradical_basis(base, "-"), nilradical_basis(base, "+")
    ny, nx = len(neg), len(pos)
    gens = tuple(f"y{k}" for k in range(1, ny + 1)) + tuple(f"x{k}" for k in range(1, nx + 1))
    Y = _pm_linear(neg, gens[:ny], gens)
    X = _pm_linear(pos, gens[ny:], gens)
    return _pm_exp_ad(Y, _pm_exp_ad(X, _pm_from(base, gens))), gens


def chart_potential_poly(
    spec: OrbitSpec, j: int, form: FormSpec = TRACE_FORM, conjugate_by: SquareMatrix | None = None
) -> Polynomial:
    """f_H along chart j as a polynomial in (y_1..y_n, x_1..x_n).

    With ``conjugate_by = g`` the chart is moved to Ad(g) of itself, so it is
    centred at Ad(g)(1 j)H0 instead of a critical point.
    """
    A, gens = chart_point_symbolic(spec, j)
    if conjugate_by is None:
        weights = spec.H
    else:
        g = conjugate_by
        weights = inverse(g) @ spec.H @ g  # tr(H g P g^-1) = tr(g^-1 H g P)
    total = Polynomial.zero(gens)
    dim = spec.dim
    for i in range(dim):
        for k in range(dim):
            w = weights[k, i]
            if w and A[i][k]:
                total = total + A[i][k] * w
    return total * form.scale


def _hessian_of(f: Polynomial) -> SquareMatrix:
    k = len(f.gens)
    rows = []
    for a in range(k):
        row = []
        for b in range(k):
            e = [0] * k
            e[a] += 1
            e[b] += 1
            c = f.coefficient(e)
            row.append(as_scalar(c) * (2 if a == b else 1))
        rows.append(row)
    return SquareMatrix(rows)


def gradient_at_origin(f: Polynomial) -> tuple:
    k = len(f.gens)
    out = []
    for a in range(k):
        e = [0] * k
        e[a] = 1
        out.append(as_scalar(f.coefficient(e)))
    return tuple(out)


def hessian_at_critical(spec: OrbitSpec, j: int, form: FormSpec = TRACE_FORM) -> tuple[SquareMatrix, bool]:
    """Complex Hessian of the chart potential at the chart centre.

    Raises NonRegularError for non-regular H, carrying the Hessian and its
    degenerate directions.
    """
    spec.require_minimal()
    hess = _hessian_of(chart_potential_poly(spec, j, form))
    if not spec.is_regular:
        err = NonRegularError("H is not regular: the Hessian may degenerate")
        err.hessian = hess
        err.degenerate_directions = kernel_basis(hess.rows)
        raise err
    return hess, bool(det(hess))


@dataclass
class CriticalDatum:
    j: int
    point: LieElement
    tensor: TensorPoint
    f_value: GaussianRational
    r_value: GaussianRational
    hessian: SquareMatrix | None = None
    nondegenerate: bool | None = None
    gradient_zero: bool | None = None


def critical_points(spec: OrbitSpec, form: FormSpec = TRACE_FORM, certify: bool = True) -> list[CriticalDatum]:
    """The n+1 critical points (1 j) H0 = model_map(e_j x eps_j) of f_H.

    With ``certify`` each point is confirmed by the vanishing of the chart
    gradient and its Hessian is computed.
    """
    spec.require_minimal()
    spec.require_regular()
    out = []
    for j in range(1, spec.dim + 1):
        point = chart_base(spec, j)
        tensor = TensorPoint.basis(spec.dim, j)
        if model_map(tensor, spec.n) != point:
            raise AssertionError("tensor and matrix critical points disagree")  # pragma: no cover
        datum = CriticalDatum(
            j=j,
            point=point,
            tensor=tensor,
            f_value=potential_f(point, spec, form),
            r_value=rational_potential_R(tensor, spec),
        )
        if certify:
            f = chart_potential_poly(spec, j, form)
            datum.gradient_zero = not any(gradient_at_origin(f))
            datum.hessian = _hessian_of(f)
            datum.nondegenerate = bool(det(datum.hessian))
        out.append(datum)
    return out


# ---------------------------------------------------------------------------
# the sl3 (and general) rational map in the entries of g


def symbolic_rational_potential(spec: OrbitSpec, prefix: str = "a") -> tuple[Polynomial, Polynomial]:
    """Numerator tr(M H) and denominator tr(M) in the entries a_ij of a generic g."""
    dim = spec.dim
    sep = "_" if dim >= 10 else ""
    gens = tuple(f"{prefix}{i + 1}{sep}{j + 1}" for i in range(dim) for j in range(dim))
    g = [[Polynomial.var(gens[i * dim + j], gens) for j in range(dim)] for i in range(dim)]

    def adj_first_row(k: int) -> Polynomial:
        # (adj g)_{1k} is the (k, 1) cofactor
        if dim == 1:
            return Polynomial.constant(1, gens)
        minor = [[x for c, x in enumerate(r) if c != 0] for rr, r in enumerate(g) if rr != k]
        d = laplace_det(minor)
        return -d if k % 2 else d

    num = Polynomial.zero(gens)
    den = Polynomial.zero(gens)
    for i, lam in enumerate(spec.lambdas):
        term = g[i][0] * adj_first_row(i)
        num = num + term * lam
        den = den + term
    return num, den


# ---------------------------------------------------------------------------
# sl2 fibres

_AFF = ("x", "y", "z")
_PROJ = ("x", "y", "z", "t")


@dataclass
class FiberDescription:
    """The fibre f_H = c of the sl2 orbit x^2 + yz = 1 (H = H0 = diag(1, -1)) and its closure in P^3."""

    level: GaussianRational
    affine_equations: list = field(default_factory=list)
    projective_closure: list = field(default_factory=list)
    boundary_points: list = field(default_factory=list)
    smooth: bool = True
    singular_points: list = field(default_factory=list)

    @property
    def half(self) -> GaussianRational:
        return self.level / 2

    @property
    def conic_constant(self) -> GaussianRational:
        """k with yz = k t^2 on the closure."""
        return ONE - self.half * self.half

    def contains(self, p: ProjectivePoint) -> bool:
        return all(not f.evaluate(p.coords) for f in self.projective_closure)

    def parametrize(self, s, r) -> ProjectivePoint:
        """[s : r] -> [(c/2) s r : s^2 : k r^2 : s r] on the closure."""
        s, r = as_scalar(s), as_scalar(r)
        return ProjectivePoint([self.half * s * r, s * s, self.conic_constant * r * r, s * r])

    def preimage(self, p: ProjectivePoint) -> tuple:
        """A parameter [s : r] mapping onto the closure point p."""
        if not self.smooth:
            raise ValueError("the singular fibre closure is not a smooth conic")
        _, y, z, t = p.coords
        if y:
            return (y, t)
        return (ZERO, ONE)

    def jacobian_rank(self, point: Sequence) -> int:
        """Rank of the Jacobian of the affine equations at an affine point (x, y, z)."""
        vals = dict(zip(_AFF, (as_scalar(v) for v in point)))
        rows = [[f.diff(v).evaluate(vals) for v in _AFF] for f in self.affine_equations]
        return rank_rows(rows)

    def affine_point(self, y) -> tuple:
        """The affine fibre point with the given nonzero y (smooth fibres only)."""
        y = as_scalar(y)
        return (self.half, y, self.conic_constant / y)


def sl2_fiber(c) -> FiberDescription:
    """Fibre of f_H(A) = 2x at level c and its projective closure.

    Affine: x = c/2, x^2 + yz - 1 = 0.  Closure in P^3 with coordinates
    [x, y, z, t]: x = (c/2) t, x^2 + yz - t^2 = 0.  Setting t = 0 forces
    x = 0 and yz = 0, leaving the two coordinate points of the y and z axes.
    """
    c = as_scalar(c)
    half = c / 2
    x, y, z = Polynomial.variables(_AFF)
    affine = [x - half, x * x + y * z - 1]
    X, Y, Z, T = Polynomial.variables(_PROJ)
    closure = [X - T * half, X * X + Y * Z - T * T]
    # on t = 0 the linear equation gives x = 0 and the quadric reduces to y z = 0
    residual = closure[1].substitute(
        {"x": Polynomial.zero(("y", "z")), "y": Polynomial.var("y", ("y", "z")),
         "z": Polynomial.var("z", ("y", "z")), "t": Polynomial.zero(("y", "z"))},
        ("y", "z"),
    )
    boundary = []
    if residual == Polynomial.var("y", ("y", "z")) * Polynomial.var("z", ("y", "z")):
        boundary = [ProjectivePoint([0, 1, 0, 0]), ProjectivePoint([0, 0, 1, 0])]
    smooth = (ONE - half * half) != ZERO
    singular = [] if smooth else [(half, ZERO, ZERO)]
    fib = FiberDescription(
        level=c,
        affine_equations=affine,
        projective_closure=closure,
        boundary_points=boundary,
        smooth=smooth,
        singular_points=singular,
    )
    for p in fib.boundary_points:
        if not fib.contains(p):
            raise AssertionError("boundary point off the closure")  # pragma: no cover
    return fib
