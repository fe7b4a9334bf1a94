"""Exact Gaussian-rational scalars and dense square matrices.

Everything here is exact: there is no floating-point path.  Scalars live in
Q(i) and are kept in a canonical reduced form so that equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial, gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "GaussianRational",
    "SquareMatrix",
    "UnivariatePolynomial",
    "adjugate",
    "characteristic_polynomial",
    "cofactor",
    "det",
    "inverse",
    "kernel_basis",
    "laplace_det",
    "minimal_polynomial",
    "parse_scalar",
    "rank",
    "rank_rows",
]


class GaussianRational:
    """An element ``re + im*i`` of Q(i).

    Stored as integers ``(a, b, d)`` with ``re = a/d``, ``im = b/d``,
    ``d > 0`` and ``gcd(a, b, d) == 1``.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            self._a, self._b, self._d = re._a, re._b, re._d
            return
        if isinstance(re, str):
            if im:
                raise TypeError("cannot combine a string literal with im")
            z = parse_scalar(re)
            self._a, self._b, self._d = z._a, z._b, z._d
            return
        re = _as_fraction(re)
        im = _as_fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        z = object.__new__(cls)
        z._set(a, b, d)
        return z

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Squared modulus ``re^2 + im^2``."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        d = self._d * o._d
        return GaussianRational._raw(self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, d)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        d = self._d * o._d
        return GaussianRational._raw(self._a * o._d - o._a * self._d, self._b * o._d - o._b * self._d, d)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        # (a + bi)/d inverted is d(a - bi)/(a^2 + b^2)
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o._b == 0:
            if o._a == 0:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._raw(self._a * o._d, self._b * o._d, self._d * o._a)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(k)):
            result = result * base
        return result

    # comparison and hashing ----------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    # formatting ----------------------------------------------------------

    def __str__(self):
        re_s = _frac_str(self.re)
        if self._b == 0:
            return re_s
        im = self.im
        im_s = _frac_str(abs(im))
        if self._a == 0:
            return ("-" if im < 0 else "") + im_s + " i"
        return f"{re_s}{'-' if im < 0 else '+'}{im_s} i"

    def __repr__(self):
        return f"GaussianRational('{self}')"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


def _coerce(x) -> GaussianRational | None:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)

_RAT = r"\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"[+-]?{_RAT}")
_PURE_IM_RE = re.compile(rf"(?P<sign>[+-]?)(?P<im>{_RAT})?")
_COMPLEX_RE = re.compile(rf"(?P<re>[+-]?{_RAT})(?P<sign>[+-]{{1,2}})(?P<im>{_RAT})?")


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``"p/q"``, ``"p/q+r/s i"``, ``"-i"``, ``"3/2 i"`` exactly.

    Floating literals are rejected.
    """
    s = text.replace(" ", "")
    if not s.endswith("i"):
        if not _REAL_RE.fullmatch(s):
            raise ValueError(f"not an exact Gaussian-rational literal: {text!r}")
        return GaussianRational(Fraction(s))
    body = s[:-1]
    if body.endswith("*"):
        body = body[:-1]
    m = _PURE_IM_RE.fullmatch(body)
    re_part = Fraction(0)
    if m is None:
        m = _COMPLEX_RE.fullmatch(body)
        if m is None:
            raise ValueError(f"not an exact Gaussian-rational literal: {text!r}")
        re_part = Fraction(m.group("re"))
    sign = -1 if m.group("sign").count("-") % 2 else 1
    im_part = sign * (Fraction(m.group("im")) if m.group("im") else Fraction(1))
    return GaussianRational(re_part, im_part)


def as_scalar(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return GaussianRational(x)


class SquareMatrix:
    """Immutable dense square matrix over Q(i).

    ``A @ B`` is the matrix product; ``c * A`` scales.  Indices are 0-based.
    """

    __slots__ = ("_rows", "_n")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_scalar(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("SquareMatrix needs n rows of length n, n >= 1")
        self._rows = rows
        self._n = n

    @classmethod
    def _wrap(cls, rows: tuple) -> "SquareMatrix":
        m = object.__new__(SquareMatrix)
        m._rows = rows
        m._n = len(rows)
        return m

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls._wrap(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "SquareMatrix":
        return cls._wrap(tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "SquareMatrix":
        vals = [as_scalar(v) for v in values]
        n = len(vals)
        return cls._wrap(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "SquareMatrix":
        """Elementary matrix E_ij (0-based)."""
        return cls._wrap(tuple(tuple(ONE if (r, c) == (i, j) else ZERO for c in range(n)) for r in range(n)))

    @classmethod
    def outer(cls, v: Sequence, w: Sequence) -> "SquareMatrix":
        v = [as_scalar(x) for x in v]
        w = [as_scalar(x) for x in w]
        if len(v) != len(w):
            raise ValueError("outer product needs equal lengths")
        return cls._wrap(tuple(tuple(a * b for b in w) for a in v))

    @classmethod
    def from_json(cls, data: Sequence[Sequence]) -> "SquareMatrix":
        """Build from the literal format: a list of rows of exact strings."""
        for row in data:
            for x in row:
                if not isinstance(x, (str, int)) or isinstance(x, bool):
                    raise ValueError(f"matrix entries must be exact strings, got {x!r}")
        return cls(data)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._rows]

    @property
    def dim(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple:
        return self._rows

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def entries(self) -> tuple:
        return tuple(x for r in self._rows for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"{type(self).__name__}({self.to_json()})"

    def _check(self, other: "SquareMatrix") -> None:
        if not isinstance(other, SquareMatrix):
            raise TypeError("expected a SquareMatrix")
        if other._n != self._n:
            raise ValueError(f"dimension mismatch: {self._n} vs {other._n}")

    def __add__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check(other)
        return SquareMatrix._wrap(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __sub__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check(other)
        return SquareMatrix._wrap(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __neg__(self):
        return SquareMatrix._wrap(tuple(tuple(-a for a in r) for r in self._rows))

    def __mul__(self, c):
        if isinstance(c, SquareMatrix):
            raise TypeError("use @ for the matrix product")
        c = _coerce(c)
        if c is None:
            return NotImplemented
        return SquareMatrix._wrap(tuple(tuple(c * a for a in r) for r in self._rows))

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = _coerce(c)
        if c is None:
            return NotImplemented
        inv = ONE / c
        return SquareMatrix._wrap(tuple(tuple(a * inv for a in r) for r in self._rows))

    def __matmul__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check(other)
        cols = list(zip(*other._rows))
        out = []
        for r in self._rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(_dot(nz, c) for c in cols))
        return SquareMatrix._wrap(tuple(out))

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product."""
        v = [as_scalar(x) for x in v]
        if len(v) != self._n:
            raise ValueError("vector length mismatch")
        return tuple(_dot([(k, a) for k, a in enumerate(r) if a], v) for r in self._rows)

    def bracket(self, other: "SquareMatrix") -> "SquareMatrix":
        """Commutator ``[self, other] = self @ other - other @ self``."""
        return self @ other - other @ self

    def trace(self) -> GaussianRational:
        t = ZERO
        for i in range(self._n):
            t = t + self._rows[i][i]
        return t

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix._wrap(tuple(zip(*self._rows)))

    def conj_transpose(self) -> "SquareMatrix":
        return SquareMatrix._wrap(tuple(tuple(x.conjugate() for x in c) for c in zip(*self._rows)))

    def is_zero(self) -> bool:
        return not any(x for r in self._rows for x in r)

    def is_diagonal(self) -> bool:
        return all(not self._rows[i][j] for i in range(self._n) for j in range(self._n) if i != j)

    def diagonal(self) -> tuple:
        return tuple(self._rows[i][i] for i in range(self._n))

    def minor_matrix(self, i: int, j: int) -> "SquareMatrix":
        """The matrix A(i|j) with row i and column j removed."""
        if self._n == 1:
            raise ValueError("a 1x1 matrix has no proper minor")
        return SquareMatrix._wrap(
            tuple(tuple(x for c, x in enumerate(r) if c != j) for k, r in enumerate(self._rows) if k != i)
        )

    def power(self, k: int) -> "SquareMatrix":
        result = SquareMatrix.identity(self._n)
        for _ in range(k):
            result = result @ self
        return result


def _dot(nz_row, col) -> GaussianRational:
    s = ZERO
    for k, a in nz_row:
        b = col[k]
        if b:
            s = s + a * b
    return s


# ---------------------------------------------------------------------------
# determinants, adjugates, ranks


def _bareiss_det(rows: list[list[GaussianRational]]) -> GaussianRational:
    """Fraction-free Bareiss determinant; consumes ``rows``."""
    n = len(rows)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not rows[k][k]:
            for r in range(k + 1, n):
                if rows[r][k]:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) / prev
            ri[k] = ZERO
        prev = pivot
    d = rows[n - 1][n - 1]
    return d if sign > 0 else -d


def det(A: SquareMatrix) -> GaussianRational:
    """Exact determinant by fraction-free Bareiss elimination."""
    return _bareiss_det([list(r) for r in A.rows])


def laplace_det(rows: Sequence[Sequence]):
    """Determinant by cofactor expansion along the first row.

    Works over any commutative ring whose elements support ``+``, ``-``,
    ``*`` (e.g. polynomials).  Exponential cost; intended for dim <= 5.
    """
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        sub = [[x for c, x in enumerate(r) if c != j] for r in rows[1:]]
        term = a * laplace_det(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] - rows[0][0]
    return total


def cofactor(A: SquareMatrix, i: int, j: int) -> GaussianRational:
    """C_ij = (-1)^(i+j) det A(i|j)."""
    d = det(A.minor_matrix(i, j))
    return -d if (i + j) % 2 else d


def _gauss_jordan_inverse(A: SquareMatrix):
    """Return ``(inverse, det)``, or ``(None, 0)`` when A is singular."""
    n = A.dim
    m = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(A.rows)]
    d = ONE
    for k in range(n):
        p = next((r for r in range(k, n) if m[r][k]), None)
        if p is None:
            return None, ZERO
        if p != k:
            m[k], m[p] = m[p], m[k]
            d = -d
        pivot = m[k][k]
        d = d * pivot
        inv = ONE / pivot
        mk = [x * inv for x in m[k]]
        m[k] = mk
        for r in range(n):
            if r != k and m[r][k]:
                f = m[r][k]
                mr = m[r]
                m[r] = [a - f * b if b else a for a, b in zip(mr, mk)]
    return SquareMatrix._wrap(tuple(tuple(r[n:]) for r in m)), d


def adjugate(A: SquareMatrix) -> tuple[SquareMatrix, GaussianRational]:
    """Classical adjoint and determinant, with ``A @ adj == det * Id``.

    Invertible input goes through Gauss-Jordan (``adj = det * A^-1``);
    singular input falls back to the transposed cofactor matrix.
    """
    n = A.dim
    if n == 1:
        return SquareMatrix.identity(1), A[0, 0]
    inv, d = _gauss_jordan_inverse(A)
    if inv is not None:
        return d * inv, d
    adj = tuple(tuple(cofactor(A, j, i) for j in range(n)) for i in range(n))
    return SquareMatrix._wrap(adj), ZERO


def inverse(A: SquareMatrix) -> SquareMatrix:
    inv, _ = _gauss_jordan_inverse(A)
    if inv is None:
        raise ZeroDivisionError("matrix is singular")
    return inv


def rank_rows(rows: Sequence[Sequence]) -> int:
    """Rank of a (possibly rectangular) matrix by fraction-free elimination."""
    m = [[as_scalar(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = ONE
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pivot = m[r][c]
        for i in range(r + 1, len(m)):
            mic = m[i][c]
            mi, mr = m[i], m[r]
            for k in range(c + 1, ncols):
                mi[k] = (mi[k] * pivot - mic * mr[k]) / prev
            mi[c] = ZERO
        prev = pivot
        r += 1
        if r == len(m):
            break
    return r


def rank(A: SquareMatrix) -> int:
    return rank_rows(A.rows)


def kernel_basis(rows: Sequence[Sequence]) -> list[tuple[GaussianRational, ...]]:
    """Basis of the right null space via reduced row echelon form."""
    m = [[as_scalar(x) for x in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row_i, pc in enumerate(pivots):
            v[pc] = -m[row_i][f]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# univariate polynomials


class UnivariatePolynomial:
    """Polynomial over Q(i), coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UnivariatePolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_scalar(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "UnivariatePolynomial":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return UnivariatePolynomial(c / lead for c in self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UnivariatePolynomial(
            (a[k] if k < len(a) else ZERO) + (b[k] if k < len(b) else ZERO) for k in range(n)
        )

    def __sub__(self, other):
        return self + UnivariatePolynomial(-c for c in other.coeffs)

    def __mul__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            c = as_scalar(other)
            return UnivariatePolynomial(c * x for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UnivariatePolynomial([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UnivariatePolynomial(out)

    def __eq__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner's rule at a scalar or a SquareMatrix."""
        if isinstance(x, SquareMatrix):
            ident = SquareMatrix.identity(x.dim)
            acc = SquareMatrix.zeros(x.dim)
            for c in reversed(self.coeffs):
                acc = acc @ x + c * ident
            return acc
        x = as_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = str(c)
            if not c.is_real() and c.re != 0:
                cs = f"({cs})"
            if mono and c == ONE:
                term = mono
            elif mono and c == -ONE:
                term = "-" + mono
            else:
                term = cs + (f"*{mono}" if mono else "")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"UnivariatePolynomial({[str(c) for c in self.coeffs]})"


def minimal_polynomial(A: SquareMatrix) -> UnivariatePolynomial:
    """Monic polynomial of least degree annihilating A.

    Finds the first linear dependency among Id, A, A^2, ... by exact
    elimination on the flattened powers.
    """
    n = A.dim
    power = SquareMatrix.identity(n)
    # reduced rows kept in echelon form with a record of which powers built them
    basis: list[tuple[list, list, int]] = []  # (vector, combo over powers, pivot)
    for k in range(n + 1):
        vec = list(power.entries())
        combo = [ZERO] * (k + 1)
        combo[k] = ONE
        for bvec, bcombo, piv in basis:
            f = vec[piv]
            if f:
                vec = [a - f * b for a, b in zip(vec, bvec)]
                combo = [a - f * (bcombo[i] if i < len(bcombo) else ZERO) for i, a in enumerate(combo)]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return UnivariatePolynomial(combo).monic()
        inv = ONE / vec[piv]
        basis.append(([x * inv for x in vec], [c * inv for c in combo], piv))
        power = power @ A
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def characteristic_polynomial(A: SquareMatrix) -> UnivariatePolynomial:
    """det(x Id - A) by the Faddeev-LeVerrier recursion."""
    n = A.dim
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    ident = SquareMatrix.identity(n)
    m = SquareMatrix.zeros(n)
    c = ONE
    for k in range(1, n + 1):
        m = A @ m + c * ident
        c = -(A @ m).trace() / k
        coeffs[n - k] = c
    return UnivariatePolynomial(coeffs)


def exp_nilpotent(X: SquareMatrix, cap: int | None = None) -> SquareMatrix:
    """Finite matrix exponential of a nilpotent X."""
    n = X.dim
    cap = n if cap is None else cap
    total = SquareMatrix.identity(n)
    term = SquareMatrix.identity(n)
    for k in range(1, cap + 1):
        term = term @ X
        if term.is_zero():
            return total
        total = total + term / factorial(k)
    raise ValueError("matrix is not nilpotent")
