"""Sparse multivariate polynomials, Buchberger's algorithm and ideal homogenization.

Polynomials carry an explicit tuple of generator names; exponent vectors are
tuples aligned with it.  Coefficients are ``Fraction`` by default, and
``GaussianRational`` coefficients are accepted as well.
"""

from __future__ import annotations

import ast
import heapq
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from operator import le
from typing import Iterable, Mapping, Sequence

from .exact import GaussianRational

__all__ = [
    "BuchbergerStats",
    "MonomialOrder",
    "Polynomial",
    "PolynomialIdeal",
    "ResourceCapExceeded",
    "SegreComparison",
    "ambient_substitution",
    "compare_with_segre",
    "dehomogenize_ideal",
    "groebner",
    "homogenize_ideal",
    "homogenized_raw_generators",
    "ideal_equal",
    "is_groebner_basis",
    "load_ideal",
    "minors_ideal",
    "normal_form",
    "orbit_ideal",
    "parse_polynomial",
    "s_polynomial",
    "substitute_linear",
]

DEFAULT_CAP = 10**6


class ResourceCapExceeded(RuntimeError):
    """Raised when Buchberger exceeds its pair-reduction budget."""


def _norm_coeff(c):
    if isinstance(c, GaussianRational):
        return c.re if c.is_real() else c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, Fraction):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial ``{exponent tuple: coefficient}``."""

    __slots__ = ("gens", "terms")

    def __init__(self, terms: Mapping[tuple, object], gens: Sequence[str]):
        self.gens = tuple(gens)
        k = len(self.gens)
        clean = {}
        for e, c in terms.items():
            if len(e) != k:
                raise ValueError("exponent length does not match generators")
            if c:
                clean[tuple(e)] = _norm_coeff(c)
        self.terms = clean

    @classmethod
    def _wrap(cls, terms: dict, gens: tuple) -> "Polynomial":
        p = object.__new__(cls)
        p.gens = gens
        p.terms = terms
        return p

    @classmethod
    def zero(cls, gens: Sequence[str]) -> "Polynomial":
        return cls._wrap({}, tuple(gens))

    @classmethod
    def constant(cls, c, gens: Sequence[str]) -> "Polynomial":
        gens = tuple(gens)
        return cls({(0,) * len(gens): c}, gens)

    @classmethod
    def var(cls, name: str, gens: Sequence[str]) -> "Polynomial":
        gens = tuple(gens)
        e = [0] * len(gens)
        e[gens.index(name)] = 1
        return cls._wrap({tuple(e): Fraction(1)}, gens)

    @classmethod
    def variables(cls, gens: Sequence[str]) -> list["Polynomial"]:
        return [cls.var(g, gens) for g in gens]

    # -- basic queries ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exponent: Sequence[int]):
        return self.terms.get(tuple(exponent), Fraction(0))

    def constant_term(self):
        return self.coefficient((0,) * len(self.gens))

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial._wrap({e: c for e, c in self.terms.items() if sum(e) == degree}, self.gens)

    def leading_term(self, order: "MonomialOrder") -> tuple[tuple, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        order.check(self.gens)
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.gens != self.gens:
                raise ValueError(f"generator mismatch: {self.gens} vs {other.gens}")
            return other
        return Polynomial.constant(other, self.gens)

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm_coeff(v)
            else:
                out.pop(e, None)
        return Polynomial._wrap(out, self.gens)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap({e: -c for e, c in self.terms.items()}, self.gens)

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = _norm_coeff(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Polynomial.zero(self.gens)
            return Polynomial._wrap({e: _norm_coeff(a * c) for e, a in self.terms.items()}, self.gens)
        o = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._wrap({e: _norm_coeff(c) for e, c in out.items()}, self.gens)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            return NotImplemented
        return self * (Fraction(1) / c if not isinstance(c, GaussianRational) else GaussianRational(1) / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.constant(1, self.gens)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.gens == other.gens and self.terms == other.terms
        try:
            return self == Polynomial.constant(other, self.gens)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    # -- calculus and substitution ---------------------------------------

    def diff(self, name: str) -> "Polynomial":
        k = self.gens.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = list(e)
                ne[k] -= 1
                out[tuple(ne)] = _norm_coeff(c * e[k])
        return Polynomial._wrap(out, self.gens)

    def evaluate(self, values):
        """Evaluate at a point given as a mapping name->value or a sequence."""
        if isinstance(values, Mapping):
            vals = [values[g] for g in self.gens]
        else:
            vals = list(values)
            if len(vals) != len(self.gens):
                raise ValueError("wrong number of values")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v**k
            total = total + t
        return total

    def substitute(self, mapping: Mapping[str, "Polynomial"], target_gens: Sequence[str]) -> "Polynomial":
        """Replace every generator by a polynomial over ``target_gens``."""
        target_gens = tuple(target_gens)
        missing = [g for g in self.gens if g not in mapping]
        if missing:
            raise KeyError(f"unassigned variables: {missing}")
        images = []
        for g in self.gens:
            img = mapping[g]
            if not isinstance(img, Polynomial):
                img = Polynomial.constant(img, target_gens)
            if img.gens != target_gens:
                raise ValueError(f"image of {g} is not over {target_gens}")
            images.append(img)
        powers: dict = {}

        def pw(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] ** k
            return powers[key]

        total = Polynomial.zero(target_gens)
        for e, c in self.terms.items():
            t = Polynomial.constant(c, target_gens)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            total = total + t
        return total

    def homogenize(self, t: str) -> "Polynomial":
        """Homogenize with a new last generator ``t``."""
        if t in self.gens:
            raise ValueError(f"{t} already a generator")
        d = self.total_degree()
        return Polynomial._wrap({e + (d - sum(e),): c for e, c in self.terms.items()}, self.gens + (t,))

    def dehomogenize(self, t: str) -> "Polynomial":
        """Set ``t = 1`` and drop it from the generators."""
        k = self.gens.index(t)
        gens = self.gens[:k] + self.gens[k + 1 :]
        out: dict = {}
        for e, c in self.terms.items():
            ne = e[:k] + e[k + 1 :]
            v = out.get(ne, 0) + c
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return Polynomial._wrap(out, gens)

    def with_gens(self, gens: Sequence[str]) -> "Polynomial":
        """Re-embed into a generator tuple containing all used variables."""
        gens = tuple(gens)
        idx = []
        for g in self.gens:
            idx.append(gens.index(g) if g in gens else None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(gens)
            for k, i in zip(e, idx):
                if k:
                    if i is None:
                        raise ValueError("polynomial uses a variable absent from the new generators")
                    ne[i] = k
            out[tuple(ne)] = c
        return Polynomial._wrap(out, gens)

    def monic(self, order: "MonomialOrder") -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        return self / lc

    # -- formatting -------------------------------------------------------

    def to_str(self, order: "MonomialOrder | None" = None) -> str:
        if not self.terms:
            return "0"
        order = order or MonomialOrder("grevlex", self.gens)
        parts = []
        for e in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                g if k == 1 else f"{g}^{k}" for g, k in zip(self.gens, e) if k
            )
            if isinstance(c, GaussianRational):
                cs, neg = f"({c})", False
            else:
                neg = c < 0
                a = abs(c)
                cs = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            parts.append(("- " if neg else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, gens={self.gens})"


# ---------------------------------------------------------------------------
# parsing


def parse_polynomial(text: str, gens: Sequence[str]) -> Polynomial:
    """Parse an infix expression such as ``"2*a11*a22 - t^2"`` exactly.

    Integer literals and division by constants are allowed; floating
    literals and unknown names are rejected.
    """
    gens = tuple(gens)
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}") from exc

    def walk(node) -> Polynomial:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ValueError(f"non-integer literal {node.value!r} in {text!r}")
            return Polynomial.constant(node.value, gens)
        if isinstance(node, ast.Name):
            if node.id == "I":
                return Polynomial.constant(GaussianRational(0, 1), gens)
            if node.id not in gens:
                raise ValueError(f"unknown variable {node.id!r} in {text!r}")
            return Polynomial.var(node.id, gens)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if right.total_degree() > 0 or not right:
                    raise ValueError(f"division by a non-constant in {text!r}")
                return left / right.constant_term()
            if isinstance(node.op, ast.Pow):
                if right.total_degree() > 0 or not isinstance(node.right, ast.Constant):
                    raise ValueError(f"non-integer exponent in {text!r}")
                return left ** int(node.right.value)
        raise ValueError(f"unsupported syntax in {text!r}")

    return walk(tree)


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``grlex`` or ``lex`` with variables ranked by ``gens`` order."""

    kind: str
    gens: tuple

    def __post_init__(self):
        if self.kind not in ("grevlex", "grlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "gens", tuple(self.gens))

    @property
    def graded(self) -> bool:
        return self.kind != "lex"

    def key(self, e: tuple) -> tuple:
        if self.kind == "lex":
            return e
        if self.kind == "grlex":
            return (sum(e),) + e
        return (sum(e),) + tuple(-x for x in reversed(e))

    def check(self, gens: tuple) -> None:
        if gens != self.gens:
            raise ValueError(f"order is over {self.gens}, polynomial over {gens}")

    def with_gens(self, gens: Sequence[str]) -> "MonomialOrder":
        return MonomialOrder(self.kind, tuple(gens))


# ---------------------------------------------------------------------------
# division and Buchberger

# internal basis element: (leading exponent, leading coefficient, terms dict)


def _divides(a: tuple, b: tuple) -> bool:
    return all(map(le, a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(map(max, a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _reduce(terms: dict, basis: list, key, full: bool = True) -> dict:
    """Multivariate division remainder of ``terms`` by ``basis``."""
    f = dict(terms)
    heap = [tuple(-k for k in key(e)) + (e,) for e in f]
    heapq.heapify(heap)
    rem = {}
    while heap:
        item = heapq.heappop(heap)
        m = item[-1]
        c = f.pop(m, None)
        if c is None:
            continue
        for g_lm, g_lc, g_terms in basis:
            if _divides(g_lm, m):
                q = tuple(x - y for x, y in zip(m, g_lm))
                factor = c / g_lc
                for e, a in g_terms.items():
                    if e == g_lm:
                        continue
                    ne = tuple(x + y for x, y in zip(e, q))
                    old = f.get(ne)
                    if old is None:
                        f[ne] = -factor * a
                        heapq.heappush(heap, tuple(-k for k in key(ne)) + (ne,))
                    else:
                        v = old - factor * a
                        if v:
                            f[ne] = v
                        else:
                            del f[ne]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(f)
                return rem
    return rem


def _internal(p: Polynomial, key) -> tuple:
    lm = max(p.terms, key=key)
    return lm, p.terms[lm], p.terms


def _check_gens(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> None:
    order.check(f.gens)
    for g in G:
        if g.gens != f.gens:
            raise ValueError(f"variable-set mismatch: {g.gens} vs {f.gens}")


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of f on division by G; no remainder term is divisible by any lm(G)."""
    if not G:
        raise ValueError("division by an empty list")
    _check_gens(f, G, order)
    basis = [_internal(g, order.key) for g in G if g]
    rem = _reduce(f.terms, basis, order.key)
    return Polynomial._wrap({e: _norm_coeff(c) for e, c in rem.items()}, f.gens)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    (a, ca), (b, cb) = f.leading_term(order), g.leading_term(order)
    m = _lcm(a, b)
    mf = Polynomial._wrap({tuple(x - y for x, y in zip(m, a)): Fraction(1)}, f.gens)
    mg = Polynomial._wrap({tuple(x - y for x, y in zip(m, b)): Fraction(1)}, f.gens)
    return mf * f / ca - mg * g / cb


def _spoly_terms(p1: tuple, p2: tuple) -> dict:
    (a, ca, t1), (b, cb, t2) = p1, p2
    m = _lcm(a, b)
    q1 = tuple(x - y for x, y in zip(m, a))
    q2 = tuple(x - y for x, y in zip(m, b))
    out: dict = {}
    for e, c in t1.items():
        out[tuple(x + y for x, y in zip(e, q1))] = c / ca
    for e, c in t2.items():
        ne = tuple(x + y for x, y in zip(e, q2))
        v = out.get(ne, 0) - c / cb
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return out


@dataclass
class BuchbergerStats:
    pairs_reduced: int = 0
    pairs_skipped: int = 0
    basis_size: int = 0
    seconds: float = 0.0


def groebner(
    generators: Sequence[Polynomial],
    order: MonomialOrder,
    cap: int = DEFAULT_CAP,
    stats: BuchbergerStats | None = None,
) -> list[Polynomial]:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are pruned with the Gebauer-Moeller update (coprime and chain
    criteria) and processed lowest lcm first.  ``cap`` bounds the number of
    S-polynomial reductions; exceeding it raises ResourceCapExceeded.
    """
    t0 = time.perf_counter()
    stats = stats if stats is not None else BuchbergerStats()
    gens = None
    for g in generators:
        if gens is None:
            gens = g.gens
        elif g.gens != gens:
            raise ValueError("generators over different variables")
    if gens is None:
        return []
    order.check(gens)
    key = order.key

    polys: list[tuple] = []
    active: list[int] = []
    pairs: dict[tuple[int, int], tuple] = {}  # (i, j) -> lcm
    queue: list[tuple] = []  # (order key of lcm, i, j); stale entries skipped

    def update(h_terms: dict) -> None:
        lc_exp = max(h_terms, key=key)
        lc = h_terms[lc_exp]
        h = (lc_exp, Fraction(1), {e: _norm_coeff(c / lc) for e, c in h_terms.items()})
        hi = len(polys)
        polys.append(h)
        lm_h = h[0]
        new = [(i, _lcm(polys[i][0], lm_h)) for i in active]
        kept = []
        for idx, (i, m) in enumerate(new):
            if _coprime(polys[i][0], lm_h):
                kept.append((i, m))
                continue
            others = new[:idx] + new[idx + 1 :]
            dominated = False
            for j, m2 in others:
                if _divides(m2, m) and (m2 != m or j < i):
                    dominated = True
                    break
            if not dominated:
                kept.append((i, m))
        for i, m in kept:
            if _coprime(polys[i][0], lm_h):
                stats.pairs_skipped += 1
            else:
                pairs[(i, hi)] = m
                heapq.heappush(queue, (key(m), i, hi))
        for (i, j), m in list(pairs.items()):
            if j == hi:
                continue
            if _divides(lm_h, m) and _lcm(polys[i][0], lm_h) != m and _lcm(polys[j][0], lm_h) != m:
                del pairs[(i, j)]
                stats.pairs_skipped += 1
        still = [i for i in active if not _divides(lm_h, polys[i][0])]
        still.append(hi)
        active[:] = still

    for g in generators:
        if not g:
            continue
        basis = [polys[i] for i in active]
        r = _reduce(g.terms, basis, key) if basis else dict(g.terms)
        if r:
            update(r)

    while queue:
        _, i, j = heapq.heappop(queue)
        if pairs.pop((i, j), None) is None:
            continue
        stats.pairs_reduced += 1
        if stats.pairs_reduced > cap:
            stats.seconds = time.perf_counter() - t0
            raise ResourceCapExceeded(f"Buchberger exceeded {cap} pair reductions")
        s = _spoly_terms(polys[i], polys[j])
        if not s:
            continue
        r = _reduce(s, [polys[k] for k in active], key)
        if r:
            update(r)

    # interreduce into the reduced basis
    minimal = [polys[i] for i in active]
    reduced = []
    for k, p in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        r = _reduce(p[2], others, key)
        lm = max(r, key=key)
        lc = r[lm]
        reduced.append(Polynomial._wrap({e: _norm_coeff(c / lc) for e, c in r.items()}, gens))
    reduced.sort(key=lambda p: key(max(p.terms, key=key)), reverse=True)
    stats.basis_size = len(reduced)
    stats.seconds = time.perf_counter() - t0
    return reduced


def is_groebner_basis(G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Check Buchberger's criterion exhaustively: every S-polynomial reduces to 0."""
    G = [g for g in G if g]
    if not G:
        return True
    basis = [_internal(g, order.key) for g in G]
    for a, b in combinations(basis, 2):
        s = _spoly_terms(a, b)
        if s and _reduce(s, basis, order.key):
            return False
    return True


# ---------------------------------------------------------------------------
# ideals


@dataclass
class PolynomialIdeal:
    generators: list
    gens: tuple
    _gb_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __init__(self, generators: Iterable[Polynomial], gens: Sequence[str] | None = None):
        generators = list(generators)
        if gens is None:
            if not generators:
                raise ValueError("need gens for an empty generator list")
            gens = generators[0].gens
        self.gens = tuple(gens)
        for g in generators:
            if g.gens != self.gens:
                raise ValueError(f"generator over {g.gens}, ideal over {self.gens}")
        self.generators = [g for g in generators if g]
        self._gb_cache = {}

    @classmethod
    def parse(cls, strings: Iterable[str], gens: Sequence[str]) -> "PolynomialIdeal":
        return cls([parse_polynomial(s, gens) for s in strings], gens)

    def default_order(self) -> MonomialOrder:
        return MonomialOrder("grevlex", self.gens)

    def groebner(self, order: MonomialOrder | None = None, cap: int = DEFAULT_CAP) -> list[Polynomial]:
        order = order or self.default_order()
        if order not in self._gb_cache:
            self._gb_cache[order] = groebner(self.generators, order, cap)
        return self._gb_cache[order]

    def contains(self, f: Polynomial, order: MonomialOrder | None = None, cap: int = DEFAULT_CAP) -> bool:
        order = order or self.default_order()
        gb = self.groebner(order, cap)
        if not gb:
            return not f
        return not normal_form(f, gb, order)

    def vanishes_at(self, point) -> bool:
        return all(not g.evaluate(point) for g in self.generators)

    def to_json(self) -> dict:
        order = self.default_order()
        return {"variables": list(self.gens), "generators": [g.to_str(order) for g in self.generators]}


def load_ideal(data: str | dict) -> PolynomialIdeal:
    """Read the ideal file format ``{"variables": [...], "generators": [...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "variables" not in data or "generators" not in data:
        raise ValueError("ideal file needs 'variables' and 'generators'")
    return PolynomialIdeal.parse(data["generators"], data["variables"])


def ideal_equal(I: PolynomialIdeal, J: PolynomialIdeal, order: MonomialOrder | None = None, cap: int = DEFAULT_CAP) -> bool:
    """Mutual containment via normal forms against each other's Groebner basis."""
    if set(I.gens) != set(J.gens):
        raise ValueError("ideals over different variable sets")
    if I.gens != J.gens:
        J = PolynomialIdeal([g.with_gens(I.gens) for g in J.generators], I.gens)
    order = order.with_gens(I.gens) if order else I.default_order()
    return all(J.contains(f, order, cap) for f in I.generators) and all(
        I.contains(f, order, cap) for f in J.generators
    )


def homogenize_ideal(I: PolynomialIdeal, t: str = "t", cap: int = DEFAULT_CAP) -> PolynomialIdeal:
    """The homogenization of I, generated by the homogenized graded Groebner basis.

    Homogenizing the raw generators can give a strictly smaller ideal, so
    the basis is computed first under grevlex.
    """
    gb = I.groebner(MonomialOrder("grevlex", I.gens), cap)
    return PolynomialIdeal([g.homogenize(t) for g in gb], I.gens + (t,))


def dehomogenize_ideal(I: PolynomialIdeal, t: str = "t") -> PolynomialIdeal:
    k = I.gens.index(t)
    gens = I.gens[:k] + I.gens[k + 1 :]
    return PolynomialIdeal([g.dehomogenize(t) for g in I.generators], gens)


def substitute_linear(
    I: PolynomialIdeal, mapping: Mapping[str, Polynomial], target_gens: Sequence[str]
) -> PolynomialIdeal:
    """Pull I back along a linear substitution of its variables."""
    target_gens = tuple(target_gens)
    for v, img in mapping.items():
        if isinstance(img, Polynomial) and img.total_degree() > 1:
            raise ValueError(f"image of {v} is not linear")
    return PolynomialIdeal([g.substitute(mapping, target_gens) for g in I.generators], target_gens)


# ---------------------------------------------------------------------------
# the two ambient ideals


def _names(prefix: str, dim: int) -> list[list[str]]:
    sep = "_" if dim >= 10 else ""
    return [[f"{prefix}{i + 1}{sep}{j + 1}" for j in range(dim)] for i in range(dim)]


def sl_variables(n: int, prefix: str = "a") -> tuple:
    """Independent sl(n+1) coordinates: every a_ij except the last diagonal one."""
    names = _names(prefix, n + 1)
    return tuple(names[i][j] for i in range(n + 1) for j in range(n + 1) if (i, j) != (n, n))


def segre_variables(n: int, prefix: str = "z") -> tuple:
    names = _names(prefix, n + 1)
    return tuple(x for row in names for x in row)


def _poly_matmul(A, B):
    m = len(A)
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = None
            for k in range(m):
                if A[i][k] and B[k][j]:
                    t = A[i][k] * B[k][j]
                    acc = t if acc is None else acc + t
            row.append(acc if acc is not None else A[0][0] * 0)
        out.append(row)
    return out


def symbolic_sl_matrix(n: int, gens: Sequence[str], names: Sequence[str] | None = None):
    """Generic trace-zero matrix whose last diagonal entry is minus the others."""
    names = list(names) if names is not None else list(sl_variables(n))
    dim = n + 1
    it = iter(names)
    A = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            if (i, j) != (n, n):
                A[i][j] = Polynomial.var(next(it), gens)
    last = Polynomial.zero(gens)
    for i in range(n):
        last = last - A[i][i]
    A[n][n] = last
    return A


def orbit_ideal(spec, names: Sequence[str] | None = None) -> PolynomialIdeal:
    """Entries of the minimal polynomial of H0 evaluated at a generic trace-zero A.

    ``spec`` is an OrbitSpec or an integer n (minimal orbit).  For the
    minimal orbit this is the (n+1)^2 entries of (A - n I)(A + I).
    """
    if isinstance(spec, int):
        n = spec
        roots = [Fraction(n), Fraction(-1)]
    else:
        n = spec.n
        roots = []
        for x in spec.H0.diagonal():
            if not x.is_real():
                raise ValueError("orbit ideal needs a rational H0")
            if x.re not in roots:
                roots.append(x.re)
    gens = tuple(names) if names is not None else sl_variables(n)
    if len(gens) != (n + 1) ** 2 - 1:
        raise ValueError(f"need {(n + 1) ** 2 - 1} variable names")
    A = symbolic_sl_matrix(n, gens, gens)
    dim = n + 1
    prod = None
    for r in roots:
        shifted = [[A[i][j] - (r if i == j else 0) for j in range(dim)] for i in range(dim)]
        prod = shifted if prod is None else _poly_matmul(prod, shifted)
    return PolynomialIdeal([p for row in prod for p in row], gens)


def minors_ideal(n: int, names: Sequence[str] | None = None) -> PolynomialIdeal:
    """All 2x2 minors z_ij z_kl - z_il z_kj (i<k, j<l) of a generic (n+1)x(n+1) matrix."""
    dim = n + 1
    gens = tuple(names) if names is not None else segre_variables(n)
    Z = [[Polynomial.var(gens[i * dim + j], gens) for j in range(dim)] for i in range(dim)]
    gensets = []
    for i, k in combinations(range(dim), 2):
        for j, l in combinations(range(dim), 2):
            gensets.append(Z[i][j] * Z[k][l] - Z[i][l] * Z[k][j])
    return PolynomialIdeal(gensets, gens)


def ambient_substitution(n: int, t: str = "t") -> tuple[dict, tuple]:
    """Linear map a_ij -> (n+1) z_ij - delta_ij tr Z, t -> tr Z.

    Returns the mapping over the independent sl coordinates plus ``t`` and
    the target generator tuple of z variables.
    """
    dim = n + 1
    zg = segre_variables(n)
    Z = [[Polynomial.var(zg[i * dim + j], zg) for j in range(dim)] for i in range(dim)]
    tr = Polynomial.zero(zg)
    for i in range(dim):
        tr = tr + Z[i][i]
    mapping = {}
    names = _names("a", dim)
    for i in range(dim):
        for j in range(dim):
            if (i, j) == (n, n):
                continue
            img = Z[i][j] * dim
            if i == j:
                img = img - tr
            mapping[names[i][j]] = img
    mapping[t] = tr
    return mapping, zg


def homogenized_raw_generators(n: int, t: str = "t") -> PolynomialIdeal:
    """Entries of (A - n t Id)(A + t Id): the homogenized generators themselves."""
    I = orbit_ideal(n)
    return PolynomialIdeal([g.homogenize(t) for g in I.generators], I.gens + (t,))


@dataclass
class SegreComparison:
    n: int
    equal: bool
    homogenized_basis_size: int
    minors_count: int
    seconds: float
    forward: bool = False
    backward: bool = False
    homogenized: list = field(default_factory=list)


def compare_with_segre(n: int, cap: int = DEFAULT_CAP) -> SegreComparison:
    """Pull the homogenized orbit ideal back to the Segre ambient and compare with the minors."""
    t0 = time.perf_counter()
    I = orbit_ideal(n)
    hom = homogenize_ideal(I, "t", cap)
    mapping, zg = ambient_substitution(n)
    pulled = substitute_linear(hom, mapping, zg)
    minors = minors_ideal(n)
    order = MonomialOrder("grevlex", zg)
    forward = all(minors.contains(f, order, cap) for f in pulled.generators)
    backward = forward and all(pulled.contains(f, order, cap) for f in minors.generators)
    return SegreComparison(
        n=n,
        equal=forward and backward,
        homogenized_basis_size=len(hom.generators),
        minors_count=len(minors.generators),
        seconds=time.perf_counter() - t0,
        forward=forward,
        backward=backward,
        homogenized=pulled.generators,
    )
