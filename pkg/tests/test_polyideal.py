import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lgsegre.exact import I_UNIT
from lgsegre.orbit import OrbitSpec, adjoint_point, make_rng, random_vector, sample_sl
from lgsegre.polyideal import (
    BuchbergerStats,
    MonomialOrder,
    Polynomial,
    PolynomialIdeal,
    ResourceCapExceeded,
    ambient_substitution,
    compare_with_segre,
    dehomogenize_ideal,
    groebner,
    homogenize_ideal,
    homogenized_raw_generators,
    ideal_equal,
    is_groebner_basis,
    load_ideal,
    minors_ideal,
    normal_form,
    orbit_ideal,
    parse_polynomial,
    s_polynomial,
    substitute_linear,
)

XYZ = ("x", "y", "z")


def P(text, gens=XYZ):
    return parse_polynomial(text, gens)


def sympy_reduced_basis(polys, gens, order):
    symbols = sympy.symbols(gens)
    exprs = [sympy.sympify(p.to_str().replace("^", "**"), locals=dict(zip(gens, symbols))) for p in polys]
    gb = sympy.groebner(exprs, *symbols, order=order)
    return {sympy.Poly(g, *symbols).monic().as_expr() for g in gb.exprs}


def as_sympy_set(polys, gens):
    symbols = sympy.symbols(gens)
    out = set()
    for p in polys:
        e = sympy.sympify(p.to_str().replace("^", "**"), locals=dict(zip(gens, symbols)))
        out.add(sympy.Poly(e, *symbols).monic().as_expr())
    return out


# polynomial arithmetic and parsing


def test_parse_and_print():
    f = P("x^2 + y*z - 1")
    assert f.to_str(MonomialOrder("grevlex", XYZ)) == "x^2 + y*z - 1"
    assert P("(x+y)^2") == P("x^2 + 2*x*y + y^2")
    assert P("x/2") == P("x") * Fraction(1, 2)
    assert P("I*x") == P("x") * I_UNIT
    with pytest.raises(ValueError):
        P("0.5*x")
    with pytest.raises(ValueError):
        P("w")


def test_polynomial_queries():
    f = P("x^3 + 2*y - 5")
    assert f.total_degree() == 3
    assert not f.is_homogeneous()
    assert f.constant_term() == -5
    assert f.diff("x") == P("3*x^2")
    assert f.evaluate({"x": 1, "y": 2, "z": 0}) == 0
    assert f.homogenize("t") == parse_polynomial("x^3 + 2*y*t^2 - 5*t^3", XYZ + ("t",))
    assert f.homogenize("t").dehomogenize("t") == f


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-5, 5)), max_size=5))
def test_ring_axioms(data):
    f = sum((Polynomial.constant(c, ("x", "y")) * P(f"x^{a}*y^{b}", ("x", "y")) for a, b, c in data),
            Polynomial.zero(("x", "y")))
    g = P("x - 2*y + 1", ("x", "y"))
    assert f * g == g * f
    assert (f + g) * g == f * g + g * g
    assert f - f == Polynomial.zero(("x", "y"))


def test_monomial_orders():
    e1, e2 = (1, 0, 2), (0, 2, 1)  # x z^2 vs y^2 z
    assert MonomialOrder("lex", XYZ).key(e1) > MonomialOrder("lex", XYZ).key(e2)
    assert MonomialOrder("grlex", XYZ).key(e1) > MonomialOrder("grlex", XYZ).key(e2)
    assert MonomialOrder("grevlex", XYZ).key(e1) < MonomialOrder("grevlex", XYZ).key(e2)
    with pytest.raises(ValueError):
        MonomialOrder("weird", XYZ)


# division and Groebner bases


def test_normal_form_examples():
    order = MonomialOrder("grevlex", XYZ)
    g = P("x^2 + y*z - 1")
    assert normal_form(g, [g], order).is_zero()
    r = normal_form(P("x^2"), [g], order)
    assert r == P("1 - y*z")
    assert normal_form(r, [g], order) == r


def test_s_polynomial_cancels_leading_terms():
    order = MonomialOrder("grevlex", XYZ)
    f, g = P("x^2*y - 1"), P("x*y^2 - x")
    s = s_polynomial(f, g, order)
    assert s == P("x^2 - y")


IDEALS = [
    (["x^2 + y*z - 1"], XYZ),
    (["y - x^2", "z - x^3"], XYZ),
    (["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"], XYZ),
    (["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"], ("x", "y")),
    (["x*y - z^2", "y^2 - x*z + 3", "x^2*z - y"], XYZ),
]


@pytest.mark.parametrize("kind, sympy_kind", [("grevlex", "grevlex"), ("grlex", "grlex"), ("lex", "lex")])
@pytest.mark.parametrize("strings, gens", IDEALS)
def test_groebner_matches_sympy(strings, gens, kind, sympy_kind):
    polys = [parse_polynomial(s, gens) for s in strings]
    order = MonomialOrder(kind, gens)
    G = groebner(polys, order)
    assert is_groebner_basis(G, order)
    assert as_sympy_set(G, gens) == sympy_reduced_basis(polys, gens, sympy_kind)


def test_groebner_of_principal_ideal_is_monic_generator():
    order = MonomialOrder("grevlex", XYZ)
    assert groebner([P("3*x^2 - 6*y")], order) == [P("x^2 - 2*y")]


def test_sl2_orbit_ideal_is_the_quadric():
    I = orbit_ideal(1)
    J = PolynomialIdeal.parse(["a11^2 + a12*a21 - 1"], I.gens)
    assert ideal_equal(I, J)


def test_cap_is_enforced():
    polys = [P(s) for s in IDEALS[4][0]]
    stats = BuchbergerStats()
    G = groebner(polys, MonomialOrder("grevlex", XYZ), stats=stats)
    assert stats.basis_size == len(G) and stats.pairs_reduced > 2
    with pytest.raises(ResourceCapExceeded):
        groebner(polys, MonomialOrder("grevlex", XYZ), cap=2)
    assert groebner(polys, MonomialOrder("grevlex", XYZ), cap=stats.pairs_reduced) == G


@settings(max_examples=25, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(0, 2), st.integers(0, 2))
def test_ideal_membership_of_combinations(a, b, i, k):
    I = PolynomialIdeal.parse(["y - x^2", "z - x^3"], XYZ)
    f = P(f"{a}*x^{i} + z") * I.generators[0] + P(f"{b}*y^{k}") * I.generators[1]
    assert I.contains(f)
    assert not I.contains(f + P("x"))


def test_ideal_equality_examples():
    I = PolynomialIdeal.parse(["x*y - 1", "x + z"], XYZ)
    J = PolynomialIdeal.parse(["2*x + 2*z", "x*y - 1 + 5*(x + z)"], XYZ)
    assert ideal_equal(I, J)
    assert not ideal_equal(PolynomialIdeal.parse(["x"], XYZ), PolynomialIdeal.parse(["x^2"], XYZ))


# homogenization


def test_homogenize_sl2():
    H = homogenize_ideal(orbit_ideal(1))
    assert ideal_equal(H, PolynomialIdeal.parse(["a11^2 + a12*a21 - t^2"], H.gens))


def test_homogenization_needs_a_graded_basis():
    I = PolynomialIdeal.parse(["y - x^2", "z - x^3"], XYZ)
    H = homogenize_ideal(I, "w")
    gens = H.gens
    raw = PolynomialIdeal([g.homogenize("w") for g in I.generators], gens)
    missing = parse_polynomial("y^2 - x*z", gens)
    assert H.contains(missing)
    assert not raw.contains(missing)
    for g in dehomogenize_ideal(H, "w").generators:
        assert I.contains(g)


def test_homogenizing_a_homogeneous_ideal_is_stable():
    I = PolynomialIdeal.parse(["x^2 - y*z", "x*y - z^2"], XYZ)
    H = homogenize_ideal(I, "t")
    assert ideal_equal(H, PolynomialIdeal([g.with_gens(H.gens) for g in I.generators], H.gens))


# linear substitution and the Segre comparison


def test_identity_substitution():
    I = PolynomialIdeal.parse(["x^2 - y", "z*x - 1"], XYZ)
    ident = {g: Polynomial.var(g, XYZ) for g in XYZ}
    assert ideal_equal(substitute_linear(I, ident, XYZ), I)
    with pytest.raises(ValueError):
        substitute_linear(I, {"x": P("y*z"), "y": P("y"), "z": P("z")}, XYZ)


def test_substitution_composes():
    I = PolynomialIdeal.parse(["x^2 - y*z + 1"], XYZ)
    m1 = {"x": P("x + y"), "y": P("2*z"), "z": P("x - z")}
    m2 = {"x": P("z"), "y": P("x + 3"), "z": P("y")}
    once = substitute_linear(substitute_linear(I, m1, XYZ), m2, XYZ)
    composed = {k: v.substitute(m2, XYZ) for k, v in m1.items()}
    assert once.generators == substitute_linear(I, composed, XYZ).generators


def test_sl2_pullback_vanishes_on_rank_one():
    mapping, zg = ambient_substitution(1)
    pulled = substitute_linear(homogenize_ideal(orbit_ideal(1)), mapping, zg)
    rng = make_rng(75)
    for _ in range(20):
        v, w = random_vector(rng, 2), random_vector(rng, 2)
        assert pulled.vanishes_at([a * b for a in v for b in w])
    assert not pulled.vanishes_at([1, 0, 0, 1])


def test_minors_ideal_sl2():
    M = minors_ideal(1)
    assert ideal_equal(M, PolynomialIdeal.parse(["z11*z22 - z12*z21"], M.gens))


def test_orbit_ideal_sl3_vanishes_on_orbit():
    I = orbit_ideal(2)
    assert len(I.generators) == 9 and all(g.total_degree() == 2 for g in I.generators)
    spec = OrbitSpec(2)
    for seed in range(20):
        A = adjoint_point(sample_sl(2, seed), spec)
        point = [A[i, j] for i in range(3) for j in range(3)][:-1]
        assert I.vanishes_at(point)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_segre_comparison(n):
    res = compare_with_segre(n)
    assert res.equal and res.forward and res.backward


@pytest.mark.slow
def test_segre_comparison_sl5():
    res = compare_with_segre(4)
    assert res.equal and res.minors_count == 100


def test_segre_comparison_against_sympy_for_sl3():
    res = compare_with_segre(2)
    gens = minors_ideal(2).gens
    assert sympy_reduced_basis(res.homogenized, gens, "grevlex") == sympy_reduced_basis(
        minors_ideal(2).generators, gens, "grevlex"
    )


def test_raw_homogenized_generators_lie_in_the_homogenization():
    for n in (1, 2):
        H = homogenize_ideal(orbit_ideal(n))
        raw = homogenized_raw_generators(n)
        assert all(H.contains(g.with_gens(H.gens)) for g in raw.generators)


def test_raw_homogenization_is_strictly_smaller_for_sl4():
    H = homogenize_ideal(orbit_ideal(3))
    raw = PolynomialIdeal([g.with_gens(H.gens) for g in homogenized_raw_generators(3).generators], H.gens)
    assert all(H.contains(g) for g in raw.generators)
    assert not all(raw.contains(g) for g in H.generators)


def test_ideal_file_roundtrip():
    I = PolynomialIdeal.parse(["x^2 + y*z - 1", "x - z"], XYZ)
    J = load_ideal(json.dumps(I.to_json()))
    assert J.gens == I.gens and J.generators == I.generators
    with pytest.raises(ValueError):
        load_ideal({"generators": []})
