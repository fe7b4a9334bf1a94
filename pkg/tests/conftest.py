from fractions import Fraction

import sympy
from hypothesis import strategies as st

from lgsegre.exact import GaussianRational, SquareMatrix
from lgsegre.orbit import make_rng, random_scalar


def to_sympy(x):
    x = x if isinstance(x, GaussianRational) else GaussianRational(x)
    return sympy.Rational(x.re.numerator, x.re.denominator) + sympy.I * sympy.Rational(
        x.im.numerator, x.im.denominator
    )


def from_sympy(e):
    re, im = sympy.expand(e).as_real_imag()
    return GaussianRational(Fraction(str(re)), Fraction(str(im)))


def sympy_matrix(A: SquareMatrix):
    return sympy.Matrix([[to_sympy(x) for x in row] for row in A.rows])


def seeded_matrix(seed, dim, num=5, den=4):
    rng = make_rng(seed)
    return SquareMatrix([[random_scalar(rng, num, den) for _ in range(dim)] for _ in range(dim)])


small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(bool)


def gaussian_matrices(dim):
    return st.lists(st.lists(gaussians, min_size=dim, max_size=dim), min_size=dim, max_size=dim).map(SquareMatrix)


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.RESULTS:
        terminalreporter.write_line(line)
