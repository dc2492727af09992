from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import settings
from hypothesis import strategies as st

from legendrify.algebra import GaussianRational, Poly, RationalFn

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

Z_SYM = sp.Symbol("z")

small_fraction = st.fractions(min_value=-5, max_value=5, max_denominator=7)
gaussian = st.builds(GaussianRational, small_fraction, small_fraction)
nonzero_gaussian = gaussian.filter(lambda g: not g.is_zero())


def polys(max_degree: int = 4):
    return st.lists(gaussian, min_size=0, max_size=max_degree + 1).map(Poly)


def nonzero_polys(max_degree: int = 4):
    return polys(max_degree).filter(lambda p: not p.is_zero())


def rational_fns(max_degree: int = 3):
    return st.builds(RationalFn, polys(max_degree), nonzero_polys(max_degree))


def to_sympy(f) -> sp.Expr:
    """Independent symbolic image of a Poly or RationalFn."""
    def g(c: GaussianRational):
        return sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)

    def p(q: Poly):
        return sum((g(c) * Z_SYM ** k for k, c in enumerate(q.coeffs)), sp.Integer(0))

    if isinstance(f, Poly):
        return p(f)
    return p(f.num) / p(f.den)


def sym_equal(a, b) -> bool:
    return sp.cancel(sp.expand(a - b)) == 0


def random_gr(rnd: random.Random, span: int = 9, den: int = 4) -> GaussianRational:
    return GaussianRational(Fraction(rnd.randint(-span, span), rnd.randint(1, den)),
                            Fraction(rnd.randint(-span, span), rnd.randint(1, den)))


def random_poly(rnd: random.Random, deg: int, span: int = 9) -> Poly:
    return Poly([random_gr(rnd, span) for _ in range(deg + 1)])


@pytest.fixture
def rnd():
    return random.Random(20261016)


# -- acceptance summary ----------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def record(label: str, ok: bool, detail: str) -> None:
    line = f"{label}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
