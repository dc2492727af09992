from __future__ import annotations

import warnings
from fractions import Fraction

import pytest

from legendrify.algebra import GR, Poly, RationalFn
from legendrify.domain import CircularDomain, Cycle, Disc, homology_basis
from legendrify.errors import NonzeroPeriods, PoleInDomain, UnfactoredPoleInHole
from legendrify.periods import (
    TWO_PI_I,
    antiderivative_on_domain,
    periods_exact,
    periods_quadrature,
    quadrature_check,
    reduced_periods_numeric,
    zero_count,
)

P = RationalFn.parse
ANNULUS = CircularDomain.annulus(Fraction(1, 2), 2)
TWO_HOLES = CircularDomain(Disc(0, 10), (Disc(2, Fraction(1, 2)), Disc(-2, Fraction(1, 2))))
UNIT = Cycle(0, 1)


def test_reduced_period_examples():
    assert periods_exact(P("1/z"), ANNULUS).reduced == (GR(1),)
    assert periods_exact(P("1/z^2"), ANNULUS).is_zero()
    pv = periods_exact(P("2/(z-2) + 3/(z+2)"), TWO_HOLES)
    assert pv.reduced == (GR(2), GR(3)) and str(pv) == "(2, 3)"
    numeric = reduced_periods_numeric(P("2/(z-2) + 3/(z+2)"), TWO_HOLES)
    assert all(abs(a - complex(b)) < 1e-10 for a, b in zip(numeric, pv.reduced))


def test_pole_in_domain():
    with pytest.raises(PoleInDomain):
        periods_exact(P("1/(z-1)"), ANNULUS)


def test_unsplit_pole_falls_back_to_quadrature():
    omega = P("1/(z^3 - 1/10)")  # roots of modulus 0.46, irrational
    with pytest.warns(UnfactoredPoleInHole):
        pv = periods_exact(omega, ANNULUS)
    assert not pv.exact
    # three simple poles with residues summing to 0 (degree difference 3)
    assert abs(complex(pv.reduced[0])) < 1e-9
    with pytest.raises(UnfactoredPoleInHole), warnings.catch_warnings():
        warnings.simplefilter("ignore")
        periods_exact(omega, ANNULUS, strict=True)


def test_quadrature_closed_forms():
    assert abs(periods_quadrature(P("1/z"), UNIT, 512) - TWO_PI_I) < 1e-12
    assert abs(periods_quadrature(P("1"), Cycle(GR(1, 1), 3), 512)) < 1e-12
    assert abs(periods_quadrature(P("z"), UNIT, 512)) < 1e-12
    with pytest.raises(ValueError):
        periods_quadrature(P("z"), UNIT, 8)


def test_quadrature_callable_and_orientation():
    val = periods_quadrature(lambda z: 1 / z, Cycle(0, 1, -1), 256)
    assert abs(val + TWO_PI_I) < 1e-12


def test_quadrature_check_doubling():
    chk = quadrature_check(P("1/(z-1/10) + z^3"), UNIT)
    assert chk.analytic and chk.change <= 1e-10
    assert abs(chk.value - TWO_PI_I) < 1e-10


def test_zero_count_examples():
    assert zero_count(P("z^2 - 1/16"), UNIT) == 2
    assert zero_count(P("1"), Cycle(GR(3), 1)) == 0
    assert zero_count(P("2*z + 1/10"), UNIT) == 1
    assert zero_count(P("(z-1/2)/(z^2*(z-5))"), UNIT) == -1


def test_antiderivative_on_domain_examples():
    eps = Fraction(1, 100)
    omega = RationalFn.const(GR(-2 * eps)) * P("z")
    assert antiderivative_on_domain(omega, ANNULUS) == RationalFn.const(GR(-eps)) * P("z^2")
    with pytest.raises(NonzeroPeriods) as err:
        antiderivative_on_domain(P("1/z"), ANNULUS)
    assert err.value.periods.reduced == (GR(1),)
    assert antiderivative_on_domain(P("1/z^2"), ANNULUS) == P("-1/z")


def test_random_forms_match_quadrature(rnd):
    """Exact residue sums against 512-node quadrature over each homology cycle."""
    d = TWO_HOLES
    for _ in range(25):
        poles = [GR(2) + GR(Fraction(rnd.randint(-3, 3), 10), Fraction(rnd.randint(-3, 3), 10)),
                 GR(-2) + GR(Fraction(rnd.randint(-3, 3), 10), Fraction(rnd.randint(-3, 3), 10)),
                 GR(0, 20)]
        den = Poly.from_roots(poles + poles[:1])
        num = Poly([GR(rnd.randint(-5, 5), rnd.randint(-5, 5)) for _ in range(3)])
        omega = RationalFn(num, den)
        pv = periods_exact(omega, d)
        for cy, v in zip(homology_basis(d), pv.reduced):
            q = periods_quadrature(omega, cy, 512)
            exact = complex(v) * TWO_PI_I
            assert abs(q - exact) <= 1e-9 * max(abs(exact), 1.0)
