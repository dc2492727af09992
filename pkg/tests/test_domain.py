from __future__ import annotations

import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_poly
from legendrify.algebra import GR, Poly, RationalFn
from legendrify.domain import CircularDomain, Cycle, Disc, holomorphic_on, homology_basis, winding_number
from legendrify.errors import IndeterminateWinding

P = RationalFn.parse
ANNULUS = CircularDomain.annulus(Fraction(1, 2), 2)
TWO_HOLES = CircularDomain(Disc(0, 10), (Disc(2, Fraction(1, 2)), Disc(-2, Fraction(1, 2))))


def quad_winding(cycle: Cycle, point: complex, n: int = 2048) -> float:
    """Independent oracle: winding of the cycle around a point by direct summation."""
    acc = 0j
    c, r = complex(cycle.center), float(cycle.radius)
    for k in range(n):
        w = c + r * cmath.exp(2j * cmath.pi * k / n)
        acc += (w - c) / (w - point)
    return (acc / n).real


def test_validation():
    with pytest.raises(ValueError):
        CircularDomain(Disc(0, 1), (Disc(0, 2),))
    with pytest.raises(ValueError):
        CircularDomain(Disc(0, 5), (Disc(1, 1), Disc(-1, 1)))  # touching closures
    with pytest.raises(ValueError):
        Disc(0, 0)


def test_locate():
    assert ANNULUS.locate(1) == ("interior", None)
    assert ANNULUS.locate(0) == ("hole", 0)
    assert ANNULUS.locate(Fraction(1, 2)) == ("boundary", 0)
    assert ANNULUS.locate(GR(0, 2)) == ("boundary", None)
    assert ANNULUS.locate(3) == ("outside", None)
    assert ANNULUS.betti == 1 and ANNULUS.contains(GR(1, 1))


def test_homology_basis_examples():
    (c,) = homology_basis(ANNULUS)
    assert c.center == GR(0) and Fraction(1, 2) < c.radius < 2
    assert homology_basis(CircularDomain.disc(0, 1)) == []
    cycles = homology_basis(TWO_HOLES)
    assert [cy.center for cy in cycles] == [GR(2), GR(-2)]
    for cy, own, other in zip(cycles, (2, -2), (-2, 2)):
        assert round(quad_winding(cy, own)) == 1
        assert round(quad_winding(cy, other)) == 0
        assert round(quad_winding(cy, 9.5)) == 0


@given(st.integers(1, 4), st.fractions(Fraction(1, 10), Fraction(9, 10)))
def test_homology_cycles_separate_holes(m, frac):
    holes = tuple(Disc(GR(3 * k - 3 * (m - 1) // 2 * 1), Fraction(1, 2) * frac) for k in range(m))
    d = CircularDomain(Disc(0, 4 * m + 2), holes)
    for k, cy in enumerate(homology_basis(d)):
        for j, h in enumerate(d.holes):
            assert round(quad_winding(cy, complex(h.center))) == (1 if j == k else 0)
        assert cy.radius > d.holes[k].radius


def test_winding_against_numpy_roots(rnd):
    for _ in range(20):
        p = random_poly(rnd, rnd.randint(1, 8))
        if p.is_zero() or p.degree < 1:
            continue
        roots = np.roots(p.to_complex()[::-1])
        r = 1.3
        if np.any(np.abs(np.abs(roots) - r) < 1e-3):
            continue
        assert winding_number(p, 0, Fraction(13, 10)) == int(np.sum(np.abs(roots) < r))


def test_winding_examples_and_guard():
    assert winding_number(Poly.from_roots([GR(Fraction(1, 4)), GR(Fraction(-1, 4))]), 0, 1) == 2
    assert winding_number(Poly.const(1), 0, 1) == 0
    with pytest.raises(IndeterminateWinding):
        winding_number(Poly([-1, 1]), 0, 1)
    with pytest.raises(IndeterminateWinding):
        winding_number(Poly(), 0, 1)


def test_holomorphy_examples():
    assert holomorphic_on(P("1/z"), ANNULUS)
    cert = holomorphic_on(P("1/(z-1)"), ANNULUS)
    assert not cert and cert.poles_in_domain == 1
    with pytest.raises(IndeterminateWinding):
        holomorphic_on(P("1/(z-1/2)"), ANNULUS)
    assert holomorphic_on(P("z^5 + 3"), ANNULUS)


def test_json_roundtrip():
    for d in (ANNULUS, TWO_HOLES, CircularDomain.disc(GR(1, 1), Fraction(3, 7))):
        assert CircularDomain.from_json(d.to_json()) == d


def test_boundary_samples_on_circles():
    z = ANNULUS.boundary_samples(64)
    assert z.shape == (128,)
    assert np.allclose(np.abs(z[:64]), 2) and np.allclose(np.abs(z[64:]), 0.5)
