from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from legendrify.algebra import GR, RationalFn
from legendrify.contact import (
    ContactChart,
    LegendrianCurve,
    LinearOneForm,
    ProjCurve,
    contact_nondegeneracy_check,
    contact_residual,
    fubini_study_distance,
    fubini_study_distances,
    wedge,
)
from legendrify.domain import CircularDomain
from legendrify.errors import AllZero, DomainMismatch, UnsupportedDimension, ZeroVector

P = RationalFn.parse
complex_vec = st.lists(st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
                       min_size=3, max_size=3).filter(lambda v: max(abs(x) for x in v) > 1e-3)


def curve(base, vert, domain=None):
    return LegendrianCurve(tuple(P(b) for b in base), ProjCurve(tuple(P(v) for v in vert), domain), False, domain)


def test_residual_examples():
    assert contact_residual(curve(("z", "z^2"), ("-2*z", "1"))).is_zero()
    assert contact_residual(curve(("z", "z^2"), ("1", "1"))) == P("1 + 2*z")
    assert contact_residual(curve(("0", "0"), ("z^3 + 1", "1/(z-7)"))).is_zero()


def test_residual_mismatch():
    with pytest.raises(DomainMismatch):
        contact_residual(curve(("z", "z^2", "1"), ("1", "1")))
    a = CircularDomain.disc(0, 1)
    b = CircularDomain.disc(0, 2)
    c = LegendrianCurve((P("z"), P("1")), ProjCurve((P("0"), P("1")), a), False, b)
    with pytest.raises(DomainMismatch):
        contact_residual(c)


def test_certify_and_json():
    c = LegendrianCurve.certify((P("z"), P("z^2")), ProjCurve((P("-2*z"), P("1"))))
    assert c.certified and c.is_horizontal()
    back = LegendrianCurve.from_json(c.to_json())
    assert back.base == c.base and back.vertical.components == c.vertical.components


def test_fubini_study_examples():
    assert fubini_study_distance([1, 0], [0, 1]) == pytest.approx(math.pi / 2)
    assert fubini_study_distance([1, 0], [2, 0]) == pytest.approx(0, abs=1e-15)
    assert fubini_study_distance([1, 1], [1, 0]) == pytest.approx(math.pi / 4)
    with pytest.raises(ZeroVector):
        fubini_study_distance([0, 0], [1, 0])


@given(complex_vec, complex_vec, st.complex_numbers(min_magnitude=0.1, max_magnitude=10,
                                                    allow_nan=False, allow_infinity=False))
def test_fubini_study_properties(p, q, lam):
    d = fubini_study_distance(p, q)
    assert 0 <= d <= math.pi / 2 + 1e-12
    assert d == pytest.approx(fubini_study_distance(q, p), abs=1e-12)
    assert d == pytest.approx(fubini_study_distance([lam * x for x in p], q), abs=1e-9)
    # oracle: arccos of the normalised Hermitian inner product
    pa, qa = np.asarray(p), np.asarray(q)
    cosv = abs(np.vdot(qa, pa)) / (np.linalg.norm(pa) * np.linalg.norm(qa))
    assert d == pytest.approx(math.acos(min(1.0, cosv)), abs=1e-6)


def test_fubini_study_vectorised():
    p = np.array([[1, 0], [1, 1]], dtype=complex)
    q = np.array([[0, 1], [1, 0]], dtype=complex)
    assert np.allclose(fubini_study_distances(p, q), [math.pi / 2, math.pi / 4])


def test_nondegeneracy_examples():
    samples = [(GR(1), GR(2), GR(0, 1)), (GR(0), GR(0), GR(0))]
    assert contact_nondegeneracy_check(ContactChart(1, "affine", 0), samples)
    dz = LinearOneForm(1, 3, (GR(1), GR(0), GR(0)), ({}, {}, {}))
    assert not contact_nondegeneracy_check(dz, samples)
    hom = ContactChart(2, "homogeneous")
    pt = (GR(1), GR(2), GR(3), GR(1), GR(0), GR(0))
    assert contact_nondegeneracy_check(hom, [pt])
    with pytest.raises(UnsupportedDimension):
        contact_nondegeneracy_check(ContactChart(4), [])


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("j", [0, 1])
def test_affine_top_form_is_volume(n, j):
    """alpha ^ (d alpha)^n = +-n! dx_0 ^ ... ^ dx_2n in every affine chart."""
    chart = ContactChart(n, "affine", j)
    top = chart.form().top_form([GR(k, 1) for k in range(chart.dim)])
    assert list(top) == [tuple(range(chart.dim))]
    assert abs(top[tuple(range(chart.dim))]) == math.factorial(n)


def test_wedge_antisymmetry():
    a = {(0,): GR(1)}
    b = {(1,): GR(1)}
    assert wedge(a, b) == {(0, 1): GR(1)}
    assert wedge(b, a) == {(0, 1): GR(-1)}
    assert wedge(a, a) == {}


def test_projcurve_canonical_and_equivalence():
    h = ProjCurve((P("2*z^2"), P("4*z")))
    c = h.canonical()
    assert c.components == (P("z"), P("2"))
    assert h.equivalent(c) and h.equivalent(h.scaled(P("1/(z+3)")))
    assert not h.equivalent(ProjCurve((P("z"), P("1"))))
    with pytest.raises(AllZero):
        ProjCurve((P("0"), P("0")))
    assert h.evaluate_numeric([1, 2]).shape == (2, 2)


def test_chart_dimensions():
    assert ContactChart(2).dim == 5
    assert ContactChart(2, "homogeneous").dim == 6
    assert ContactChart(1, "affine", 1).coordinate_names() == ("z0", "z1", "zeta0")
    with pytest.raises(ValueError):
        ContactChart(1, "affine", 5)
