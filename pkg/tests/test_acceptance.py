"""The nine acceptance criteria, each at its stated tolerance and time budget.

Every test records one PASS/FAIL line; the lines are repeated in the pytest
terminal summary.  Run alone with ``pytest tests/test_acceptance.py -v -s``.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp

from conftest import record, to_sympy
from oracles import degenerate_oracle
from legendrify.algebra import GR, GaussianRational, Poly, RationalFn, antiderivative, to_gr
from legendrify.contact import LegendrianCurve, ProjCurve, contact_residual
from legendrify.deform import (
    DeformationConfig,
    VerticalCurve,
    branch_discontinuity_experiment,
    horizontal_displacement,
    lift_vertical,
    nonconstant_perturb,
    parametric_verticalize,
    sup_norm,
    verticalize_to_horizontal,
)
from legendrify.domain import CircularDomain, Cycle, Disc, homology_basis
from legendrify.errors import DegenerateVerticalMember
from legendrify.lift import bryant_pullback, bryant_transform, degenerate_check, legendrian_lift
from legendrify.periods import TWO_PI_I, periods_exact, periods_quadrature, zero_count

P = RationalFn.parse
T_SAMPLES = (0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1)


def c(x) -> RationalFn:
    return RationalFn.const(to_gr(x))


def rand_gr(rnd: random.Random, span=9, den=5) -> GaussianRational:
    return GR(Fraction(rnd.randint(-span, span), rnd.randint(1, den)),
              Fraction(rnd.randint(-span, span), rnd.randint(1, den)))


def rand_poly(rnd: random.Random, deg: int) -> Poly:
    return Poly([rand_gr(rnd) for _ in range(deg + 1)])


def random_domain(rnd: random.Random, holes: int) -> CircularDomain:
    """Outer disc of radius 6 at 0; holes of radius 1/2..1 at well-separated centres."""
    slots = [GR(-3), GR(3), GR(0, 3), GR(0, -3)]
    rnd.shuffle(slots)
    hs = tuple(Disc(slots[k] + GR(Fraction(rnd.randint(-2, 2), 4), Fraction(rnd.randint(-2, 2), 4)),
                    Fraction(rnd.randint(2, 4), 4)) for k in range(holes))
    return CircularDomain(Disc(0, 6), hs)


# -- 1 ---------------------------------------------------------------------------

def test_c1_exact_lifting():
    rnd = random.Random(1)
    start = time.perf_counter()
    bad = 0
    for _ in range(200):
        d = random_domain(rnd, rnd.randint(0, 2))
        comps = []
        for _ in range(2):
            f = RationalFn(rand_poly(rnd, rnd.randint(0, 10)))
            for h in d.holes:  # poles inside holes keep the curve holomorphic on d
                if rnd.random() < 0.5:
                    f = f + RationalFn.const(rand_gr(rnd)) / RationalFn(Poly([-h.center, 1])) ** rnd.randint(1, 2)
            comps.append(f)
        if comps[0].is_constant() and comps[1].is_constant():
            comps[0] = comps[0] + P("z")
        curve = legendrian_lift(comps[0], comps[1], d)
        bad += not (contact_residual(curve).is_zero() and curve.certified)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 5
    record("criterion 1 exact lifting", ok, f"200 lifts, {bad} nonzero residuals, {elapsed:.2f}s < 5s")
    assert ok


# -- 2 ---------------------------------------------------------------------------

def test_c2_period_killing_worked_instance():
    eps = Fraction(1, 100)
    start = time.perf_counter()
    d = CircularDomain.annulus(Fraction(1, 2), 2)
    v = VerticalCurve((GR(0), GR(0)), (P("z"), P("1")), d)
    cfg = DeformationConfig(eps, c(eps) * P("z + 1/z"), (GR(1), GR(-1)))
    disp = horizontal_displacement(v.lift_h, d, cfg)
    f1, hom = verticalize_to_horizontal(v, cfg)
    raw = sup_norm(disp.gtilde, d)
    scaled = sup_norm([g * c(hom.scale) for g in hom.gtilde], d)
    checks = {
        "gtilde": disp.gtilde == (c(2 * eps) * P("z"), c(-eps) * P("z^2")),
        "t1": disp.t == (GR(eps),),
        "residual": contact_residual(f1).is_zero(),
        "raw sup": raw <= float(eps) * 4.1,
        "scaled sup": scaled <= float(eps),
        "homotopy": all(contact_residual(hom.eval(t)).is_zero() for t in T_SAMPLES),
        "vertical": all(hom.eval(t).vertical is hom.vertical for t in T_SAMPLES),
    }
    elapsed = time.perf_counter() - start
    ok = all(checks.values()) and elapsed < 1
    failed = [k for k, v in checks.items() if not v]
    record("criterion 2 period-killing instance", ok,
           f"g~=(2ez, -ez^2), raw sup {raw:.4g} <= {4.1 * float(eps):.3g}, scaled {scaled:.4g}, "
           f"failed={failed}, {elapsed:.2f}s < 1s")
    assert ok


# -- 3 ---------------------------------------------------------------------------

def test_c3_period_cross_check():
    rnd = random.Random(3)
    start = time.perf_counter()
    worst_rel, worst_doubling, count = 0.0, 0.0, 0
    while count < 100:
        d = random_domain(rnd, rnd.randint(1, 2))
        poles = []
        for h in d.holes:
            for _ in range(rnd.randint(1, 2)):
                off = GR(Fraction(rnd.randint(-2, 2), 8), Fraction(rnd.randint(-2, 2), 8)) * GR(h.radius)
                poles.append((h.center + off, rnd.randint(1, 2)))
        poles.append((GR(rnd.choice([-1, 1]) * 9, rnd.randint(-9, 9)), 1))  # outside the outer disc
        den = Poly.const(1)
        for a, m in poles:
            den = den * Poly([-a, 1]) ** m
        omega = RationalFn(rand_poly(rnd, rnd.randint(0, 4)), den)
        pv = periods_exact(omega, d)
        for cy, red in zip(homology_basis(d), pv.reduced):
            exact = complex(red) * TWO_PI_I
            q512 = periods_quadrature(omega, cy, 512)
            q1024 = periods_quadrature(omega, cy, 1024)
            scale = abs(exact) if abs(exact) > 0 else 1.0
            worst_rel = max(worst_rel, abs(q512 - exact) / max(scale, 1e-300) if abs(exact) > 0 else abs(q512))
            worst_doubling = max(worst_doubling, abs(q1024 - q512) / max(1.0, abs(q1024)))
        count += 1
    elapsed = time.perf_counter() - start
    ok = worst_rel <= 1e-9 and worst_doubling <= 1e-10 and elapsed < 10
    record("criterion 3 period cross-check", ok,
           f"100 forms, worst rel err {worst_rel:.2e} <= 1e-9, worst doubling change {worst_doubling:.2e} "
           f"<= 1e-10, {elapsed:.2f}s < 10s")
    assert ok


# -- 4 ---------------------------------------------------------------------------

EPS_LIST = [Fraction(1, 10), Fraction(1, 100), Fraction(1, 1000)]


def _family_a():
    start = time.perf_counter()
    rep = branch_discontinuity_experiment(2, 3, EPS_LIST, Fraction(1, 2))
    return rep, time.perf_counter() - start


def test_c4_family_a_discontinuity_closed_disc():
    rep, elapsed = _family_a()
    immersive = all(r["immersive"] and r["common_zeros"] == 0 for r in rep.family_a)
    sups = [r["sup_fs_disc"] for r in rep.family_a]
    ok = immersive and min(sups) >= 0.9 and elapsed < 2
    record("criterion 4 family A (sup over the closed disc |z| <= 1/2)", ok,
           f"immersive={immersive}, sup FS = {', '.join(f'{s:.4f}' for s in sups)} >= 0.9, {elapsed:.2f}s < 2s")
    assert ok


@pytest.mark.xfail(strict=True, reason="on |z| = 1/2 itself the lifts converge uniformly (distance O(eps)); "
                                       "the lower bound holds only near z = -eps inside the disc")
def test_c4_family_a_boundary_circle_literal():
    rep, elapsed = _family_a()
    sups = [r["sup_fs_boundary"] for r in rep.family_a]
    ok = min(sups) >= 0.9 and elapsed < 2
    record("criterion 4 family A (literal: sup over the circle |z| = 1/2 only)", ok,
           f"sup FS = {', '.join(f'{s:.2e}' for s in sups)}, decays like eps; expected failure")
    assert ok


# -- 5 ---------------------------------------------------------------------------

def test_c5_family_b_continuous_lift():
    start = time.perf_counter()
    rep = branch_discontinuity_experiment(2, 3, EPS_LIST, Fraction(1, 2))
    target = ProjCurve((-P("z"), P("1")))
    lifts_ok = all(r["lift_constant_in_eps"] for r in rep.family_b)
    counts = [r["zero_count_g0_prime"] for r in rep.family_b]
    # the same lift for the shared factor z^2 - eps^2, checked symbolically
    shared = []
    for e in EPS_LIST:
        q = P("z^2") - c(e * e)
        v0, v1 = lift_vertical(antiderivative(q), antiderivative(q * P("z")))
        shared.append(ProjCurve((RationalFn(v0), RationalFn(v1))).equivalent(target))
    elapsed = time.perf_counter() - start
    ok = lifts_ok and all(shared) and counts == [1, 1, 1] and elapsed < 2
    record("criterion 5 family B (k=2: g0' = z - eps, g1' = z(z - eps))", ok,
           f"lift [-z : 1] for every eps: {lifts_ok}; with factor z^2 - eps^2: {all(shared)}; "
           f"zero counts {counts} = k-1 = 1; {elapsed:.2f}s < 2s")
    assert ok


@pytest.mark.xfail(strict=True, reason="z^2 - eps^2 has two zeros in |z| < 1/2, so its count is 2 (= k-1 for k = 3)")
def test_c5_family_b_literal_shared_factor_count():
    counts = [zero_count(P("z^2") - c(e * e), Cycle(0, Fraction(1, 2))) for e in EPS_LIST]
    ok = counts == [1, 1, 1]
    record("criterion 5 family B (literal: zero_count(z^2 - eps^2) = 1)", ok,
           f"counts {counts}; expected failure")
    assert ok


# -- 6 ---------------------------------------------------------------------------

def test_c6_bryant_transform():
    rnd = random.Random(6)
    start = time.perf_counter()
    bad = 0
    for _ in range(50):
        f = RationalFn(rand_poly(rnd, rnd.randint(0, 8)))
        g = RationalFn(rand_poly(rnd, rnd.randint(1, 8)))
        if g.is_constant():
            g = g + P("z")
        r = bryant_transform(f, g)
        comps = r.curve.components
        # independent check of the quadric map on [1 : f : g : -df/dg]
        x, y, zz = f, g, -(f.derivative() / g.derivative())
        half = c(Fraction(1, 2))
        quad = (c(1), x + y * zz * half, y, -zz * half)
        bad += not (bryant_pullback(comps).is_zero() and quad == comps and r.verified)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 5
    record("criterion 6 Bryant transform", ok, f"50 pairs, {bad} failures, {elapsed:.2f}s < 5s")
    assert ok


# -- 7 ---------------------------------------------------------------------------

def test_c7_general_position_perturbation():
    start = time.perf_counter()
    fam = [(c(Fraction(p, 100)) * P("z"), c(0)) for p in range(101)]
    delta = Fraction(1, 1000)
    res = nonconstant_perturb(fam, [100], [1, -1], delta)
    one, minus = GR(1), GR(-1)
    nonconstant = all(any(f(one) != f(minus) for f in member) for member in res.perturbed)
    q_identical = res.perturbed[100] == res.original[100]
    endpoints = all(res.homotopy(p, 0) == res.original[p] and res.homotopy(p, 1) == res.perturbed[p]
                    for p in range(101))
    # independent sup of the change over the default domain boundary
    z = CircularDomain.disc(0, 1).boundary_samples(1024)
    change = max(float(np.max(np.abs(a.evaluate_numeric(z) - b.evaluate_numeric(z))))
                 for o, pm in zip(res.original, res.perturbed) for a, b in zip(o, pm))
    elapsed = time.perf_counter() - start
    ok = nonconstant and q_identical and endpoints and change <= float(delta) and elapsed < 3
    record("criterion 7 general-position perturbation", ok,
           f"101 members nonconstant={nonconstant}, Q identical={q_identical}, endpoints={endpoints}, "
           f"sup change {change:.3e} <= 1e-3, {elapsed:.2f}s < 3s")
    assert ok


# -- 8 ---------------------------------------------------------------------------

def _grid_family(d: CircularDomain, degenerate_at=None) -> list:
    fam = []
    for p in range(11):
        x = c(Fraction(p, 10))
        if 3 <= p <= 7:
            vert = (P("1"), P("0")) if p == degenerate_at else (P("z"), P("1"))
            fam.append(LegendrianCurve.certify((x, c(Fraction(p, 20))), ProjCurve(vert, d), d))
        else:
            w = c(Fraction(abs(p - 5) + 1, 10))
            fam.append(LegendrianCurve.certify((x + w * P("z"), -w * P("z^2/2")), ProjCurve((P("z"), P("1")), d), d))
    return fam


def test_c8_parametric_verticalization():
    start = time.perf_counter()
    d = CircularDomain.annulus(Fraction(1, 2), 2)
    cfg = DeformationConfig(Fraction(1, 100), P("z/100 + 1/(100*z)"), (GR(1), GR(-1)))
    fam = _grid_family(d)
    res = parametric_verticalize(fam, [0, 10], cfg, d)
    one, minus = GR(1), GR(-1)
    horizontal = all(any(g(one) != g(minus) for g in f.base) for f in res.final())
    fixed_q = all(res.homotopies[p].eval(t).base == fam[p].base for p in (0, 10) for t in T_SAMPLES)
    verticals, legendrian, nondeg = True, True, True
    for p, gh in enumerate(res.homotopies):
        for t in T_SAMPLES:
            ft = gh.eval(t)
            verticals &= ft.vertical.components == fam[p].vertical.components
            legendrian &= contact_residual(ft).is_zero()
            if not ft.is_horizontal():
                nondeg &= degenerate_check(ft.vertical) is None
    try:
        parametric_verticalize(_grid_family(d, degenerate_at=5), [0, 10], cfg, d)
        raised = False
    except DegenerateVerticalMember:
        raised = True
    elapsed = time.perf_counter() - start
    ok = horizontal and fixed_q and verticals and legendrian and nondeg and raised and elapsed < 10
    record("criterion 8 parametric verticalization", ok,
           f"all f1 horizontal={horizontal}, Q fixed={fixed_q}, verticals preserved={verticals}, "
           f"Legendrian at all (p,t)={legendrian}, nondegenerate={nondeg}, degenerate run raises={raised}, "
           f"{elapsed:.2f}s < 10s")
    assert ok


# -- 9 ---------------------------------------------------------------------------

def test_c9_degeneracy_oracle():
    rnd = random.Random(9)
    curves = []
    for k in range(100):
        n = 2 if k % 2 == 0 else 3
        comps = [RationalFn(rand_poly(rnd, rnd.randint(0, 6))) for _ in range(n + 1)]
        if k < 20:  # constructed degenerate: one entry is a combination of the others
            combo = RationalFn(Poly())
            for cmp in comps[:-1]:
                combo = combo + RationalFn.const(rand_gr(rnd)) * cmp
            comps[-1] = combo
        elif k % 5 == 0:  # a shared denominator to exercise clearing
            den = RationalFn(Poly([rand_gr(rnd), 1]))
            comps = [cmp / den for cmp in comps]
        if all(cmp.is_zero() for cmp in comps):
            comps[0] = P("1")
        curves.append(comps)
    start = time.perf_counter()
    ours = [degenerate_check(cs) for cs in curves]
    elapsed = time.perf_counter() - start
    oracle_start = time.perf_counter()
    agree, degenerate = 0, 0
    for cs, lam in zip(curves, ours):
        ref = degenerate_oracle(cs)
        same = (lam is None) == (ref is None)
        if lam is not None:
            degenerate += 1
            total = sum((to_sympy(RationalFn.const(l)) * to_sympy(cmp) for l, cmp in zip(lam, cs)), sp.Integer(0))
            same &= sp.cancel(total) == 0
        agree += same
    oracle_elapsed = time.perf_counter() - oracle_start
    ok = agree == 100 and degenerate >= 20 and elapsed < 5
    record("criterion 9 degeneracy oracle", ok,
           f"{agree}/100 agree with the sympy null-space oracle, {degenerate} degenerate, "
           f"degenerate_check {elapsed:.2f}s < 5s (oracle {oracle_elapsed:.2f}s)")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
