"""Legendrian liftings of curves in a surface, branch points, the conormal
local solve, degeneracy of vertical curves and the Bryant transform."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    GaussianRational,
    LaurentSeries,
    Poly,
    RationalFn,
    local_expand,
    nullspace,
    poly_gcd,
    poly_lcm,
    to_gr,
)
from .algebra.laurent import DEFAULT_ORDER
from .contact import LegendrianCurve, ProjCurve
from .domain import CircularDomain, holomorphic_on
from .errors import (
    AllZero,
    ConstantG,
    NotACriticalPoint,
    OrderingViolated,
    PoleInDomain,
    VerticalInput,
)

__all__ = [
    "legendrian_lift", "lift_vertical", "BranchReport", "branch_classify",
    "TangentCheck", "distinct_tangents_check", "conormal_solve",
    "degenerate_check", "cleared_numerators", "RatioScan", "nonconstant_ratio_scan",
    "BryantResult", "bryant_transform", "bryant_pullback",
]


def _rf(x) -> RationalFn:
    return x if isinstance(x, RationalFn) else RationalFn(x)


def cleared_numerators(fs: Sequence[RationalFn]) -> list[Poly]:
    """Numerators over the least common denominator."""
    den = Poly.const(1)
    for f in fs:
        den = poly_lcm(den, f.den)
    return [f.num * den.exact_div(f.den) for f in fs]


def lift_vertical(g0: RationalFn, g1: RationalFn) -> tuple[Poly, Poly]:
    """[-g1' : g0'] over a common denominator with the gcd of the entries removed."""
    v0, v1 = cleared_numerators([-g1.derivative(), g0.derivative()])
    g = poly_gcd(v0, v1)
    return v0.exact_div(g), v1.exact_div(g)


def legendrian_lift(g0, g1, d: CircularDomain | None = None) -> LegendrianCurve:
    """The unique Legendrian lift (g0, g1, [-g1' : g0']) of a nonconstant curve.

    Common zeros of the two derivatives are cancelled, so the vertical
    component is defined everywhere on the domain.
    """
    g0, g1 = _rf(g0), _rf(g1)
    if g0.is_constant() and g1.is_constant():
        raise VerticalInput("both base components are constant; there is no tangent direction")
    if d is not None:
        for g in (g0, g1):
            cert = holomorphic_on(g, d)
            if not cert:
                raise PoleInDomain(f"{g} ({cert.poles_in_domain} pole(s) in the domain)")
    v0, v1 = lift_vertical(g0, g1)
    return LegendrianCurve.certify((g0, g1), ProjCurve((RationalFn(v0), RationalFn(v1)), d), d)


def _order_at(f: RationalFn, p: GaussianRational) -> int:
    return f.num.shift(p).valuation() - f.den.shift(p).valuation()


@dataclass(frozen=True)
class BranchReport:
    point: GaussianRational
    j: int
    k: int
    a: GaussianRational
    b: GaussianRational
    immersion_verdict: bool
    reason: str  # gap_one | gap_ge_two | equal_orders_noncritical | equal_orders_critical


def branch_classify(g0, g1, point) -> BranchReport:
    """Is the lift an immersion at a critical point of g = (g0, g1)?

    With g0' = a x^j and g1' = b x^k locally (a(0), b(0) nonzero), the lift is an
    immersion iff |j - k| = 1, or j = k and the point is not critical for b/a.
    """
    g0, g1 = _rf(g0), _rf(g1)
    p = to_gr(point)
    d0, d1 = g0.derivative(), g1.derivative()
    if d0.is_zero() or d1.is_zero():
        raise NotACriticalPoint("a constant component has no finite vanishing order")
    j, k = _order_at(d0, p), _order_at(d1, p)
    if j < 1 or k < 1:
        raise NotACriticalPoint(f"{p} is not a common zero of g0' and g1' (orders {j}, {k})")
    a = local_expand(d0, p, order=j).leading
    b = local_expand(d1, p, order=k).leading
    gap = abs(j - k)
    if gap == 1:
        return BranchReport(p, j, k, a, b, True, "gap_one")
    if gap >= 2:
        return BranchReport(p, j, k, a, b, False, "gap_ge_two")
    ratio = local_expand(d1 / d0, p, order=1)
    critical = ratio.coeff(1).is_zero()
    return BranchReport(p, j, k, a, b, not critical,
                        "equal_orders_critical" if critical else "equal_orders_noncritical")


@dataclass(frozen=True)
class TangentCheck:
    ok: bool
    failures: tuple  # (x0, x1, reason)


def distinct_tangents_check(g0, g1, pairs: Sequence) -> TangentCheck:
    """Check distinct tangent lines at user-supplied self-intersections g(x0) = g(x1)."""
    g0, g1 = _rf(g0), _rf(g1)
    d0, d1 = g0.derivative(), g1.derivative()
    failures = []
    for x0, x1 in pairs:
        x0, x1 = to_gr(x0), to_gr(x1)
        if x0 == x1:
            raise ValueError("a self-intersection needs two distinct parameters")
        if g0(x0) != g0(x1) or g1(x0) != g1(x1):
            raise ValueError(f"g({x0}) != g({x1}); not a self-intersection")
        t0 = (d0(x0), d1(x0))
        t1 = (d0(x1), d1(x1))
        if all(c.is_zero() for c in t0) or all(c.is_zero() for c in t1):
            failures.append((x0, x1, "critical point"))
        elif (t0[0] * t1[1] - t0[1] * t1[0]).is_zero():
            failures.append((x0, x1, "equal tangent lines"))
    return TangentCheck(not failures, tuple(failures))


def _vanishing_order(g: RationalFn, c: GaussianRational) -> int | None:
    diff = g - RationalFn.const(g(c))
    return None if diff.is_zero() else _order_at(diff, c)


def conormal_solve(g: Sequence, zeta_rest: Sequence, order: int = DEFAULT_ORDER,
                   center=0) -> LaurentSeries:
    """Solve zeta_0 g_0' + sum_{j>=1} zeta_j g_j' = 0 for zeta_0 near ``center``.

    Requires the vanishing orders k_j of g_j - g_j(center) to satisfy k_j > k_0;
    then g_0' / x^(k_0 - 1) is a unit and zeta_0 is holomorphic.
    """
    g = [_rf(x) for x in g]
    zs = [_rf(x) for x in zeta_rest]
    if len(zs) != len(g) - 1:
        raise ValueError(f"need {len(g) - 1} free components, got {len(zs)}")
    c = to_gr(center)
    k0 = _vanishing_order(g[0], c)
    if k0 is None:
        raise OrderingViolated("g_0 is constant near the point")
    for j, gj in enumerate(g[1:], start=1):
        kj = _vanishing_order(gj, c)
        if kj is not None and kj <= k0:
            raise OrderingViolated(f"k_{j} = {kj} <= k_0 = {k0}")
    rhs = RationalFn(Poly())
    for zj, gj in zip(zs, g[1:]):
        rhs = rhs + zj * gj.derivative()
    if rhs.is_zero():
        return LaurentSeries.zero(order)
    return local_expand(-rhs / g[0].derivative(), c, order=order)


def degenerate_check(h) -> tuple | None:
    """A covector lambda with sum lambda_i h_i == 0, or None if h is nondegenerate.

    The returned covector is normalised so its first nonzero entry is 1.
    """
    comps = list(h.components) if isinstance(h, ProjCurve) else [_rf(x) for x in h]
    polys = cleared_numerators(comps)
    rows = max((p.degree for p in polys), default=-1) + 1
    matrix = [[p.coeff(dg) for p in polys] for dg in range(rows)]
    basis = nullspace(matrix, len(polys))
    if not basis:
        return None
    v = basis[0]
    lead = next(x for x in v if not x.is_zero())
    return tuple(x / lead for x in v)


@dataclass(frozen=True)
class RatioScan:
    n_index: int
    i_index: int | None  # None when every ratio h_i / h_n is constant

    @property
    def all_constant(self) -> bool:
        return self.i_index is None


def nonconstant_ratio_scan(h: Sequence) -> RatioScan:
    """n = largest index with h_n != 0; i = smallest index with h_i / h_n nonconstant."""
    comps = list(h.components) if isinstance(h, ProjCurve) else [_rf(x) for x in h]
    nz = [k for k, c in enumerate(comps) if not c.is_zero()]
    if not nz:
        raise AllZero("every component is identically zero")
    n = nz[-1]
    for i, c in enumerate(comps):
        if i != n and not (c / comps[n]).is_constant():
            return RatioScan(n, i)
    return RatioScan(n, None)


@dataclass(frozen=True)
class BryantResult:
    curve: ProjCurve
    pullback_zero: bool
    transform_matches: bool

    @property
    def verified(self) -> bool:
        return self.pullback_zero and self.transform_matches


def bryant_pullback(c: Sequence[RationalFn]) -> RationalFn:
    """Coefficient of the pullback of z0 dz1 - z1 dz0 + z2 dz3 - z3 dz2."""
    z0, z1, z2, z3 = c
    return z0 * z1.derivative() - z1 * z0.derivative() + z2 * z3.derivative() - z3 * z2.derivative()


def bryant_transform(f, g) -> BryantResult:
    """[1 : f - g r/2 : g : r/2] with r = df/dg, a Legendrian curve in CP^3.

    The verification also applies (x, y, z) -> (x + yz/2, y, -z/2) to the affine
    point (f, g, -r) and compares.
    """
    f, g = _rf(f), _rf(g)
    if g.is_constant():
        raise ConstantG("df/dg is undefined for constant g")
    r = f.derivative() / g.derivative()
    half = RationalFn.const(GaussianRational(1) / 2)
    comps = (RationalFn.const(1), f - g * r * half, g, r * half)
    x, y, z = f, g, -r
    quad = (RationalFn.const(1), x + y * z * half, y, -z * half)
    return BryantResult(ProjCurve(comps), bryant_pullback(comps).is_zero(), quad == comps)
