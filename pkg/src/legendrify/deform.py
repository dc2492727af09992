"""Deforming vertical Legendrian curves into horizontal ones.

The single-curve construction: given a vertical curve (z0, [h]) on a circular
domain, find a small nonconstant g~ with sum h_i g~_i' = 0.  All but the last
component are chosen freely (the first one corrected to kill periods), and the
last one is the primitive of beta = -sum_{i<n} (h_i/h_n) g~_i'.  Then
t -> (z0 + t g~, [h]) is a Legendrian homotopy.

Also here: the patched version over a finite parameter grid, the
general-position (nonconstancy) perturbation of a family of maps, and the
branch-point discontinuity experiment for liftings.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import (
    GaussianRational,
    Inconsistent,
    Poly,
    RationalFn,
    antiderivative,
    poly_gcd,
    solve,
    to_gr,
)
from .algebra.gaussian import ZERO
from .contact import LegendrianCurve, ProjCurve, fubini_study_distances
from .domain import CircularDomain, Cycle, holomorphic_on
from .errors import (
    DegenerateSeed,
    DegenerateVerticalMember,
    NonzeroPeriods,
    SingularPeriodMatrix,
    TooFewTestPoints,
)
from .lift import cleared_numerators, degenerate_check, lift_vertical, nonconstant_ratio_scan
from .periods import antiderivative_on_domain, periods_exact, zero_count

__all__ = [
    "VerticalCurve", "DeformationConfig", "LegendrianHomotopy", "Displacement",
    "make_omega", "dual_basis", "horizontal_displacement", "verticalize_to_horizontal",
    "GridHomotopy", "ParametricResult", "parametric_verticalize", "ContinuityWarning",
    "PerturbResult", "nonconstant_perturb", "branch_discontinuity_experiment",
    "BranchExperiment", "sup_norm", "round_down",
]

BOUNDARY_SAMPLES = 1024
SUP_MARGIN = Fraction(101, 100)


def _rf(x) -> RationalFn:
    return x if isinstance(x, RationalFn) else RationalFn(x)


def _zero_order(f: RationalFn | None, a) -> int:
    if f is None or f.is_zero():
        return 0
    return max(0, f.num.shift(a).valuation() - f.den.shift(a).valuation())


class ContinuityWarning(UserWarning):
    """Adjacent members of a grid family are far apart in coefficient space."""


# ---------------------------------------------------------------------------
# data types

@dataclass(frozen=True)
class VerticalCurve:
    """The vertical curve (basepoint, [h_0 : ... : h_n]) with h a lift to C^{n+1} minus 0."""

    basepoint: tuple
    lift_h: tuple
    domain: CircularDomain

    def __post_init__(self):
        object.__setattr__(self, "basepoint", tuple(to_gr(b) for b in self.basepoint))
        object.__setattr__(self, "lift_h", tuple(_rf(h) for h in self.lift_h))
        if len(self.basepoint) != len(self.lift_h):
            raise ValueError("basepoint and lift must have the same number of components")
        if len(self.lift_h) < 2:
            raise ValueError("need at least two components (dim Z >= 2)")

    @property
    def n(self) -> int:
        return len(self.lift_h) - 1

    def validate(self) -> None:
        """h must be holomorphic on the domain without common zeros there."""
        for k, h in enumerate(self.lift_h):
            if not holomorphic_on(h, self.domain):
                raise ValueError(f"component h_{k} = {h} has a pole in the domain")
        polys = cleared_numerators(list(self.lift_h))
        g = Poly()
        for p in polys:
            g = poly_gcd(g, p)
        if g.is_zero():
            raise ValueError("all components of h vanish identically")
        if g.degree > 0 and not holomorphic_on(RationalFn(Poly.const(1), g), self.domain):
            raise ValueError(f"components of h share a zero in the domain (gcd {g})")

    def as_legendrian(self) -> LegendrianCurve:
        base = tuple(RationalFn.const(b) for b in self.basepoint)
        return LegendrianCurve.certify(base, ProjCurve(self.lift_h, self.domain), self.domain)

    def to_json(self) -> dict:
        return {
            "basepoint": [b.to_json() for b in self.basepoint],
            "lift_h": [h.to_json() for h in self.lift_h],
            "domain": self.domain.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "VerticalCurve":
        return cls(tuple(GaussianRational.from_json(b) for b in obj["basepoint"]),
                   tuple(RationalFn.from_json(h) for h in obj["lift_h"]),
                   CircularDomain.from_json(obj["domain"]))


@dataclass(frozen=True)
class DeformationConfig:
    """Choices for the deformation.

    ``xi_pole_candidates`` entries are either (point, multiplicity), contributing
    1/(z-a)^m for m = 1..multiplicity, or explicit rational functions.  When
    only pole specifications are given the polynomials 1 and z are appended.
    The default puts a pole at every hole centre a, of order 1 + the order of
    vanishing of omega at a, so that some candidate picks up a residue.
    """

    epsilon: Fraction
    xi0: RationalFn
    marked_points: tuple
    seed_g: tuple = ()
    xi_pole_candidates: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "xi0", _rf(self.xi0))
        object.__setattr__(self, "seed_g", tuple(_rf(g) for g in self.seed_g))
        x0, x1 = (to_gr(x) for x in self.marked_points)
        object.__setattr__(self, "marked_points", (x0, x1))
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if x0 == x1:
            raise ValueError("marked points must be distinct")
        if self.xi_pole_candidates is not None:
            cands = []
            for c in self.xi_pole_candidates:
                if isinstance(c, RationalFn):
                    cands.append(c)
                else:
                    a, m = c
                    cands.append((to_gr(a), int(m)))
            object.__setattr__(self, "xi_pole_candidates", tuple(cands))

    def candidate_functions(self, d: CircularDomain, omega: RationalFn | None = None) -> list[RationalFn]:
        cands = self.xi_pole_candidates
        if cands is None:
            cands = tuple((h.center, 1 + _zero_order(omega, h.center)) for h in d.holes)
        out, explicit = [], False
        for c in cands:
            if isinstance(c, RationalFn):
                out.append(c)
                explicit = True
                continue
            a, m = c
            if d.locate(a)[0] != "hole":
                raise ValueError(f"candidate pole {a} is not strictly inside a hole")
            if m < 1:
                raise ValueError("candidate multiplicity must be positive")
            lin = RationalFn(Poly([-a, 1]))
            out.extend(lin ** (-k) for k in range(1, m + 1))
        if not explicit:
            out.extend([RationalFn.const(1), RationalFn(Poly([0, 1]))])
        return out

    def to_json(self) -> dict:
        out = {
            "epsilon": f"{self.epsilon.numerator}/{self.epsilon.denominator}",
            "xi0": self.xi0.to_json(),
            "marked_points": [x.to_json() for x in self.marked_points],
            "seed_g": [g.to_json() for g in self.seed_g],
        }
        if self.xi_pole_candidates is not None:
            out["xi_pole_candidates"] = [
                c.to_json() if isinstance(c, RationalFn) else {"point": c[0].to_json(), "multiplicity": c[1]}
                for c in self.xi_pole_candidates]
        return out

    @classmethod
    def from_json(cls, obj, epsilon=None) -> "DeformationConfig":
        from .algebra import parse_rational
        cands = obj.get("xi_pole_candidates")
        if cands is not None:
            cands = tuple(
                (GaussianRational.from_json(c["point"]), int(c.get("multiplicity", 1)))
                if isinstance(c, dict) and "point" in c else RationalFn.from_json(c)
                for c in cands)
        eps = epsilon if epsilon is not None else parse_rational(obj["epsilon"])
        return cls(eps, RationalFn.from_json(obj["xi0"]),
                   tuple(GaussianRational.from_json(x) for x in obj["marked_points"]),
                   tuple(RationalFn.from_json(g) for g in obj.get("seed_g", [])), cands)


@dataclass(frozen=True)
class LegendrianHomotopy:
    """t -> (base0 + t * scale * gtilde, vertical), Legendrian for every t."""

    base0: tuple
    gtilde: tuple
    vertical: ProjCurve
    domain: CircularDomain | None
    scale: Fraction = Fraction(1)
    epsilon: Fraction | None = None

    @property
    def basepoint(self) -> tuple:
        return tuple(b.constant_value() if b.is_constant() else None for b in self.base0)

    def eval(self, t) -> LegendrianCurve:
        t = to_gr(Fraction(t) if not isinstance(t, GaussianRational) else t)
        c = RationalFn.const(t * to_gr(self.scale))
        base = tuple(b + c * g for b, g in zip(self.base0, self.gtilde))
        return LegendrianCurve.certify(base, self.vertical, self.domain)

    def is_vertical_at(self, t) -> bool:
        return not self.eval(t).is_horizontal()

    def to_json(self) -> dict:
        return {
            "base0": [b.to_json() for b in self.base0],
            "gtilde": [g.to_json() for g in self.gtilde],
            "scale": f"{self.scale.numerator}/{self.scale.denominator}",
            "vertical": self.vertical.to_json(),
            "domain": self.domain.to_json() if self.domain is not None else None,
            "epsilon": (f"{self.epsilon.numerator}/{self.epsilon.denominator}"
                        if self.epsilon is not None else None),
        }

    @classmethod
    def from_json(cls, obj) -> "LegendrianHomotopy":
        from .algebra import parse_rational
        dom = CircularDomain.from_json(obj["domain"]) if obj.get("domain") else None
        eps = obj.get("epsilon")
        return cls(tuple(RationalFn.from_json(b) for b in obj["base0"]),
                   tuple(RationalFn.from_json(g) for g in obj["gtilde"]),
                   ProjCurve(tuple(RationalFn.from_json(h) for h in obj["vertical"]), dom),
                   dom, parse_rational(obj.get("scale", "1")),
                   parse_rational(eps) if eps is not None else None)


# ---------------------------------------------------------------------------
# helpers

def sup_norm(fs: Sequence[RationalFn], d: CircularDomain, samples: int = BOUNDARY_SAMPLES) -> float:
    """max over components and boundary samples of |f_i|."""
    z = d.boundary_samples(samples)
    best = 0.0
    for f in fs:
        if f.is_zero():
            continue
        best = max(best, float(np.max(np.abs(f.evaluate_numeric(z)))))
    return best


def round_down(x: float, digits: int = 6) -> Fraction:
    """A positive rational <= x with about ``digits`` significant digits."""
    if not x > 0:
        raise ValueError("round_down needs a positive number")
    e = digits - 1 - math.floor(math.log10(x))
    q = Fraction(math.floor(x * 10.0 ** e)) / Fraction(10) ** e if e >= 0 else \
        Fraction(math.floor(x / 10.0 ** (-e))) * 10 ** (-e)
    while q > Fraction(x) or q <= 0:
        e += 1
        q = Fraction(math.floor(x * 10.0 ** e)) / Fraction(10) ** e
    return q


def _rescale(sup: float, epsilon: Fraction) -> Fraction:
    if sup * float(SUP_MARGIN) <= float(epsilon):
        return Fraction(1)
    return round_down(float(epsilon) / (sup * float(SUP_MARGIN)))


def make_omega(h: Sequence) -> RationalFn:
    """Coefficient of omega = h_0 dh_n - h_n dh_0 (first and last entries of h)."""
    h0, hn = _rf(h[0]), _rf(h[-1])
    return h0 * hn.derivative() - hn * h0.derivative()


def dual_basis(omega: RationalFn, d: CircularDomain, cfg: DeformationConfig) -> list[RationalFn]:
    """xi_1..xi_l with reduced period of xi_k * omega over C_j equal to delta_jk and
    xi_k(x0) = xi_k(x1) = 0, as combinations of the candidate functions."""
    ell = d.betti
    if ell == 0:
        return []
    if omega.is_zero():
        raise SingularPeriodMatrix("omega vanishes identically")
    cols = cfg.candidate_functions(d, omega)
    x0, x1 = cfg.marked_points
    rows = [[ZERO] * len(cols) for _ in range(ell + 2)]
    for c, fn in enumerate(cols):
        pv = periods_exact(fn * omega, d, strict=True)
        for j in range(ell):
            rows[j][c] = pv.reduced[j]
        rows[ell][c] = fn(x0)
        rows[ell + 1][c] = fn(x1)
    out = []
    for k in range(ell):
        rhs = [ZERO] * (ell + 2)
        rhs[k] = to_gr(1)
        try:
            coef = solve(rows, rhs)
        except Inconsistent:
            raise SingularPeriodMatrix(
                f"candidates cannot produce a dual function for cycle {k}; supply more candidates") from None
        xi = RationalFn(Poly())
        for a, fn in zip(coef, cols):
            if not a.is_zero():
                xi = xi + fn * RationalFn.const(a)
        out.append(xi)
    return out


@dataclass(frozen=True)
class Displacement:
    gtilde: tuple
    order: tuple          # order[new index] = original index
    t: tuple
    g0: RationalFn
    beta: RationalFn | None
    reduced: bool         # whether g~_i = h_n^2 g_i was used
    all_constant: bool


def horizontal_displacement(h: Sequence, d: CircularDomain, cfg: DeformationConfig) -> Displacement:
    """Nonconstant g~ (unscaled) with sum h_i g~_i' = 0 exactly.

    h is first replaced by the polynomial representative over a common
    denominator.  When h_n is nonconstant the displacement is sought as
    g~_i = h_n^2 g_i (i < n), so beta has poles only where the xi_k do (the
    hole centres) and vanishing periods leave a rational primitive.
    """
    h = [RationalFn(p) for p in cleared_numerators([_rf(x) for x in h])]
    n = len(h) - 1
    scan = nonconstant_ratio_scan(h)
    first = scan.i_index if not scan.all_constant else min(k for k in range(n + 1) if k != scan.n_index)
    order = [first] + [k for k in range(n + 1) if k not in (first, scan.n_index)] + [scan.n_index]
    H = [h[k] for k in order]
    seeds = list(cfg.seed_g) or [RationalFn(Poly())] * (n - 1)
    if len(seeds) != n - 1:
        raise ValueError(f"seed_g needs {n - 1} functions, got {len(seeds)}")
    x0, x1 = cfg.marked_points
    xi0 = cfg.xi0
    if xi0(x0) == xi0(x1):
        raise DegenerateSeed(f"xi0({x0}) = xi0({x1}); the base map could end up constant")
    Hn = H[n]

    if scan.all_constant:
        consts = [H[i] / Hn for i in range(n)]
        gt = [xi0] + seeds
        gn = RationalFn(Poly())
        for c, g in zip(consts, gt):
            gn = gn - c * g.derivative()
        gt.append(antiderivative_on_domain(gn, d))
        return _finish(h, gt, order, (), xi0, None, False, True)

    reduce = not Hn.is_constant()
    dHn = Hn.derivative()
    two = RationalFn.const(2)

    if reduce:
        def lin(i, x):
            return -(H[i] * (Hn * x.derivative() + two * x * dHn))
        omega_eff = make_omega(H)
    else:
        def lin(i, x):
            return -(H[i] / Hn) * x.derivative()
        omega_eff = make_omega(H) / (Hn * Hn)

    rest = RationalFn(Poly())
    for i in range(1, n):
        rest = rest + lin(i, seeds[i - 1])
    xis = dual_basis(omega_eff, d, cfg)
    ell = d.betti
    if ell:
        m = [[ZERO] * ell for _ in range(ell)]
        for k, xi in enumerate(xis):
            pv = periods_exact(lin(0, xi), d, strict=True)
            for j in range(ell):
                m[j][k] = pv.reduced[j]
        target = periods_exact(lin(0, xi0) + rest, d, strict=True)
        try:
            t = solve(m, [-v for v in target.reduced])
        except Inconsistent:
            raise SingularPeriodMatrix("period matrix of the dual basis is singular") from None
    else:
        t = []
    g0 = xi0
    for tk, xi in zip(t, xis):
        g0 = g0 + RationalFn.const(tk) * xi
    beta = lin(0, g0) + rest
    pv = periods_exact(beta, d, strict=True)
    if not pv.is_zero():
        raise NonzeroPeriods(pv)
    gn = antiderivative_on_domain(beta, d)
    if reduce:
        sq = Hn * Hn
        gt = [sq * g0] + [sq * g for g in seeds] + [gn]
    else:
        gt = [g0] + seeds + [gn]
    return _finish(h, gt, order, tuple(t), g0, beta, reduce, False)


def _finish(h, gt, order, t, g0, beta, reduced, all_constant) -> Displacement:
    out = [None] * len(h)
    for new, old in enumerate(order):
        out[old] = gt[new]
    res = RationalFn(Poly())
    for hi, gi in zip(h, out):
        res = res + hi * gi.derivative()
    if not res.is_zero():  # pragma: no cover - construction guarantees this
        raise ArithmeticError(f"displacement is not Legendrian: residual {res}")
    return Displacement(tuple(out), tuple(order), t, g0, beta, reduced, all_constant)


def _nonconstant_witness(fs: Sequence[RationalFn], pts: Sequence) -> tuple | None:
    for k, f in enumerate(fs):
        if f.is_constant():
            continue
        for a in pts:
            for b in pts:
                try:
                    if f(a) != f(b):
                        return (k, a, b)
                except ZeroDivisionError:
                    pass
        return (k, None, None)
    return None


def verticalize_to_horizontal(v: VerticalCurve, cfg: DeformationConfig, validate: bool = True
                              ) -> tuple[LegendrianCurve, LegendrianHomotopy]:
    """Horizontal Legendrian f_1 = (z0 + g~, [h]) with sup |g~| <= epsilon on the boundary,
    plus the homotopy f_t = (z0 + t g~, [h]) from the vertical curve."""
    if validate:
        v.validate()
    for x in cfg.marked_points:
        if not v.domain.contains(x):
            raise ValueError(f"marked point {x} is not in the domain")
    disp = horizontal_displacement(v.lift_h, v.domain, cfg)
    sup = sup_norm(disp.gtilde, v.domain)
    scale = _rescale(sup, cfg.epsilon)
    base0 = tuple(RationalFn.const(b) for b in v.basepoint)
    vert = ProjCurve(v.lift_h, v.domain)
    hom = LegendrianHomotopy(base0, disp.gtilde, vert, v.domain, scale, cfg.epsilon)
    f1 = hom.eval(1)
    if not f1.certified or not f1.is_horizontal():  # pragma: no cover
        raise ArithmeticError("deformation failed to certify")
    return f1, hom


# ---------------------------------------------------------------------------
# parametric version on a 1-D grid

@dataclass(frozen=True)
class GridHomotopy:
    index: int
    chi: Fraction
    homotopy: LegendrianHomotopy

    def eval(self, t) -> LegendrianCurve:
        return self.homotopy.eval(t)


@dataclass(frozen=True)
class ParametricResult:
    homotopies: tuple
    chi: tuple
    vertical_indices: tuple
    q_indices: tuple

    def final(self) -> list[LegendrianCurve]:
        return [g.eval(1) for g in self.homotopies]


def _cutoff(size: int, vertical: set, q: set) -> list[Fraction]:
    chi = []
    for p in range(size):
        if p in q or not vertical:
            chi.append(Fraction(0))
            continue
        dist = min(abs(p - v) for v in vertical)
        chi.append(Fraction(1) if dist <= 1 else Fraction(1, 2) if dist == 2 else Fraction(0))
    return chi


def _coeff_gap(a: RationalFn, b: RationalFn) -> float:
    if a.den != b.den:
        return math.inf
    m = max(a.num.degree, b.num.degree) + 1
    return max((abs(complex(a.num.coeff(k) - b.num.coeff(k))) for k in range(m)), default=0.0)


def parametric_verticalize(family: Sequence[LegendrianCurve], q_indices, cfg: DeformationConfig,
                           domain: CircularDomain | None = None,
                           continuity_tol: float = 1.0) -> ParametricResult:
    """Deform a grid family so every member is horizontal at t = 1.

    chi is 1 within grid distance 1 of the vertical members, 1/2 at distance 2,
    0 further away and 0 on Q.  Member p follows (g_p + t chi(p) s_p g~_p, h_p),
    where g~_p is built from the member's own vertical component.
    """
    fam = list(family)
    q = set(int(i) for i in q_indices)
    if not fam:
        return ParametricResult((), (), (), tuple(sorted(q)))
    d = domain or fam[0].domain
    if d is None:
        raise ValueError("a domain is required")
    vertical = set()
    for p, f in enumerate(fam):
        if not f.is_horizontal():
            lam = degenerate_check(f.vertical)
            if lam is not None:
                raise DegenerateVerticalMember(p, lam)
            if p in q:
                raise ValueError(f"member {p} in Q is vertical; Q members must be horizontal")
            vertical.add(p)
    for p in range(len(fam) - 1):
        a, b = fam[p], fam[p + 1]
        gap = max([_coeff_gap(x, y) for x, y in zip(a.base, b.base)]
                  + [_coeff_gap(x, y) for x, y in zip(a.vertical.canonical().components,
                                                     b.vertical.canonical().components)])
        if gap > continuity_tol:
            warnings.warn(ContinuityWarning(f"members {p} and {p + 1} differ by {gap:.3g} in coefficients"),
                          stacklevel=2)
    chi = _cutoff(len(fam), vertical, q)
    out = []
    for p, f in enumerate(fam):
        zero = tuple(RationalFn(Poly()) for _ in f.base)
        if chi[p] == 0:
            out.append(GridHomotopy(p, chi[p], LegendrianHomotopy(f.base, zero, f.vertical, d, Fraction(0),
                                                                   cfg.epsilon)))
            continue
        disp = horizontal_displacement(f.vertical.components, d, cfg)
        scale = _rescale(sup_norm(disp.gtilde, d), cfg.epsilon)
        hom = LegendrianHomotopy(f.base, disp.gtilde, f.vertical, d, scale * chi[p], cfg.epsilon)
        if not hom.eval(1).is_horizontal():
            # g_p + chi s g~ collapsed to a constant; halve the step (changes the ratio)
            hom = LegendrianHomotopy(f.base, disp.gtilde, f.vertical, d, scale * chi[p] / 2, cfg.epsilon)
        out.append(GridHomotopy(p, chi[p], hom))
    return ParametricResult(tuple(out), tuple(chi), tuple(sorted(vertical)), tuple(sorted(q)))


# ---------------------------------------------------------------------------
# general-position perturbation of a family of maps into C^k

@dataclass(frozen=True)
class PerturbResult:
    original: tuple       # tuple of tuples of RationalFn
    perturbed: tuple
    chi: tuple
    eta: Fraction
    offsets: tuple
    phi: tuple            # Lagrange interpolants phi_i(x_j) = delta_ij
    sup_change: float

    def homotopy(self, p: int, t) -> tuple:
        """(1 - t) f_p + t f~_p."""
        t = RationalFn.const(to_gr(Fraction(t)))
        one = RationalFn.const(1)
        return tuple((one - t) * a + t * b for a, b in zip(self.original[p], self.perturbed[p]))


def _lagrange(points: Sequence[GaussianRational]) -> list[RationalFn]:
    out = []
    for i, xi in enumerate(points):
        num, den = Poly.const(1), to_gr(1)
        for j, xj in enumerate(points):
            if j != i:
                num = num * Poly([-xj, 1])
                den = den * (xi - xj)
        out.append(RationalFn(num * den.inverse()))
    return out


def _on_diagonal(values: Sequence[tuple]) -> bool:
    """values[j] = f(x_j) in C^k; True when all points coincide."""
    return all(v == values[0] for v in values[1:])


def nonconstant_perturb(family: Sequence[Sequence], q_indices, test_points: Sequence, delta,
                        domain: CircularDomain | None = None) -> PerturbResult:
    """Perturb a grid family of maps M -> C^k so every member is nonconstant on the test points.

    F(p) = (f_p(x_1), ..., f_p(x_n)); F~ = F + eta * c with distinct offsets c_j
    added to the first coordinate; G = chi F + (1 - chi) F~ with chi = 1 on Q and
    1/2 on admissible neighbours; f~_p = f_p + sum_j (G_j - F_j) phi_j.
    """
    pts = [to_gr(x) for x in test_points]
    if len(pts) < 2:
        raise TooFewTestPoints("at least two test points are needed (2n - 2 > 1)")
    if len(set(pts)) != len(pts):
        raise ValueError("test points must be distinct")
    fam = [tuple(_rf(c) for c in f) for f in family]
    q = set(int(i) for i in q_indices)
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if domain is None:
        r = max(1, math.ceil(max(abs(complex(x)) for x in pts)))
        domain = CircularDomain.disc(0, r)

    F = [[tuple(c(x) for c in f) for x in pts] for f in fam]
    for p in q:
        if _on_diagonal(F[p]):
            raise ValueError(f"member {p} in Q is constant on the test points")
    chi = []
    for p in range(len(fam)):
        if p in q:
            chi.append(Fraction(1))
        elif any(abs(p - s) == 1 for s in q) and not _on_diagonal(F[p]):
            chi.append(Fraction(1, 2))
        else:
            chi.append(Fraction(0))

    offsets = tuple(to_gr(j) for j in range(len(pts)))
    phi = _lagrange(pts)
    bump = RationalFn(Poly())
    for c, f in zip(offsets, phi):
        bump = bump + RationalFn.const(c) * f
    sup = sup_norm([bump], domain)
    eta = round_down(float(delta) / (sup * float(SUP_MARGIN))) if sup > 0 else delta

    def build(eta):
        out = []
        for p, f in enumerate(fam):
            w = (1 - chi[p]) * eta
            if w == 0:
                out.append(f)
                continue
            out.append((f[0] + RationalFn.const(to_gr(w)) * bump,) + f[1:])
        return out

    for _ in range(64):
        pert = build(eta)
        if all(not _on_diagonal([tuple(c(x) for c in f) for x in pts]) for f in pert):
            break
        eta = eta * Fraction(2, 3)
    else:  # pragma: no cover
        raise ArithmeticError("could not move the family off the diagonal")
    change = max((float(1 - c) * float(eta) for c in chi), default=0.0) * sup
    return PerturbResult(tuple(fam), tuple(pert), tuple(chi), eta, offsets, tuple(phi), change)


# ---------------------------------------------------------------------------
# discontinuity of liftings at branch points

@dataclass(frozen=True)
class BranchExperiment:
    k: int
    m: int
    radius: Fraction
    family_a: tuple   # dicts per epsilon
    family_b: tuple

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m,
                "radius": f"{self.radius.numerator}/{self.radius.denominator}",
                "family_a": list(self.family_a), "family_b": list(self.family_b)}


def _fs_sup(h_eps: ProjCurve, h0: ProjCurve, pts: np.ndarray) -> tuple[float, complex]:
    a = h_eps.evaluate_numeric(pts)
    b = h0.evaluate_numeric(pts)
    dist = fubini_study_distances(a, b)
    dist = np.where(np.isfinite(dist), dist, -1.0)
    k = int(np.argmax(dist))
    return float(dist[k]), complex(pts[k])


def _disc_grid(r: float, radial: int = 64, angular: int = 256) -> np.ndarray:
    rho = np.linspace(0.0, r, radial + 1)[1:]
    theta = 2 * np.pi * np.arange(angular) / angular
    pts = (rho[:, None] * np.exp(1j * theta)[None, :]).ravel()
    return np.concatenate([[0.0 + 0.0j], pts])


def branch_discontinuity_experiment(k: int, m: int, eps_list: Sequence, radius) -> BranchExperiment:
    """Liftings of curves with a branch point at 0 under two perturbations.

    (A) g^e = (z^k/k + e z, z^m/m): immersions for e != 0 whose lifts stay a
        fixed Fubini-Study distance away from the lift of g^0.
    (B) (g_0^e)' = z^(k-1) - e^(k-1), (g_1^e)' = (g_0^e)' z^(m-k): the lift
        [-z^(m-k) : 1] does not depend on e, and (g_0^e)' keeps k-1 zeros in the disc.
    """
    if k < 2 or m <= k:
        raise ValueError("need 2 <= k < m")
    r = Fraction(radius)
    eps = [Fraction(e) for e in eps_list]
    if any(e == 0 for e in eps):
        raise ValueError("epsilon = 0 is the limit, not a sample")
    z = RationalFn(Poly([0, 1]))
    circle = Cycle(0, r)
    boundary = circle.nodes(BOUNDARY_SAMPLES)
    grid = _disc_grid(float(r))

    g0_0 = z ** k / RationalFn.const(k)
    g1 = z ** m / RationalFn.const(m)
    v0, v1 = lift_vertical(g0_0, g1)
    h0 = ProjCurve((RationalFn(v0), RationalFn(v1)))

    fam_a = []
    for e in eps:
        g0 = g0_0 + RationalFn.const(to_gr(e)) * z
        d0, d1 = g0.derivative(), g1.derivative()
        common = poly_gcd(d0.num, d1.num)
        common_zeros = zero_count(RationalFn(common), circle) if common.degree > 0 else 0
        a, b = lift_vertical(g0, g1)
        h = ProjCurve((RationalFn(a), RationalFn(b)))
        crit = np.array([c for c in d0.num.roots_numeric() if abs(c) <= float(r)], dtype=np.complex128)
        sup_disc, where = _fs_sup(h, h0, np.concatenate([grid, crit]))
        sup_bd, _ = _fs_sup(h, h0, boundary)
        fam_a.append({
            "epsilon": e,
            "immersive": common_zeros == 0,
            "zeros_g0_prime": zero_count(d0, circle),
            "zeros_g1_prime": zero_count(d1, circle),
            "common_zeros": common_zeros,
            "sup_fs_disc": sup_disc,
            "argmax": where,
            "sup_fs_boundary": sup_bd,
        })

    target = ProjCurve((-(z ** (m - k)), RationalFn.const(1)))
    fam_b = []
    for e in eps:
        d0 = z ** (k - 1) - RationalFn.const(to_gr(e) ** (k - 1))
        d1 = d0 * z ** (m - k)
        g0, g1b = antiderivative(d0), antiderivative(d1)
        a, b = lift_vertical(g0, g1b)
        h = ProjCurve((RationalFn(a), RationalFn(b)))
        fam_b.append({
            "epsilon": e,
            "lift": [str(c) for c in h.components],
            "lift_constant_in_eps": h.equivalent(target),
            "zero_count_g0_prime": zero_count(d0, circle),
        })
    return BranchExperiment(k, m, r, tuple(fam_a), tuple(fam_b))
