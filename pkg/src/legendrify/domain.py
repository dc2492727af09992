"""Planar circular domains (a closed disc minus disjoint open round holes).

These stand in for compact bordered Riemann surfaces of genus zero: a domain
with l holes has first Betti number l, and the circles around the holes form
a homology basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import GaussianRational, Poly, RationalFn, parse_rational, rational_str, to_gr
from .errors import IndeterminateWinding
from .kernels import circle_nodes, log_winding, quad_nodes

__all__ = [
    "Disc", "CircularDomain", "Cycle", "homology_basis", "holomorphic_on",
    "HolomorphyCertificate", "winding_number", "BOUNDARY_TOLERANCE",
]

BOUNDARY_TOLERANCE = 1e-6
WINDING_MARGIN = 0.25
MAX_NODES = 1 << 18


@dataclass(frozen=True)
class Disc:
    center: GaussianRational
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", to_gr(self.center))
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise ValueError(f"radius must be positive, got {self.radius}")

    def to_json(self) -> dict:
        return {"center": self.center.to_json(), "radius": rational_str(self.radius)}

    @classmethod
    def from_json(cls, obj) -> "Disc":
        return cls(GaussianRational.from_json(obj["center"]), parse_rational(obj["radius"]))


@dataclass(frozen=True)
class Cycle:
    center: GaussianRational
    radius: Fraction
    orientation: int = 1

    def __post_init__(self):
        object.__setattr__(self, "center", to_gr(self.center))
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise ValueError("cycle radius must be positive")
        if self.orientation not in (1, -1):
            raise ValueError("orientation is +1 or -1")

    def nodes(self, n: int | None = None) -> np.ndarray:
        return circle_nodes(complex(self.center), float(self.radius), n or quad_nodes())


def _dist2(a: GaussianRational, b: GaussianRational) -> Fraction:
    return (a - b).norm()


@dataclass(frozen=True)
class CircularDomain:
    outer: Disc
    holes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        outer = self.outer if isinstance(self.outer, Disc) else Disc(*self.outer)
        holes = tuple(h if isinstance(h, Disc) else Disc(*h) for h in self.holes)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "holes", holes)
        for k, h in enumerate(holes):
            gap = outer.radius - h.radius
            if gap <= 0 or _dist2(h.center, outer.center) >= gap * gap:
                raise ValueError(f"hole {k} is not inside the open outer disc")
            for j in range(k):
                o = holes[j]
                if _dist2(h.center, o.center) <= (h.radius + o.radius) ** 2:
                    raise ValueError(f"holes {j} and {k} have intersecting closures")

    @classmethod
    def disc(cls, center=0, radius=1) -> "CircularDomain":
        return cls(Disc(center, radius), ())

    @classmethod
    def annulus(cls, inner, outer, center=0) -> "CircularDomain":
        return cls(Disc(center, outer), (Disc(center, inner),))

    @property
    def betti(self) -> int:
        return len(self.holes)

    def locate(self, z) -> tuple:
        """Exact position of a Q(i) point: ("interior"|"boundary"|"hole"|"outside", index)."""
        z = to_gr(z)
        d = _dist2(z, self.outer.center)
        r2 = self.outer.radius ** 2
        if d > r2:
            return ("outside", None)
        on_boundary = d == r2
        for k, h in enumerate(self.holes):
            dh = _dist2(z, h.center)
            if dh < h.radius ** 2:
                return ("hole", k)
            if dh == h.radius ** 2:
                return ("boundary", k)
        return ("boundary", None) if on_boundary else ("interior", None)

    def contains(self, z) -> bool:
        """True for points of the closed domain."""
        return self.locate(z)[0] in ("interior", "boundary")

    def boundary_circles(self) -> list[Cycle]:
        out = [Cycle(self.outer.center, self.outer.radius, 1)]
        out.extend(Cycle(h.center, h.radius, -1) for h in self.holes)
        return out

    def boundary_samples(self, n: int = 1024) -> np.ndarray:
        return np.concatenate([c.nodes(n) for c in self.boundary_circles()])

    def to_json(self) -> dict:
        return {"outer": self.outer.to_json(), "holes": [h.to_json() for h in self.holes]}

    @classmethod
    def from_json(cls, obj) -> "CircularDomain":
        return cls(Disc.from_json(obj["outer"]), tuple(Disc.from_json(h) for h in obj.get("holes", [])))


def _rational_between(x: float, lo: Fraction, hi: Fraction, ok) -> Fraction:
    for D in (8, 64, 1024, 10**6, 10**12):
        q = Fraction(x).limit_denominator(D)
        if lo < q < hi and ok(q):
            return q
    raise ArithmeticError("no admissible rational radius found")


def homology_basis(d: CircularDomain) -> list[Cycle]:
    """One positively oriented circle per hole.

    The radius is (a rational approximation of) the geometric mean of the hole
    radius and the hole radius plus half its minimal clearance to the other
    boundary components.
    """
    cycles = []
    oc = complex(d.outer.center)
    for k, h in enumerate(d.holes):
        hc = complex(h.center)
        r = float(h.radius)
        gap = float(d.outer.radius) - abs(hc - oc) - r
        for j, o in enumerate(d.holes):
            if j != k:
                gap = min(gap, abs(hc - complex(o.center)) - r - float(o.radius))
        hi = r + gap / 2

        def admissible(rho, k=k, h=h):
            R = d.outer.radius
            if not (rho < R and _dist2(h.center, d.outer.center) < (R - rho) ** 2):
                return False
            for j, o in enumerate(d.holes):
                if j != k and _dist2(h.center, o.center) <= (rho + o.radius) ** 2:
                    return False
            return True

        rho = _rational_between(math.sqrt(r * hi), h.radius, Fraction(hi) * 2, admissible)
        cycles.append(Cycle(h.center, rho, 1))
    for i in range(len(cycles)):
        for j in range(i):
            a, b = cycles[i], cycles[j]
            if _dist2(a.center, b.center) <= (a.radius + b.radius) ** 2:
                raise ArithmeticError("homology cycles intersect")
    return cycles


def _guard_roots(p: Poly, center: complex, radius: float) -> None:
    for z in p.roots_numeric():
        if abs(abs(complex(z) - center) - radius) < BOUNDARY_TOLERANCE * radius:
            raise IndeterminateWinding(
                f"root {complex(z):.6g} of {p} lies on (or within 1e-6 of) the circle "
                f"|z - {center:.6g}| = {radius:.6g}")


def winding_number(p: Poly, center, radius) -> int:
    """Number of zeros of the polynomial p inside the circle, via the argument principle.

    The trapezoid estimate of (1/2 pi i) * contour integral of p'/p is refined by
    doubling the node count until two successive estimates agree and sit within
    0.25 of an integer.
    """
    if p.is_zero():
        raise IndeterminateWinding("winding number of the zero polynomial")
    if p.degree < 1:
        return 0
    c = complex(to_gr(center))
    r = float(radius)
    _guard_roots(p, c, r)
    coeffs = p.to_complex()
    n = max(quad_nodes(), 4 * p.degree)
    prev, _ = log_winding(coeffs, c, r, n)
    while n < MAX_NODES:
        n *= 2
        w, _ = log_winding(coeffs, c, r, n)
        k = round(w) if math.isfinite(w) else None
        if k is not None and abs(w - prev) < 1e-3 and abs(w - k) < WINDING_MARGIN:
            return int(k)
        prev = w
    raise IndeterminateWinding(f"winding estimate {prev} did not settle near an integer", prev)


@dataclass(frozen=True)
class HolomorphyCertificate:
    verdict: bool
    outer_count: int
    hole_counts: tuple
    poles_in_domain: int

    def __bool__(self) -> bool:
        return self.verdict


def holomorphic_on(f: RationalFn, d: CircularDomain) -> HolomorphyCertificate:
    """Certify that f has no poles in the closed domain by integer winding numbers."""
    den = f.den
    if den.is_constant():
        return HolomorphyCertificate(True, 0, tuple(0 for _ in d.holes), 0)
    outer = winding_number(den, d.outer.center, d.outer.radius)
    holes = tuple(winding_number(den, h.center, h.radius) for h in d.holes)
    inside = outer - sum(holes)
    return HolomorphyCertificate(inside == 0, outer, holes, inside)
