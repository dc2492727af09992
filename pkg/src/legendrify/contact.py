"""Contact charts on the projectivised cotangent bundle, Legendrian residuals and
the Fubini-Study metric.

A point of P(T*Z) over a chart of Z is (z_0..z_n, [zeta_0 : ... : zeta_n]); the
contact structure is the kernel of sum zeta_j dz_j.  A curve (g, [zeta]) is
Legendrian when sum zeta_j g_j' vanishes identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .algebra import GaussianRational, Poly, RationalFn, poly_gcd, poly_lcm, to_gr
from .algebra.gaussian import ONE, ZERO
from .domain import CircularDomain
from .errors import AllZero, DomainMismatch, UnsupportedDimension, ZeroVector

__all__ = [
    "ContactChart", "LinearOneForm", "ProjCurve", "LegendrianCurve",
    "contact_residual", "fubini_study_distance", "fubini_study_distances",
    "contact_nondegeneracy_check", "wedge",
]


def _rf(x) -> RationalFn:
    return x if isinstance(x, RationalFn) else RationalFn(x)


# ---------------------------------------------------------------------------
# exterior algebra on constant-coefficient forms
#
# A k-form is a dict {sorted index tuple: coefficient}.

def _merge_sign(a: tuple, b: tuple) -> tuple[int, tuple] | None:
    if set(a) & set(b):
        return None
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


def wedge(u: dict, v: dict) -> dict:
    out: dict = {}
    for ka, ca in u.items():
        for kb, cb in v.items():
            m = _merge_sign(ka, kb)
            if m is None:
                continue
            s, key = m
            out[key] = out.get(key, ZERO) + ca * cb * s
    return {k: c for k, c in out.items() if not c.is_zero()}


@dataclass(frozen=True)
class LinearOneForm:
    """sum_a (const[a] + sum_b lin[a][b] x_b) dx_a on C^dim.

    The differential of such a form has constant coefficients, which keeps the
    exterior algebra exact and pointwise.
    """

    n: int
    dim: int
    const: tuple
    lin: tuple  # lin[a] = {b: coefficient}
    names: tuple = ()

    def at(self, point: Sequence) -> dict:
        p = [to_gr(x) for x in point]
        if len(p) != self.dim:
            raise ValueError(f"sample has {len(p)} coordinates, chart has {self.dim}")
        out = {}
        for a in range(self.dim):
            c = to_gr(self.const[a])
            for b, coef in self.lin[a].items():
                c = c + to_gr(coef) * p[b]
            if not c.is_zero():
                out[(a,)] = c
        return out

    def differential(self) -> dict:
        # d(x_b dx_a) = dx_b ^ dx_a
        out: dict = {}
        for a in range(self.dim):
            for b, coef in self.lin[a].items():
                if a == b:
                    continue
                key, s = ((b, a), 1) if b < a else ((a, b), -1)
                out[key] = out.get(key, ZERO) + to_gr(coef) * s
        return {k: c for k, c in out.items() if not c.is_zero()}

    def top_form(self, point: Sequence) -> dict:
        """alpha ^ (d alpha)^n at the point."""
        acc = self.at(point)
        da = self.differential()
        for _ in range(self.n):
            acc = wedge(acc, da)
        return acc


@dataclass(frozen=True)
class ContactChart:
    """Chart of P(T*Z) over a chart of Z of dimension n+1.

    ``homogeneous``: coordinates (z_0..z_n, zeta_0..zeta_n), form sum zeta_j dz_j.
    ``affine`` with index j: zeta_j = 1, coordinates (z_0..z_n, zeta_i for i != j),
    form dz_j + sum_{i != j} zeta_i dz_i.
    """

    n: int
    kind: str = "affine"
    j: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("fibre dimension n must be at least 1")
        if self.kind not in ("homogeneous", "affine"):
            raise ValueError(f"unknown chart kind {self.kind!r}")
        if self.kind == "affine" and not 0 <= self.j <= self.n:
            raise ValueError(f"affine index {self.j} outside 0..{self.n}")

    @property
    def dim(self) -> int:
        return 2 * self.n + 2 if self.kind == "homogeneous" else 2 * self.n + 1

    def coordinate_names(self) -> tuple:
        zs = tuple(f"z{i}" for i in range(self.n + 1))
        if self.kind == "homogeneous":
            return zs + tuple(f"zeta{i}" for i in range(self.n + 1))
        return zs + tuple(f"zeta{i}" for i in range(self.n + 1) if i != self.j)

    def form(self) -> LinearOneForm:
        m = self.n + 1
        const = [ZERO] * self.dim
        lin = [dict() for _ in range(self.dim)]
        if self.kind == "homogeneous":
            for i in range(m):
                lin[i] = {m + i: ONE}
        else:
            const[self.j] = ONE
            slot = m
            for i in range(m):
                if i != self.j:
                    lin[i] = {slot: ONE}
                    slot += 1
        return LinearOneForm(self.n, self.dim, tuple(const), tuple(lin), self.coordinate_names())


def contact_nondegeneracy_check(chart: ContactChart | LinearOneForm, samples: Sequence) -> bool:
    """True iff alpha ^ (d alpha)^n is nonzero at every sample point.

    In an affine chart this is a top-degree form, so the test is that it is a
    nonzero multiple of the volume form.  On the homogeneous chart (one
    dimension more) it is a (2n+1)-form, required to be nonzero.
    """
    form = chart.form() if isinstance(chart, ContactChart) else chart
    if form.n > 3:
        raise UnsupportedDimension(f"exterior check supports n <= 3, got n = {form.n}")
    for p in samples:
        top = form.top_form(p)
        if not top:
            return False
    return True


# ---------------------------------------------------------------------------
# projective curves

@dataclass(frozen=True)
class ProjCurve:
    """[zeta_0 : ... : zeta_n] given by a homogeneous representative."""

    components: tuple
    domain: CircularDomain | None = None

    def __post_init__(self):
        comps = tuple(_rf(c) for c in self.components)
        if not comps:
            raise ValueError("a projective curve needs at least one component")
        if all(c.is_zero() for c in comps):
            raise AllZero("all components of the projective curve vanish identically")
        object.__setattr__(self, "components", comps)

    @property
    def n(self) -> int:
        return len(self.components) - 1

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, k) -> RationalFn:
        return self.components[k]

    def canonical(self) -> "ProjCurve":
        """Polynomial representative with coprime entries, first nonzero entry monic."""
        den = Poly.const(1)
        for c in self.components:
            den = poly_lcm(den, c.den)
        nums = [c.num * den.exact_div(c.den) for c in self.components]
        g = Poly()
        for p in nums:
            g = poly_gcd(g, p)
        nums = [p.exact_div(g) for p in nums]
        lead = next(p for p in nums if not p.is_zero()).lc
        nums = [p * lead.inverse() for p in nums]
        return ProjCurve(tuple(RationalFn(p) for p in nums), self.domain)

    def equivalent(self, other: "ProjCurve") -> bool:
        """Same projective curve: all cross terms zeta_i zeta'_k - zeta_k zeta'_i vanish."""
        if len(self) != len(other):
            return False
        a, b = self.components, other.components
        for i, k in combinations(range(len(a)), 2):
            if not (a[i] * b[k] - a[k] * b[i]).is_zero():
                return False
        return True

    def scaled(self, s: RationalFn) -> "ProjCurve":
        return ProjCurve(tuple(c * s for c in self.components), self.domain)

    def at(self, x) -> tuple:
        return tuple(c(x) for c in self.components)

    def evaluate_numeric(self, z) -> np.ndarray:
        """Array of shape (len(z), n+1)."""
        z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
        return np.stack([c.evaluate_numeric(z) for c in self.components], axis=-1)

    def to_json(self) -> list:
        return [c.to_json() for c in self.components]


@dataclass(frozen=True)
class LegendrianCurve:
    base: tuple
    vertical: ProjCurve
    certified: bool = False
    domain: CircularDomain | None = None

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(_rf(g) for g in self.base))
        if not isinstance(self.vertical, ProjCurve):
            object.__setattr__(self, "vertical", ProjCurve(tuple(self.vertical), self.domain))
        if self.domain is None and self.vertical.domain is not None:
            object.__setattr__(self, "domain", self.vertical.domain)

    @property
    def n(self) -> int:
        return len(self.base) - 1

    @classmethod
    def certify(cls, base, vertical, domain=None) -> "LegendrianCurve":
        cand = cls(tuple(base), vertical if isinstance(vertical, ProjCurve) else ProjCurve(tuple(vertical), domain),
                   False, domain)
        return cls(cand.base, cand.vertical, contact_residual(cand).is_zero(), cand.domain)

    def is_horizontal(self) -> bool:
        return any(not g.is_constant() for g in self.base)

    def to_json(self) -> dict:
        return {
            "base": [g.to_json() for g in self.base],
            "vertical": self.vertical.to_json(),
            "domain": self.domain.to_json() if self.domain is not None else None,
        }

    @classmethod
    def from_json(cls, obj) -> "LegendrianCurve":
        dom = obj.get("domain")
        d = CircularDomain.from_json(dom) if dom else None
        base = tuple(RationalFn.from_json(g) for g in obj["base"])
        vert = ProjCurve(tuple(RationalFn.from_json(h) for h in obj["vertical"]), d)
        return cls(base, vert, False, d)


def contact_residual(c: LegendrianCurve) -> RationalFn:
    """sum_i zeta_i * g_i' as an exact reduced rational function."""
    vd = c.vertical.domain
    if vd is not None and c.domain is not None and vd != c.domain:
        raise DomainMismatch("base and vertical component live on different domains")
    if len(c.base) != len(c.vertical):
        raise DomainMismatch(f"base has {len(c.base)} components, vertical has {len(c.vertical)}")
    acc = RationalFn(Poly())
    for g, zeta in zip(c.base, c.vertical.components):
        if not g.is_constant() and not zeta.is_zero():
            acc = acc + zeta * g.derivative()
    return acc


# ---------------------------------------------------------------------------
# Fubini-Study metric

def fubini_study_distances(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Row-wise distances between arrays of homogeneous vectors, shape (m, k).

    Uses atan2(|p ^ q|, |<p, q>|), which stays accurate near 0 and pi/2.
    """
    p = np.atleast_2d(np.asarray(p, dtype=np.complex128))
    q = np.atleast_2d(np.asarray(q, dtype=np.complex128))
    inner = np.abs(np.sum(p * np.conj(q), axis=-1))
    k = p.shape[-1]
    cross2 = np.zeros(p.shape[:-1])
    for i in range(k):
        for j in range(i + 1, k):
            cross2 += np.abs(p[..., i] * q[..., j] - p[..., j] * q[..., i]) ** 2
    return np.arctan2(np.sqrt(cross2), inner)


def fubini_study_distance(p, q) -> float:
    p = np.asarray(p, dtype=np.complex128)
    q = np.asarray(q, dtype=np.complex128)
    if p.shape != q.shape:
        raise ValueError("vectors must have the same length")
    if not np.any(p) or not np.any(q):
        raise ZeroVector("Fubini-Study distance of a zero vector is undefined")
    # rescale to avoid overflow in the products
    p = p / np.max(np.abs(p))
    q = q / np.max(np.abs(q))
    return float(min(fubini_study_distances(p, q)[0], math.pi / 2))


def as_gaussian_point(values: Sequence) -> tuple[GaussianRational, ...]:
    return tuple(to_gr(v) for v in values)
