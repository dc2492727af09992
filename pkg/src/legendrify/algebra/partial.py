"""Factorization of denominators, partial fractions, residues and antiderivatives.

Factoring over Q(i) is limited on purpose: square-free decomposition, then
roots in Q(i) (numeric candidates, exact verification), then a split of
remaining quartics into two quadratics.  Anything else stays unsplit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..errors import BadFactorization, NonzeroResidue
from .gaussian import ONE, ZERO, GaussianRational, to_gr
from .poly import Poly, poly_gcd, poly_xgcd
from .rational import RationalFn

__all__ = [
    "squarefree_decomposition", "gaussian_roots", "factor", "Factor",
    "PartialFractions", "partial_fractions", "residue_at", "residues",
    "antiderivative",
]

Factor = tuple  # (monic Poly, multiplicity)

_DENOMINATOR_LADDER = (1, 2, 4, 8, 10, 16, 100, 1000, 10**4, 10**6)


def squarefree_decomposition(p: Poly) -> list[Factor]:
    """Yun's algorithm: p = lc * prod(f_k^k), f_k monic, square-free, coprime."""
    if p.degree < 1:
        return []
    p = p.monic()
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, k))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        k += 1
    return out


def _rational_candidates(x: float) -> list[Fraction]:
    seen = []
    for D in _DENOMINATOR_LADDER:
        f = Fraction(x).limit_denominator(D)
        if f not in seen:
            seen.append(f)
    return seen


def _candidates(z: complex) -> list[GaussianRational]:
    res = _rational_candidates(z.real)
    ims = _rational_candidates(z.imag)
    # pair candidates at comparable denominator levels first
    out = []
    for r, s in zip(res + [res[-1]] * len(ims), ims + [ims[-1]] * len(res)):
        g = GaussianRational(r, s)
        if g not in out:
            out.append(g)
    return out


def gaussian_roots(p: Poly) -> list[GaussianRational]:
    """Roots of a square-free polynomial that lie in Q(i), each certified exactly."""
    found = []
    if p.degree < 1:
        return found
    q = p
    for z in p.roots_numeric():
        for cand in _candidates(complex(z)):
            if cand in found:
                break
            if q(cand).is_zero():
                found.append(cand)
                q = q.exact_div(Poly([-cand, ONE]))
                break
    return found


def _split_quartic(p: Poly) -> list[Poly] | None:
    roots = p.roots_numeric()
    for i in range(4):
        for j in range(i + 1, 4):
            s = roots[i] + roots[j]
            pr = roots[i] * roots[j]
            for cs in _candidates(complex(-s)):
                for cp in _candidates(complex(pr)):
                    quad = Poly([cp, cs, ONE])
                    other, rem = divmod(p, quad)
                    if rem.is_zero():
                        return [quad, other.monic()]
    return None


def factor(p: Poly) -> list[Factor]:
    """Monic factors with multiplicities; linear factors first, then unsplit ones."""
    linear, rest = [], []
    for f, k in squarefree_decomposition(p):
        roots = gaussian_roots(f)
        q = f
        for r in roots:
            lin = Poly([-r, ONE])
            linear.append((lin, k))
            q = q.exact_div(lin)
        if q.degree == 4:
            parts = _split_quartic(q)
            if parts is not None:
                rest.extend((part, k) for part in parts)
                continue
        if q.degree > 0:
            rest.append((q.monic(), k))
    return linear + rest


def factorization_product(factors: Sequence[Factor]) -> Poly:
    out = Poly.const(1)
    for f, k in factors:
        out = out * f ** k
    return out


@dataclass(frozen=True)
class PFTerm:
    factor: Poly
    power: int
    numer: Poly

    def as_rational(self) -> RationalFn:
        return RationalFn(self.numer, self.factor ** self.power)

    @property
    def root(self) -> GaussianRational | None:
        """Root of a linear factor (None for higher-degree factors)."""
        if self.factor.degree == 1:
            return -self.factor.coeff(0) / self.factor.lc
        return None


@dataclass(frozen=True)
class PartialFractions:
    poly_part: Poly
    terms: tuple

    def recombine(self) -> RationalFn:
        acc = RationalFn(self.poly_part)
        for t in self.terms:
            acc = acc + t.as_rational()
        return acc

    def residue(self, a) -> GaussianRational:
        """Residue at a Q(i) point, read off from the simple-pole terms."""
        a = to_gr(a)
        acc = ZERO
        for t in self.terms:
            if t.power == 1 and t.factor.degree == 1 and t.root == a:
                acc = acc + t.numer.coeff(0) / t.factor.lc
        return acc

    def poles(self) -> list:
        """Distinct linear-factor roots, in factor order."""
        out = []
        for t in self.terms:
            r = t.root
            if r is not None and r not in out:
                out.append(r)
        return out

    def unsplit_factors(self) -> list[Poly]:
        out = []
        for t in self.terms:
            if t.factor.degree > 1 and t.factor not in out:
                out.append(t.factor)
        return out


def partial_fractions(f: RationalFn, den_factorization: Sequence[Factor] | None = None) -> PartialFractions:
    if den_factorization is None:
        den_factorization = factor(f.den)
    facs = [(q if isinstance(q, Poly) else Poly(q), int(m)) for q, m in den_factorization]
    for q, m in facs:
        if q.degree < 1 or m < 1:
            raise BadFactorization(f"invalid factor {q}^{m}")
    if factorization_product(facs).monic() != f.den.monic():
        raise BadFactorization(f"factors do not multiply to the denominator {f.den}")
    for i in range(len(facs)):
        for j in range(i + 1, len(facs)):
            if poly_gcd(facs[i][0], facs[j][0]).degree > 0:
                raise BadFactorization(f"factors {facs[i][0]} and {facs[j][0]} are not coprime")
    facs = [(q.monic(), m) for q, m in facs]

    poly_part, rem = divmod(f.num, f.den)
    terms = []
    if rem.is_zero():
        return PartialFractions(poly_part, ())
    for q, m in facs:
        big = q ** m
        rest = f.den.exact_div(big)
        _, s, _ = poly_xgcd(rest, big)  # s*rest = 1 mod big
        a = (rem * s) % big
        # q-adic expansion a = sum c_k q^k, giving terms c_k / q^(m-k)
        k = 0
        while not a.is_zero():
            a, c = divmod(a, q)
            if not c.is_zero():
                terms.append(PFTerm(q, m - k, c))
            k += 1
    terms.sort(key=lambda t: (_factor_index(facs, t.factor), t.power))
    return PartialFractions(poly_part, tuple(terms))


def _factor_index(facs, q):
    for i, (f, _) in enumerate(facs):
        if f == q:
            return i
    return len(facs)


def residue_at(f: RationalFn, a) -> GaussianRational:
    """Residue of f dz at a point of Q(i), from the local expansion."""
    from .laurent import local_expand
    return local_expand(f, a, order=-1).coeff(-1)


def residues(f: RationalFn, den_factorization: Sequence[Factor] | None = None) -> dict:
    pf = partial_fractions(f, den_factorization)
    return {a: pf.residue(a) for a in pf.poles()}


def _hermite(num: Poly, den: Poly) -> tuple[RationalFn, RationalFn]:
    """Split num/den (proper) into (rational part g, remainder h) with
    num/den = g' + h and h having a square-free denominator."""
    g = RationalFn(Poly())
    h = RationalFn(num, den)
    while not h.is_zero():
        sqf = squarefree_decomposition(h.den)
        if not sqf or max(k for _, k in sqf) == 1:
            break
        v, m = max(sqf, key=lambda fk: fk[1])
        vm = v ** m
        u = h.den.exact_div(vm)
        a = h.num
        uv1 = u * v.derivative()
        _, s, _ = poly_xgcd(uv1, v)  # s*u*v' = 1 mod v
        b = (a * s * to_gr(Fraction(-1, m - 1))) % v
        e = (a - u * v * b.derivative() + u * v.derivative() * b * (m - 1)).exact_div(v)
        g = g + RationalFn(b, v ** (m - 1))
        h = RationalFn(e, u * v ** (m - 1))
    return g, h


def antiderivative(f: RationalFn) -> RationalFn:
    """Rational F with F' = f and zero constant term in its polynomial part.

    Raises NonzeroResidue when some pole of f has a nonzero residue.
    """
    poly_part, rem = divmod(f.num, f.den)
    g, h = _hermite(rem, f.den) if not rem.is_zero() else (RationalFn(Poly()), RationalFn(Poly()))
    if not h.is_zero():
        dd = h.den.derivative()
        for a in gaussian_roots(h.den):
            res = h.num(a) / dd(a)
            if not res.is_zero():
                raise NonzeroResidue(a, res)
        # nonzero residues sit at irrational poles: report numerically
        for z in h.den.roots_numeric():
            n = complex(np.polyval(h.num.to_complex()[::-1], z))
            d = complex(np.polyval(dd.to_complex()[::-1], z))
            if abs(n / d) > 1e-12:
                raise NonzeroResidue(complex(z), n / d)
        raise NonzeroResidue(h.den, None)
    # g is proper, so the polynomial part of the result is poly_part.integral()
    return RationalFn(poly_part.integral()) + g
