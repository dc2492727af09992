"""Truncated Laurent series with exact Q(i) coefficients.

A series ``x^v (c_0 + c_1 x + ...)`` is known exactly up to and including the
term of degree ``truncation_order``; higher terms are unknown.  Trailing zero
coefficients are not stored.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DivisionByZero
from .gaussian import ZERO, GaussianRational, to_gr
from .poly import Poly
from .rational import RationalFn

__all__ = ["LaurentSeries", "local_expand", "DEFAULT_ORDER"]

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class LaurentSeries:
    valuation: int
    coeffs: tuple
    truncation_order: int

    def __post_init__(self):
        cs = [to_gr(c) for c in self.coeffs]
        # strip leading zeros into the valuation and drop unknown / trailing terms
        v = self.valuation
        while cs and cs[0].is_zero():
            cs.pop(0)
            v += 1
        keep = self.truncation_order - v + 1
        cs = cs[:max(keep, 0)]
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            v = self.truncation_order
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "valuation", v)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "LaurentSeries":
        return cls(order, (), order)

    @classmethod
    def from_poly(cls, p: Poly, order: int = DEFAULT_ORDER) -> "LaurentSeries":
        return cls(0, p.coeffs, order)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> GaussianRational:
        if k > self.truncation_order:
            raise ValueError(f"coefficient {k} lies beyond truncation order {self.truncation_order}")
        i = k - self.valuation
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO

    @property
    def leading(self) -> GaussianRational:
        return self.coeffs[0] if self.coeffs else ZERO

    def truncate(self, order: int) -> "LaurentSeries":
        return LaurentSeries(self.valuation, self.coeffs, min(order, self.truncation_order))

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        t = min(self.truncation_order, other.truncation_order)
        lo = min(self.valuation, other.valuation)
        return LaurentSeries(lo, [self.coeff(k) + other.coeff(k) for k in range(lo, t + 1)], t)

    def __neg__(self):
        return LaurentSeries(self.valuation, [-c for c in self.coeffs], self.truncation_order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            c = to_gr(other)
            return LaurentSeries(self.valuation, [x * c for x in self.coeffs], self.truncation_order)
        if self.is_zero() or other.is_zero():
            t = min(self.valuation + other.truncation_order, other.valuation + self.truncation_order)
            return LaurentSeries.zero(t)
        v = self.valuation + other.valuation
        t = min(self.valuation + other.truncation_order, other.valuation + self.truncation_order)
        n = t - v + 1
        a, b = self.coeffs, other.coeffs
        out = [ZERO] * max(n, 0)
        for i, x in enumerate(a[:n]):
            for j, y in enumerate(b[:n - i]):
                out[i + j] = out[i + j] + x * y
        return LaurentSeries(v, out, t)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentSeries":
        if self.is_zero():
            raise DivisionByZero("inverse of a zero (or unknown) series")
        v = self.valuation
        n = self.truncation_order - v + 1
        return LaurentSeries(-v, _series_div([to_gr(1)], list(self.coeffs), n), self.truncation_order - 2 * v)

    def __truediv__(self, other):
        if not isinstance(other, LaurentSeries):
            return self * to_gr(other).inverse()
        return self * other.inverse()

    def derivative(self) -> "LaurentSeries":
        return LaurentSeries(self.valuation - 1,
                             [c * (self.valuation + k) for k, c in enumerate(self.coeffs)],
                             self.truncation_order - 1)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            e = self.valuation + k
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            terms.append(f"({c})*{mono}" if mono else f"({c})")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.truncation_order + 1})"


def _series_div(num: list, den: list, n: int) -> list:
    """First ``n`` coefficients of num/den as power series; den[0] != 0."""
    inv0 = den[0].inverse()
    q = []
    for k in range(n):
        acc = num[k] if k < len(num) else ZERO
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * q[k - j]
        q.append(acc * inv0)
    return q


def local_expand(f: RationalFn, center=0, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """Exact Laurent expansion of ``f`` at ``center`` in the local variable x = z - center."""
    center = to_gr(center)
    if f.is_zero():
        return LaurentSeries.zero(order)
    num = f.num.shift(center)
    den = f.den.shift(center)
    vn, vd = num.valuation(), den.valuation()
    v = vn - vd
    n = order - v + 1
    if n <= 0:
        return LaurentSeries.zero(order)
    coeffs = _series_div(list(num.coeffs[vn:]), list(den.coeffs[vd:]), n)
    return LaurentSeries(v, coeffs, order)
