"""Dense univariate polynomials over Q(i), coefficients in ascending degree."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ..errors import DivisionByZero
from .gaussian import ONE, ZERO, GaussianRational, to_gr

__all__ = ["Poly", "poly_gcd", "poly_xgcd", "poly_lcm"]


def _trim(cs: list) -> tuple:
    while cs and cs[-1].is_zero():
        cs.pop()
    return tuple(cs)


class Poly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[GaussianRational, ...] = _trim([to_gr(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _make(cls, cs: list) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = _trim(cs)
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls._make([to_gr(c)])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls._make([ZERO] * k + [to_gr(c)])

    @classmethod
    def from_roots(cls, roots: Sequence) -> "Poly":
        p = cls.const(1)
        for r in roots:
            p = p * cls._make([-to_gr(r), ONE])
        return p

    # -- basic structure ---------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def valuation(self) -> int:
        """Order of vanishing at 0 (-1 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return -1

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lc
        if lc == ONE:
            return self
        inv = lc.inverse()
        return Poly._make([c * inv for c in self.coeffs])

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] = cs[k] + c
        return Poly._make(cs)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make([-c for c in self.coeffs])

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly._make([])
            cs = [ZERO] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x.is_zero():
                    continue
                for j, y in enumerate(b):
                    cs[i + j] = cs[i + j] + x * y
            return Poly._make(cs)
        c = to_gr(other, strict=False)
        if c is None:
            return NotImplemented
        if c.is_zero():
            return Poly._make([])
        return Poly._make([x * c for x in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        if len(rem) - 1 < db:
            return Poly._make([]), self
        inv = o.lc.inverse()
        quo = [ZERO] * (len(rem) - db)
        bc = o.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            q = c * inv
            quo[k - db] = q
            for j in range(db + 1):
                rem[k - db + j] = rem[k - db + j] - q * bc[j]
        return Poly._make(quo), Poly._make(rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("polynomial division is not exact")
        return q

    # -- calculus ----------------------------------------------------------
    def derivative(self) -> "Poly":
        return Poly._make([c * k for k, c in enumerate(self.coeffs) if k])

    def integral(self) -> "Poly":
        """Antiderivative with zero constant term."""
        return Poly._make([ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    # -- evaluation --------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, Poly):
            return self.compose(x)
        x = to_gr(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly._make([])
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly._make([c])
        return acc

    def shift(self, c) -> "Poly":
        """Return q with q(x) = p(x + c) (Taylor shift)."""
        c = to_gr(c)
        if c.is_zero():
            return self
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                cs[k] = cs[k] + c * cs[k + 1]
        return Poly._make(cs)

    def to_complex(self) -> np.ndarray:
        """Coefficients as complex128, ascending degree."""
        return np.array([complex(c) for c in self.coeffs], dtype=np.complex128)

    def roots_numeric(self) -> np.ndarray:
        if self.degree < 1:
            return np.zeros(0, dtype=np.complex128)
        return np.roots(self.to_complex()[::-1])

    # -- comparison, display, json -----------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return self.format("z")

    def format(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if c.is_real():
                r = c.re
                sign = "-" if r < 0 else "+"
                mag = abs(r)
                if mono and mag == 1:
                    body = mono
                elif mono:
                    body = f"{mag}*{mono}" if mag.denominator == 1 else f"({mag})*{mono}"
                else:
                    body = str(mag)
            else:
                sign = "+"
                body = f"({c})*{mono}" if mono else f"({c})"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> "Poly":
        if not isinstance(obj, list):
            raise ValueError("a polynomial is encoded as a coefficient array")
        return cls(GaussianRational.from_json(c) for c in obj)


def _coerce(x):
    if isinstance(x, Poly):
        return x
    c = to_gr(x, strict=False)
    if c is None:
        return None
    return Poly._make([c])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly.const(1), Poly._make([])
    t0, t1 = Poly._make([]), Poly.const(1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = r0.lc.inverse()
    return r0 * inv, s0 * inv, t0 * inv


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly._make([])
    return (a * b).exact_div(poly_gcd(a, b)).monic()
