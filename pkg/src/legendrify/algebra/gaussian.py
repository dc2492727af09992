"""Exact scalars in Q(i).

A value is stored as ``(a + b*i) / d`` with integer ``a, b`` and ``d > 0``,
``gcd(a, b, d) == 1``.  ``re`` and ``im`` are exposed as reduced Fractions.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from math import gcd
from numbers import Rational

from ..errors import DivisionByZero

__all__ = ["GaussianRational", "GR", "I", "ZERO", "ONE", "to_gr", "parse_rational"]


class GaussianRational:
    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        obj = object.__new__(cls)
        if d < 0:
            a, b, d = -a, -b, -d
        obj._set(a, b, d)
        return obj

    # -- accessors ---------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Squared modulus |x|^2, exact."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    def __abs__(self) -> float:
        return abs(complex(self))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = to_gr(other, strict=False)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = to_gr(other, strict=False)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a - o._a, self._b - o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d - o._a * self._d, self._b * o._d - o._b * self._d, self._d * o._d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = to_gr(other, strict=False)
        if o is None:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        if b == 0 and e == 0:
            return GaussianRational._raw(a * c, 0, self._d * o._d)
        return GaussianRational._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise DivisionByZero("division by zero in Q(i)")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        return GaussianRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        o = to_gr(other, strict=False)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = to_gr(other, strict=False)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        o = to_gr(other, strict=False)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._hash is None:
            if self._b == 0:
                self._hash = hash(Fraction(self._a, self._d))
            else:
                self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def __repr__(self):
        return f"GR({self})"

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if re == 0:
            return "-" + _imag_str(-im) if im < 0 else _imag_str(im)
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{_imag_str(abs(im))}"

    # -- serialisation -----------------------------------------------------
    def to_json(self) -> dict:
        return {"re": rational_str(self.re), "im": rational_str(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        if isinstance(obj, dict):
            return cls(parse_rational(obj.get("re", "0")), parse_rational(obj.get("im", "0")))
        if isinstance(obj, (int, str)):
            return cls(parse_rational(obj))
        raise ValueError(f"cannot decode Gaussian rational from {obj!r}")


def _imag_str(x: Fraction) -> str:
    if x == 1:
        return "i"
    if x.denominator == 1:
        return f"{x}*i"
    return f"({x})*i"


def rational_str(x: Fraction) -> str:
    """``p/q`` rendering used by the JSON encoders."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


_RAT = _re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, Fraction):
        return s
    if not isinstance(s, str):
        raise ValueError(f"rationals are encoded as strings, got {s!r}")
    m = _RAT.match(s)
    if not m:
        raise ValueError(f"malformed rational {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {s!r}")
    return Fraction(num, den)


def to_gr(x, strict: bool = True):
    """Coerce ints, Fractions and GaussianRationals; floats are rejected."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, Rational):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    if strict:
        raise TypeError(f"cannot use {type(x).__name__} as an exact Q(i) scalar")
    return None


GR = GaussianRational
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
