"""Reduced rational functions over Q(i).

Canonical form: gcd(num, den) = 1 and den monic, so equality of functions is
equality of the stored pairs.
"""

from __future__ import annotations

import ast

import numpy as np

from ..errors import DivisionByZero
from .gaussian import I, ONE, GaussianRational, to_gr
from .poly import Poly, poly_gcd

__all__ = ["RationalFn", "Z", "parse_rational_fn"]


class RationalFn:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Poly.const(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            num, den = num, Poly.const(1)
        elif not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != ONE:
            inv = lc.inverse()
            num = num * inv
            den = den * inv
        self.num: Poly = num
        self.den: Poly = den
        self._hash = None

    @classmethod
    def _reduced(cls, num: Poly, den: Poly) -> "RationalFn":
        # caller guarantees canonical form
        f = object.__new__(cls)
        f.num, f.den, f._hash = num, den, None
        return f

    @classmethod
    def const(cls, c) -> "RationalFn":
        return cls._reduced(Poly.const(c), Poly.const(1))

    @classmethod
    def parse(cls, text: str) -> "RationalFn":
        return parse_rational_fn(text)

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    # -- field operations --------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._reduced(-self.num, self.den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_constant():
            c = o.num.coeff(0)
            return RationalFn._reduced(self.num * c, self.den) if c else RationalFn(Poly())
        if self.is_constant():
            return o * self
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero(f"division of {self} by the zero function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return RationalFn.const(1) / (self ** (-k))
        return RationalFn._reduced(self.num ** k, self.den ** k) if k else RationalFn.const(1)

    def derivative(self) -> "RationalFn":
        n, d = self.num, self.den
        if d.is_constant():
            return RationalFn._reduced(n.derivative(), d)
        return RationalFn(n.derivative() * d - n * d.derivative(), d * d)

    # -- evaluation --------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, RationalFn):
            return self.compose(x)
        x = to_gr(x)
        dv = self.den(x)
        if dv.is_zero():
            raise DivisionByZero(f"{self} has a pole at {x}")
        return self.num(x) / dv

    def compose(self, inner: "RationalFn") -> "RationalFn":
        def hom(p: Poly) -> RationalFn:
            acc = RationalFn(Poly())
            for c in reversed(p.coeffs):
                acc = acc * inner + RationalFn.const(c)
            return acc
        return hom(self.num) / hom(self.den)

    def evaluate_numeric(self, z) -> np.ndarray:
        from ..kernels import rational_eval
        z = np.asarray(z, dtype=np.complex128)
        return rational_eval(self.num.to_complex(), self.den.to_complex(), z.ravel()).reshape(z.shape)

    # -- comparison, display, json -----------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RationalFn({self})"

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        n = str(self.num)
        if len(self.num.coeffs) > 1 or not self.num.coeffs[0].is_real():
            n = f"({n})"
        return f"{n}/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj) -> "RationalFn":
        if isinstance(obj, str):
            return parse_rational_fn(obj)
        if isinstance(obj, list):
            return cls(Poly.from_json(obj))
        if not isinstance(obj, dict) or "num" not in obj:
            raise ValueError("a rational function is encoded as {\"num\": [...], \"den\": [...]}")
        return cls(Poly.from_json(obj["num"]), Poly.from_json(obj.get("den", [{"re": "1/1", "im": "0/1"}])))


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (list, tuple)):
        return Poly(x)
    return Poly.const(x)


def _coerce(x):
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, Poly):
        return RationalFn._reduced(x, Poly.const(1))
    c = to_gr(x, strict=False)
    if c is None:
        return None
    return RationalFn.const(c)


Z = RationalFn(Poly([0, 1]))


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def parse_rational_fn(text: str, var: str = "z") -> RationalFn:
    """Parse expressions such as ``"(z^2 - 1)/z"`` or ``"1/2*z + i"``.

    Supports integer literals, ``i``, the variable, ``+ - * /``, integer
    powers (``^`` or ``**``) and parentheses.
    """
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return RationalFn.const(node.value)
        if isinstance(node, ast.Name):
            if node.id == var:
                return Z
            if node.id == "i":
                return RationalFn.const(I)
            raise ValueError(f"unknown symbol {node.id!r} in {text!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                sign = 1
                if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                    sign, exp = -1, exp.operand
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise ValueError(f"only integer exponents are supported in {text!r}")
                return walk(node.left) ** (sign * exp.value)
            op = _BINOPS.get(type(node.op))
            if op is not None:
                return op(walk(node.left), walk(node.right))
        raise ValueError(f"unsupported syntax in {text!r}")

    return walk(tree)

