"""Independent reference implementations used by the tests."""

from __future__ import annotations

import sympy as sp

from conftest import Z_SYM, to_sympy


def degenerate_oracle(components) -> list | None:
    """Brute-force: the null space of the coefficient matrix of sum lambda_i h_i,
    computed by sympy on the fully expanded common-denominator numerators."""
    exprs = [sp.together(to_sympy(c)) for c in components]
    den = sp.Integer(1)
    for e in exprs:
        den = sp.lcm(den, sp.denom(e))
    nums = [sp.expand(sp.cancel(e * den)) for e in exprs]
    deg = max(sp.Poly(n, Z_SYM).degree() if n != 0 else 0 for n in nums)
    rows = [[sp.Poly(n, Z_SYM).coeff_monomial(Z_SYM ** k) if n != 0 else 0 for n in nums]
            for k in range(deg + 1)]
    ns = sp.Matrix(rows).nullspace()
    return [list(v) for v in ns] if ns else None


