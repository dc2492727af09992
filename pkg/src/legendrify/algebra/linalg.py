"""Gaussian elimination over Q(i)."""

from __future__ import annotations

from typing import Sequence

from .gaussian import ONE, ZERO, GaussianRational, to_gr

__all__ = ["rref", "solve", "nullspace", "rank", "Inconsistent"]


class Inconsistent(ValueError):
    """The linear system has no solution."""


def _matrix(rows: Sequence[Sequence]) -> list[list[GaussianRational]]:
    return [[to_gr(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[GaussianRational]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = _matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def solve(a: Sequence[Sequence], b: Sequence) -> list[GaussianRational]:
    """Basic solution of a x = b (free variables set to zero)."""
    if not a:
        return []
    n = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        raise Inconsistent("linear system is inconsistent")
    x = [ZERO] * n
    for row, c in zip(m, pivots):
        x[c] = row[n]
    return x


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> list[list[GaussianRational]]:
    """Basis of {x : a x = 0}, one vector per free column, each with a 1 there."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    m, pivots = rref(a) if a else ([], [])
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, c in zip(m, pivots):
            v[c] = -row[free]
        basis.append(v)
    return basis
