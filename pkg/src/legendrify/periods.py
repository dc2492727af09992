"""Periods of rational 1-forms f(z) dz along the homology cycles of a circular domain.

Periods are kept in reduced form, divided by 2*pi*i, so they are sums of
residues and stay exact in Q(i).  A trapezoid-rule quadrature serves as an
independent floating oracle.
"""

from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import RationalFn, antiderivative, partial_fractions
from .algebra.gaussian import ZERO
from .domain import CircularDomain, Cycle, homology_basis, winding_number
from .errors import NonzeroPeriods, PoleInDomain, UnfactoredPoleInHole
from .kernels import circle_nodes, contour_integral, quad_nodes

__all__ = [
    "PeriodVector", "periods_exact", "periods_quadrature", "quadrature_check",
    "QuadratureCheck", "zero_count", "antiderivative_on_domain", "pole_locations",
    "DOUBLING_TOLERANCE", "reduced_periods_numeric",
]

TWO_PI_I = 2j * cmath.pi
DOUBLING_TOLERANCE = 1e-10


@dataclass(frozen=True)
class PeriodVector:
    """Reduced periods (period / 2 pi i), one per hole.

    ``exact`` is False when some entry came from quadrature; such entries are
    complex floats rather than GaussianRationals.
    """

    reduced: tuple
    exact: bool = True

    def __len__(self) -> int:
        return len(self.reduced)

    def is_zero(self) -> bool:
        if self.exact:
            return all(v.is_zero() for v in self.reduced)
        return all(abs(complex(v)) < 1e-9 for v in self.reduced)

    def to_complex(self) -> list[complex]:
        return [complex(v) * TWO_PI_I for v in self.reduced]

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.reduced) + ")"


@dataclass(frozen=True)
class PoleReport:
    hole_poles: tuple      # (hole index, pole, residue-or-None)
    outside_poles: tuple   # (pole, residue-or-None)
    unsplit_in_holes: tuple  # hole indices needing quadrature


def _classify_numeric(z: complex, d: CircularDomain) -> tuple:
    tol = 1e-9
    oc, R = complex(d.outer.center), float(d.outer.radius)
    if abs(z - oc) > R * (1 + tol):
        return ("outside", None)
    for k, h in enumerate(d.holes):
        if abs(z - complex(h.center)) < float(h.radius) * (1 - tol):
            return ("hole", k)
    return ("domain", None)


def pole_locations(omega: RationalFn, d: CircularDomain, factor_hints=None) -> PoleReport:
    """Sort the poles of omega into holes and the exterior; raise on poles in M."""
    pf = partial_fractions(omega, factor_hints)
    hole, outside = [], []
    for a in pf.poles():
        where, k = d.locate(a)
        if where in ("interior", "boundary"):
            raise PoleInDomain(a)
        if where == "hole":
            hole.append((k, a, pf.residue(a)))
        else:
            outside.append((a, pf.residue(a)))
    unsplit = set()
    for q in pf.unsplit_factors():
        for z in q.roots_numeric():
            where, k = _classify_numeric(complex(z), d)
            if where == "domain":
                raise PoleInDomain(complex(z))
            if where == "hole":
                unsplit.add(k)
            else:
                outside.append((complex(z), None))
    return PoleReport(tuple(hole), tuple(outside), tuple(sorted(unsplit)))


def periods_exact(omega: RationalFn, d: CircularDomain, factor_hints=None,
                  strict: bool = False) -> PeriodVector:
    """Reduced periods of omega dz over the homology basis of d.

    The period over the circle around hole j is the sum of the residues at the
    poles inside hole j.  A pole inside a hole that belongs to a factor the
    factorizer could not split triggers UnfactoredPoleInHole: a warning and a
    quadrature value for that hole, or an exception when ``strict``.
    """
    rep = pole_locations(omega, d, factor_hints)
    reduced: list = [ZERO] * d.betti
    for k, _, res in rep.hole_poles:
        reduced[k] = reduced[k] + res
    if not rep.unsplit_in_holes:
        return PeriodVector(tuple(reduced), True)
    msg = f"pole of {omega} in hole(s) {list(rep.unsplit_in_holes)} lies in an unsplit factor"
    if strict:
        raise UnfactoredPoleInHole(msg)
    warnings.warn(UnfactoredPoleInHole(msg), stacklevel=2)
    cycles = homology_basis(d)
    for k in rep.unsplit_in_holes:
        reduced[k] = complex(periods_quadrature(omega, cycles[k])) / TWO_PI_I
    return PeriodVector(tuple(reduced), False)


def periods_quadrature(omega: RationalFn | Callable, cycle: Cycle, nodes: int | None = None) -> complex:
    """Trapezoid rule for the integral of omega dz over the cycle."""
    n = nodes or quad_nodes()
    if n < 16:
        raise ValueError("quadrature needs at least 16 nodes")
    c, r = complex(cycle.center), float(cycle.radius)
    if isinstance(omega, RationalFn):
        return contour_integral(omega.num.to_complex(), omega.den.to_complex(), c, r, n, cycle.orientation)
    z = circle_nodes(c, r, n)
    vals = np.asarray(omega(z), dtype=np.complex128)
    return complex(cycle.orientation * np.sum(vals * (z - c)) * 1j * (2 * np.pi / n))


@dataclass(frozen=True)
class QuadratureCheck:
    value: complex
    doubled: complex
    change: float
    analytic: bool


def quadrature_check(omega, cycle: Cycle, nodes: int | None = None) -> QuadratureCheck:
    """Quadrature at n and 2n nodes; flags non-analyticity when they disagree."""
    n = nodes or quad_nodes()
    q1 = periods_quadrature(omega, cycle, n)
    q2 = periods_quadrature(omega, cycle, 2 * n)
    change = abs(q2 - q1) / max(1.0, abs(q2))
    return QuadratureCheck(q1, q2, change, change <= DOUBLING_TOLERANCE)


def zero_count(f: RationalFn, cycle: Cycle) -> int:
    """Zeros minus poles of f enclosed by the cycle, with multiplicity."""
    if f.is_zero():
        return winding_number(f.num, cycle.center, cycle.radius)  # raises
    w = winding_number(f.num, cycle.center, cycle.radius)
    w -= winding_number(f.den, cycle.center, cycle.radius)
    return cycle.orientation * w


def antiderivative_on_domain(omega: RationalFn, d: CircularDomain, factor_hints=None) -> RationalFn:
    """A rational primitive of omega, holomorphic on d.

    Raises NonzeroPeriods when a period is nonzero.  With zero periods a rational
    primitive still needs every individual residue to vanish (a pair of
    opposite residues in one hole gives a single-valued logarithm, which is not
    rational); that case raises NonzeroResidue from the algebra layer.
    """
    pv = periods_exact(omega, d, factor_hints, strict=True)
    if not pv.is_zero():
        raise NonzeroPeriods(pv)
    return antiderivative(omega)


def reduced_periods_numeric(omega, d: CircularDomain, nodes: int | None = None) -> list[complex]:
    """Quadrature-only reduced periods over the homology basis."""
    return [periods_quadrature(omega, c, nodes) / TWO_PI_I for c in homology_basis(d)]
