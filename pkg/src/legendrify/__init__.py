"""Exact construction and certification of holomorphic Legendrian curves in
projectivised cotangent bundles P(T*Z) over explicit coordinate charts.

All geometry is carried out over the Gaussian rationals Q(i); floating point is
used only for quadrature oracles, sup norms and Fubini-Study distances.
"""

from __future__ import annotations

from .algebra import GaussianRational, LaurentSeries, Poly, RationalFn, local_expand
from .contact import (
    ContactChart,
    LegendrianCurve,
    ProjCurve,
    contact_nondegeneracy_check,
    contact_residual,
    fubini_study_distance,
)
from .deform import (
    DeformationConfig,
    LegendrianHomotopy,
    VerticalCurve,
    branch_discontinuity_experiment,
    horizontal_displacement,
    nonconstant_perturb,
    parametric_verticalize,
    verticalize_to_horizontal,
)
from .domain import CircularDomain, Cycle, Disc, holomorphic_on, homology_basis, winding_number
from .kernels import BACKEND
from .lift import (
    branch_classify,
    bryant_transform,
    conormal_solve,
    degenerate_check,
    distinct_tangents_check,
    legendrian_lift,
)
from .periods import antiderivative_on_domain, periods_exact, periods_quadrature, zero_count

__version__ = "0.1.0"

__all__ = [
    "GaussianRational", "LaurentSeries", "Poly", "RationalFn", "local_expand",
    "ContactChart", "LegendrianCurve", "ProjCurve", "contact_nondegeneracy_check",
    "contact_residual", "fubini_study_distance",
    "DeformationConfig", "LegendrianHomotopy", "VerticalCurve", "branch_discontinuity_experiment",
    "horizontal_displacement", "nonconstant_perturb", "parametric_verticalize",
    "verticalize_to_horizontal",
    "CircularDomain", "Cycle", "Disc", "holomorphic_on", "homology_basis", "winding_number",
    "BACKEND",
    "branch_classify", "bryant_transform", "conormal_solve", "degenerate_check",
    "distinct_tangents_check", "legendrian_lift",
    "antiderivative_on_domain", "periods_exact", "periods_quadrature", "zero_count",
]
