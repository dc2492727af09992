"""Numeric kernels: compiled ``_ckernels`` when importable, numpy otherwise.

Set ``LEGENDRIFY_PURE_PYTHON=1`` to force the numpy fallback.  ``BACKEND``
names the implementation in use.
"""

import os

from . import _kernels_py

_FUNCS = ("circle_nodes", "poly_eval", "poly_eval_with_derivative", "rational_eval",
          "contour_integral", "log_winding", "sup_abs")


def _load(force_python: bool = False):
    if not force_python:
        try:
            from . import _ckernels
            return _ckernels, "cython"
        except ImportError:
            pass
    return _kernels_py, "python"


_impl, BACKEND = _load(os.environ.get("LEGENDRIFY_PURE_PYTHON", "") not in ("", "0"))

circle_nodes = _impl.circle_nodes
poly_eval = _impl.poly_eval
poly_eval_with_derivative = _impl.poly_eval_with_derivative
rational_eval = _impl.rational_eval
contour_integral = _impl.contour_integral
log_winding = _impl.log_winding
sup_abs = _impl.sup_abs


def backends():
    """Both implementations keyed by name (only those that import)."""
    out = {"python": _kernels_py}
    try:
        from . import _ckernels
        out["cython"] = _ckernels
    except ImportError:
        pass
    return out


DEFAULT_NODES = 512


def quad_nodes() -> int:
    """Quadrature node count, overridable through LEGENDRIFY_QUAD_NODES."""
    raw = os.environ.get("LEGENDRIFY_QUAD_NODES")
    if not raw:
        return DEFAULT_NODES
    n = int(raw)
    if n < 16:
        raise ValueError("LEGENDRIFY_QUAD_NODES must be at least 16")
    return n
