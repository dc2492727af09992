from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from legendrify import kernels

BACKENDS = kernels.backends()
coeff_lists = st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False),
                       min_size=1, max_size=8)


def test_cython_backend_built():
    assert "cython" in BACKENDS, "compiled kernels are missing; run pip install -e . --no-build-isolation"
    assert kernels.BACKEND == "cython"


@pytest.mark.skipif(len(BACKENDS) < 2, reason="needs both backends")
@given(coeff_lists, st.integers(16, 600))
def test_backends_agree(coeffs, n):
    c = np.asarray(coeffs, dtype=np.complex128)
    den = np.array([3.0 + 0j, 0.5 + 0j])  # root at -6, outside the unit circle
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    z = py.circle_nodes(0.2 + 0.1j, 0.9, n)
    assert np.allclose(cy.circle_nodes(0.2 + 0.1j, 0.9, n), z, rtol=0, atol=1e-14)
    assert np.allclose(cy.poly_eval(c, z), py.poly_eval(c, z), rtol=1e-12, atol=1e-12)
    p1, d1 = cy.poly_eval_with_derivative(c, z)
    p2, d2 = py.poly_eval_with_derivative(c, z)
    assert np.allclose(p1, p2, rtol=1e-12, atol=1e-12) and np.allclose(d1, d2, rtol=1e-12, atol=1e-11)
    a = cy.contour_integral(c, den, 0j, 1.0, n)
    b = py.contour_integral(c, den, 0j, 1.0, n)
    assert abs(a - b) <= 1e-10 * max(1.0, abs(b))
    assert cy.sup_abs(c, den, 0j, 1.0, n) == pytest.approx(py.sup_abs(c, den, 0j, 1.0, n), rel=1e-12, abs=1e-12)
    w1, m1 = cy.log_winding(c, 0j, 1.0, n)
    w2, m2 = py.log_winding(c, 0j, 1.0, n)
    if m2 > 1e-6:
        assert w1 == pytest.approx(w2, abs=1e-8) and m1 == pytest.approx(m2, rel=1e-12)


def test_pure_python_switch():
    env = dict(os.environ, LEGENDRIFY_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from legendrify import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_quad_nodes_override(monkeypatch):
    monkeypatch.setenv("LEGENDRIFY_QUAD_NODES", "1024")
    assert kernels.quad_nodes() == 1024
    monkeypatch.setenv("LEGENDRIFY_QUAD_NODES", "4")
    with pytest.raises(ValueError):
        kernels.quad_nodes()
    monkeypatch.delenv("LEGENDRIFY_QUAD_NODES")
    assert kernels.quad_nodes() == 512
