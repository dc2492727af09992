"""Pure-numpy versions of the numeric kernels (fallback for ``_ckernels``).

Coefficient arrays are complex128 in ascending degree.  Circle nodes are
``center + radius * exp(2j*pi*k/n)`` for k = 0..n-1.
"""

import numpy as np

TWO_PI = 2.0 * np.pi


def circle_nodes(center, radius, n):
    theta = TWO_PI * np.arange(n) / n
    return complex(center) + float(radius) * np.exp(1j * theta)


def poly_eval(coeffs, z):
    z = np.asarray(z, dtype=np.complex128)
    acc = np.zeros_like(z)
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc


def poly_eval_with_derivative(coeffs, z):
    z = np.asarray(z, dtype=np.complex128)
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    for c in coeffs[::-1]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def rational_eval(num, den, z):
    return poly_eval(num, z) / poly_eval(den, z)


def contour_integral(num, den, center, radius, n, orientation=1):
    """Trapezoid rule for the integral of num/den dz over a circle."""
    z = circle_nodes(center, radius, n)
    w = (z - complex(center)) * 1j * (TWO_PI / n)
    return complex(orientation * np.sum(rational_eval(num, den, z) * w))


def log_winding(coeffs, center, radius, n):
    """(winding number estimate of the polynomial, min |p| over the nodes)."""
    z = circle_nodes(center, radius, n)
    p, dp = poly_eval_with_derivative(coeffs, z)
    ap = np.abs(p)
    m = float(ap.min()) if len(ap) else 0.0
    if m == 0.0:
        return float("nan"), 0.0
    with np.errstate(over="ignore", invalid="ignore"):
        s = np.sum(dp / p * (z - complex(center))) / n
    return float(s.real), m


def sup_abs(num, den, center, radius, n):
    z = circle_nodes(center, radius, n)
    return float(np.max(np.abs(rational_eval(num, den, z))))
