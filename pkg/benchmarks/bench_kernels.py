"""Compare the compiled and numpy kernel backends.

Usage: python benchmarks/bench_kernels.py [--repeat 20] [--nodes 512 4096 32768]

Also times an end-to-end exact workload (random lifts plus periods) so the
share of runtime spent in the numeric kernels is visible.
"""

from __future__ import annotations

import argparse
import random
import timeit
from fractions import Fraction

import numpy as np

from legendrify import CircularDomain, RationalFn, legendrian_lift, periods_exact
from legendrify.algebra import GaussianRational, Poly
from legendrify.kernels import backends


def _random_poly(rng: np.random.Generator, deg: int) -> np.ndarray:
    return (rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)).astype(np.complex128)


def bench_kernels(repeat: int, sizes: list[int]) -> list[tuple]:
    rng = np.random.default_rng(0)
    num = _random_poly(rng, 12)
    den = np.array([1.0 + 0j] + [0j] * 11 + [0.01 + 0j])  # roots outside the unit circle
    rows = []
    impls = backends()
    for n in sizes:
        for name in ("contour_integral", "log_winding", "sup_abs"):
            times = {}
            for label, mod in impls.items():
                fn = getattr(mod, name)
                args = (num, den, 0j, 1.0, n) if name != "log_winding" else (num, 0j, 1.0, n)
                times[label] = min(timeit.repeat(lambda: fn(*args), number=5, repeat=repeat)) / 5
            rows.append((name, n, times))
    return rows


def bench_exact(count: int = 100) -> float:
    rnd = random.Random(1)

    def rf(deg):
        coeffs = [GaussianRational(Fraction(rnd.randint(-9, 9)), Fraction(rnd.randint(-9, 9))) for _ in range(deg + 1)]
        return RationalFn(Poly(coeffs))

    d = CircularDomain.annulus(Fraction(1, 2), 2)
    z = RationalFn(Poly([0, 1]))

    def work():
        for _ in range(count):
            legendrian_lift(rf(6) + z, rf(6), None)
            periods_exact(rf(4) / (z ** 2), d)

    return min(timeit.repeat(work, number=1, repeat=3))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--nodes", type=int, nargs="+", default=[512, 4096, 32768])
    args = ap.parse_args()
    rows = bench_kernels(args.repeat, args.nodes)
    labels = sorted({k for _, _, t in rows for k in t})
    print(f"{'kernel':<18}{'nodes':>8}" + "".join(f"{lab + ' (us)':>16}" for lab in labels) + f"{'speedup':>10}")
    for name, n, t in rows:
        speed = t["python"] / t["cython"] if "cython" in t else float("nan")
        print(f"{name:<18}{n:>8}" + "".join(f"{t[lab] * 1e6:>16.1f}" for lab in labels) + f"{speed:>10.2f}")
    print(f"\nexact workload (100 lifts + 100 period vectors): {bench_exact():.3f} s")


if __name__ == "__main__":
    main()
