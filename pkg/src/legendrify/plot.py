"""Deterministic SVG charts (800x600) for experiment reports.

Coordinates are rendered with fixed precision and elements are emitted in a
fixed order, so identical input gives byte-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 800, 600
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


@dataclass
class Series:
    label: str
    xs: Sequence[float]
    ys: Sequence[float]
    dashed: bool = False


@dataclass
class Panel:
    title: str
    xlabel: str
    ylabel: str
    series: list = field(default_factory=list)
    xlog: bool = True
    yrange: tuple | None = None
    hlines: list = field(default_factory=list)  # (y, label)


def _f(x: float) -> str:
    return f"{x:.2f}"


def _nice_range(lo: float, hi: float) -> tuple[float, float]:
    if lo == hi:
        return lo - 1, hi + 1
    pad = 0.08 * (hi - lo)
    return lo - pad, hi + pad


def _render_panel(p: Panel, top: float, height: float, out: list) -> None:
    left, right = 90.0, WIDTH - 170.0
    y0, y1 = top + 40.0, top + height - 50.0
    xs = [x for s in p.series for x in s.xs]
    ys = [y for s in p.series for y in s.ys if math.isfinite(y)] + [y for y, _ in p.hlines]
    if p.xlog:
        lx = [math.log10(x) for x in xs if x > 0]
        if lx:
            xlo, xhi = math.floor(min(lx)), math.ceil(max(lx))
            if xlo == xhi:
                xlo, xhi = xlo - 1, xhi + 1
        else:
            xlo, xhi = -3.0, 0.0
    else:
        xlo, xhi = _nice_range(min(xs), max(xs)) if xs else (0.0, 1.0)
    ylo, yhi = p.yrange if p.yrange else (_nice_range(min(ys), max(ys)) if ys else (0.0, 1.0))

    def sx(x: float) -> float:
        v = math.log10(x) if p.xlog else x
        return left + (v - xlo) / (xhi - xlo) * (right - left)

    def sy(y: float) -> float:
        return y1 - (y - ylo) / (yhi - ylo) * (y1 - y0)

    out.append(f'<text x="{_f((left + right) / 2)}" y="{_f(top + 22)}" text-anchor="middle" '
               f'font-size="16">{escape(p.title)}</text>')
    out.append(f'<rect x="{_f(left)}" y="{_f(y0)}" width="{_f(right - left)}" height="{_f(y1 - y0)}" '
               f'fill="none" stroke="#000"/>')
    if p.xlog:
        for e in range(int(xlo), int(xhi) + 1):
            x = left + (e - xlo) / (xhi - xlo) * (right - left)
            out.append(f'<line x1="{_f(x)}" y1="{_f(y1)}" x2="{_f(x)}" y2="{_f(y1 + 5)}" stroke="#000"/>')
            out.append(f'<text x="{_f(x)}" y="{_f(y1 + 20)}" text-anchor="middle" font-size="12">1e{e}</text>')
    else:
        for k in range(6):
            v = xlo + k * (xhi - xlo) / 5
            x = sx(v)
            out.append(f'<line x1="{_f(x)}" y1="{_f(y1)}" x2="{_f(x)}" y2="{_f(y1 + 5)}" stroke="#000"/>')
            out.append(f'<text x="{_f(x)}" y="{_f(y1 + 20)}" text-anchor="middle" font-size="12">{v:.3g}</text>')
    for k in range(6):
        v = ylo + k * (yhi - ylo) / 5
        y = sy(v)
        out.append(f'<line x1="{_f(left - 5)}" y1="{_f(y)}" x2="{_f(left)}" y2="{_f(y)}" stroke="#000"/>')
        out.append(f'<text x="{_f(left - 8)}" y="{_f(y + 4)}" text-anchor="end" font-size="12">{v:.3g}</text>')
    out.append(f'<text x="{_f((left + right) / 2)}" y="{_f(y1 + 40)}" text-anchor="middle" '
               f'font-size="13">{escape(p.xlabel)}</text>')
    out.append(f'<text x="{_f(left - 60)}" y="{_f((y0 + y1) / 2)}" text-anchor="middle" font-size="13" '
               f'transform="rotate(-90 {_f(left - 60)} {_f((y0 + y1) / 2)})">{escape(p.ylabel)}</text>')
    for y, label in p.hlines:
        out.append(f'<line x1="{_f(left)}" y1="{_f(sy(y))}" x2="{_f(right)}" y2="{_f(sy(y))}" '
                   f'stroke="#888" stroke-dasharray="2,4"/>')
        out.append(f'<text x="{_f(right + 8)}" y="{_f(sy(y) + 4)}" font-size="11" fill="#555">{escape(label)}</text>')
    for k, s in enumerate(p.series):
        color = COLORS[k % len(COLORS)]
        pts = [(sx(x), sy(y)) for x, y in sorted(zip(s.xs, s.ys)) if math.isfinite(y) and (x > 0 or not p.xlog)]
        if len(pts) > 1:
            path = " ".join(f"{_f(a)},{_f(b)}" for a, b in pts)
            dash = ' stroke-dasharray="6,4"' if s.dashed else ""
            out.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="2"{dash}/>')
        for a, b in pts:
            out.append(f'<circle cx="{_f(a)}" cy="{_f(b)}" r="4" fill="{color}"/>')
        ly = y0 + 14 + 18 * k
        out.append(f'<rect x="{_f(right + 10)}" y="{_f(ly - 9)}" width="10" height="10" fill="{color}"/>')
        out.append(f'<text x="{_f(right + 26)}" y="{_f(ly)}" font-size="12">{escape(s.label)}</text>')


def render_svg(panels: Sequence[Panel]) -> str:
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
           f'viewBox="0 0 {WIDTH} {HEIGHT}">',
           f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#fff"/>']
    h = HEIGHT / max(1, len(panels))
    for k, p in enumerate(panels):
        _render_panel(p, k * h, h, out)
    out.append("</svg>")
    return "\n".join(out) + "\n"


def branch_panels(report) -> list[Panel]:
    """Panels for a branch experiment: sup FS distance (family A), zero counts (family B)."""
    a = report.family_a
    b = report.family_b
    eps_a = [float(r["epsilon"]) for r in a]
    eps_b = [float(r["epsilon"]) for r in b]
    pa = Panel(f"family A: sup Fubini-Study distance to the limit lift (k={report.k}, m={report.m})",
               "epsilon", "distance",
               [Series("closed disc", eps_a, [r["sup_fs_disc"] for r in a]),
                Series("boundary circle", eps_a, [r["sup_fs_boundary"] for r in a], dashed=True)],
               yrange=(0.0, math.pi / 2 + 0.1), hlines=[(math.pi / 2, "pi/2")])
    pb = Panel("family B: zeros of (g0)' in the disc", "epsilon", "zero count",
               [Series("zero count", eps_b, [float(r["zero_count_g0_prime"]) for r in b])],
               yrange=(-0.5, report.k - 0.5 + 1.0), hlines=[(float(report.k - 1), "k-1")])
    return [pa, pb]


def param_panels(result) -> list[Panel]:
    n = len(result.chi)
    xs = [k / (n - 1) if n > 1 else 0.0 for k in range(n)]
    return [Panel("cutoff chi over the parameter grid", "p", "chi",
                  [Series("chi", xs, [float(c) for c in result.chi])], xlog=False, yrange=(-0.1, 1.1))]


def emit_plot(report, path) -> str:
    """Write the SVG for a branch-experiment report or a parametric result; returns the text."""
    from .cliutil import atomic_write
    panels = branch_panels(report) if hasattr(report, "family_a") else param_panels(report)
    text = render_svg(panels)
    atomic_write(path, text)
    return text
