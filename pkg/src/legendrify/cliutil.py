"""Small I/O helpers shared by the command line and the plotting code."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import GaussianRational


def atomic_write(path, text: str) -> None:
    """Write text to path via a temporary file in the same directory and a rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def decimal12(x) -> str:
    """Decimal rendering to 12 significant digits."""
    if isinstance(x, GaussianRational):
        re, im = float(x.re), float(x.im)
        if im == 0:
            return f"{re:.12g}"
        sign = "+" if im >= 0 else "-"
        return f"{re:.12g}{sign}{abs(im):.12g}i"
    if isinstance(x, complex):
        sign = "+" if x.imag >= 0 else "-"
        return f"{x.real:.12g}{sign}{abs(x.imag):.12g}i"
    return f"{float(x):.12g}"


def number(x) -> dict:
    """Exact value (when there is one) next to its 12-digit decimal."""
    if isinstance(x, GaussianRational):
        return {"exact": str(x), "decimal": decimal12(x)}
    if isinstance(x, Fraction):
        return {"exact": f"{x.numerator}/{x.denominator}", "decimal": decimal12(x)}
    return {"decimal": decimal12(x)}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class Certificate:
    kind: str       # legendrian | horizontal | nondegenerate | period_zero | approximation_bound
    verdict: bool
    witness: str

    KINDS = ("legendrian", "horizontal", "nondegenerate", "period_zero", "approximation_bound")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if not self.verdict and not self.witness:
            raise ValueError("a false verdict needs a witness")

    def to_json(self) -> dict:
        return {"kind": self.kind, "verdict": self.verdict, "witness": self.witness}

    def __str__(self) -> str:
        status = "PASS" if self.verdict else "FAIL"
        return f"[{status}] {self.kind}: {self.witness}"
