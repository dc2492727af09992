"""Command-line interface.

Exit codes: 0 success, 1 a certificate came out false (its witness is printed),
2 input error (malformed JSON, violated precondition, bad flags).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import GaussianRational, RationalFn
from .algebra.gaussian import parse_rational
from .cliutil import Certificate, atomic_write, decimal12, dumps, number
from .contact import LegendrianCurve, contact_residual
from .deform import (
    DeformationConfig,
    VerticalCurve,
    branch_discontinuity_experiment,
    nonconstant_perturb,
    parametric_verticalize,
    sup_norm,
    verticalize_to_horizontal,
)
from .domain import CircularDomain, homology_basis
from .errors import DegenerateVerticalMember, LegendrifyError
from .lift import bryant_transform, degenerate_check, legendrian_lift
from .periods import TWO_PI_I, periods_exact, quadrature_check
from .plot import emit_plot

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


def _load_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _gaussian(text: str) -> GaussianRational:
    f = RationalFn.parse(text)
    if not f.is_constant():
        raise InputError(f"expected a constant, got {text!r}")
    return f.constant_value()


def _fraction(text: str) -> Fraction:
    try:
        return parse_rational(text.strip())
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def jsonable(x):
    """Recursively convert report values; numbers become exact + 12-digit decimal."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, (Fraction, GaussianRational, float, complex)):
        return number(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


def _emit(certs: list[Certificate], out) -> int:
    for c in certs:
        print(c, file=out)
    return EXIT_OK if all(c.verdict for c in certs) else EXIT_FAILED


def _domain_arg(obj) -> CircularDomain | None:
    return CircularDomain.from_json(obj) if obj else None


# ---------------------------------------------------------------------------
# subcommands

def cmd_lift(args, out) -> int:
    obj = _load_json(args.input)
    base = obj["base"] if "base" in obj else [obj["g0"], obj["g1"]]
    if len(base) != 2:
        raise InputError("lift expects a curve (g0, g1) in a surface")
    g0, g1 = (RationalFn.from_json(g) for g in base)
    curve = legendrian_lift(g0, g1, _domain_arg(obj.get("domain")))
    residual = contact_residual(curve)
    cert = Certificate("legendrian", curve.certified, f"residual {residual}")
    atomic_write(args.output, dumps({**curve.to_json(), "certificates": [cert.to_json()]}))
    return _emit([cert], out)


def cmd_verify(args, out) -> int:
    curve = LegendrianCurve.from_json(_load_json(args.curve))
    residual = contact_residual(curve)
    certs = [Certificate("legendrian", residual.is_zero(), f"residual {residual}")]
    if args.nondegenerate:
        lam = degenerate_check(curve.vertical)
        certs.append(Certificate("nondegenerate", lam is None,
                                 "no hyperplane contains the vertical component" if lam is None
                                 else "hyperplane " + "(" + ", ".join(str(x) for x in lam) + ")"))
    return _emit(certs, out)


def cmd_bryant(args, out) -> int:
    res = bryant_transform(RationalFn.parse(args.f), RationalFn.parse(args.g))
    comps = [str(c) for c in res.curve.components]
    print("[" + " : ".join(comps) + "]", file=out)
    witness = "pullback of the contact form is 0" if res.pullback_zero else "pullback is nonzero"
    if not res.transform_matches:
        witness += "; quadric map disagrees with the transform"
    cert = Certificate("legendrian", res.verified, witness)
    if args.output:
        atomic_write(args.output, dumps({"curve": res.curve.to_json(), "display": comps,
                                         "certificates": [cert.to_json()]}))
    return _emit([cert], out)


def cmd_periods(args, out) -> int:
    obj = _load_json(args.form)
    omega = RationalFn.from_json(obj["omega"] if isinstance(obj, dict) and "omega" in obj else obj)
    d = CircularDomain.from_json(_load_json(args.domain))
    pv = periods_exact(omega, d)
    cycles = homology_basis(d)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["hole", "center", "radius", "reduced_period", "reduced_period_decimal", "exact"]
    if args.oracle:
        header += ["quadrature_reduced", "abs_error", "doubling_change"]
    w.writerow(header)
    for k, (c, v) in enumerate(zip(cycles, pv.reduced)):
        exact = isinstance(v, GaussianRational)
        row = [k, str(c.center), f"{c.radius.numerator}/{c.radius.denominator}",
               str(v) if exact else "", decimal12(v), "yes" if exact else "no"]
        if args.oracle:
            chk = quadrature_check(omega, c, args.nodes)
            q = chk.value / TWO_PI_I
            row += [decimal12(q), f"{abs(q - complex(v)):.3e}", f"{chk.change:.3e}"]
        w.writerow(row)
    text = buf.getvalue()
    if args.output:
        atomic_write(args.output, text)
    out.write(text)
    return EXIT_OK


def _config(args, d: CircularDomain, required: bool) -> DeformationConfig:
    eps = _fraction(args.epsilon) if args.epsilon else None
    if args.config:
        return DeformationConfig.from_json(_load_json(args.config), epsilon=eps)
    if required:
        raise InputError("--config is required")
    # default marked points: two points just inside the outer circle
    c, r = d.outer.center, d.outer.radius
    pts = [c + GaussianRational(r * Fraction(9, 10)), c - GaussianRational(r * Fraction(9, 10))]
    if not all(d.contains(p) for p in pts):
        raise InputError("cannot choose default marked points; pass --config")
    return DeformationConfig(eps if eps is not None else Fraction(1, 100), RationalFn.parse("z"), tuple(pts))


def _degenerate_cert(exc) -> Certificate:
    lam = getattr(exc, "covector", None)
    witness = f"hyperplane {tuple(str(x) for x in lam)}" if lam is not None else str(exc)
    return Certificate("nondegenerate", False, witness)


def cmd_deform(args, out) -> int:
    v = VerticalCurve.from_json(_load_json(args.vertical))
    cfg = _config(args, v.domain, required=True)
    lam = degenerate_check(v.lift_h)
    if lam is not None:
        return _emit([Certificate("nondegenerate", False,
                                  "hyperplane (" + ", ".join(str(x) for x in lam) + ")")], out)
    f1, hom = verticalize_to_horizontal(v, cfg)
    moved = [g * RationalFn.const(hom.scale) for g in hom.gtilde]
    sup = sup_norm(moved, v.domain)
    certs = [
        Certificate("legendrian", f1.certified, f"residual {contact_residual(f1)}"),
        Certificate("horizontal", f1.is_horizontal(),
                    "base " + ", ".join(str(g) for g in f1.base)),
        Certificate("approximation_bound", sup <= float(cfg.epsilon),
                    f"boundary sup {decimal12(sup)} vs epsilon {decimal12(cfg.epsilon)}"),
    ]
    payload = {**hom.to_json(), "sup_boundary": number(sup),
               "f1": f1.to_json(), "certificates": [c.to_json() for c in certs]}
    atomic_write(args.out, dumps(payload))
    return _emit(certs, out)


def cmd_param_deform(args, out) -> int:
    obj = _load_json(args.family)
    d = CircularDomain.from_json(obj["domain"])
    members = [LegendrianCurve.from_json({"domain": obj["domain"], **m}) for m in obj["members"]]
    if args.grid is not None and args.grid != len(members):
        raise InputError(f"--grid {args.grid} but the family has {len(members)} members")
    q = _int_list(args.q) if args.q else []
    if any(not 0 <= p < len(members) for p in q):
        raise InputError("Q index outside the grid")
    cfg = _config(args, d, required=False)
    try:
        res = parametric_verticalize(members, q, cfg, d)
    except DegenerateVerticalMember as exc:
        return _emit([_degenerate_cert(exc)], out)
    finals = res.final()
    bad_leg = [p for p, f in enumerate(finals) if not f.certified]
    bad_hor = [p for p, f in enumerate(finals) if not f.is_horizontal()]
    q_moved = [p for p in q if finals[p].base != members[p].base]
    certs = [
        Certificate("legendrian", not bad_leg, f"members failing: {bad_leg}"),
        Certificate("horizontal", not bad_hor, f"members still vertical: {bad_hor}"),
        Certificate("approximation_bound", not q_moved, f"Q members moved: {q_moved}"),
    ]
    if args.out:
        atomic_write(args.out, dumps({
            "chi": [jsonable(c) for c in res.chi],
            "vertical_indices": list(res.vertical_indices),
            "q_indices": list(res.q_indices),
            "homotopies": [g.homotopy.to_json() for g in res.homotopies],
            "certificates": [c.to_json() for c in certs],
        }))
    if args.plot:
        emit_plot(res, args.plot)
    print("chi: " + " ".join(str(c) for c in res.chi), file=out)
    return _emit(certs, out)


def cmd_branch(args, out) -> int:
    eps = [_fraction(e) for e in args.eps.split(",") if e.strip()]
    rep = branch_discontinuity_experiment(args.k, args.m, eps, _fraction(args.radius))
    for a, b in zip(rep.family_a, rep.family_b):
        print(f"eps={a['epsilon']}: sup_fs_disc={decimal12(a['sup_fs_disc'])} "
              f"sup_fs_boundary={decimal12(a['sup_fs_boundary'])} immersive={a['immersive']} "
              f"zeros_B={b['zero_count_g0_prime']} lift_B_constant={b['lift_constant_in_eps']}", file=out)
    if args.output:
        atomic_write(args.output, dumps(jsonable(rep.to_json())))
    if args.plot:
        emit_plot(rep, args.plot)
    return EXIT_OK


def cmd_perturb(args, out) -> int:
    obj = _load_json(args.family)
    fam = [[RationalFn.from_json(c) for c in member] for member in obj["members"]]
    pts = [_gaussian(x) for x in args.test_points.split(",") if x.strip()]
    q = _int_list(args.q) if args.q else []
    res = nonconstant_perturb(fam, q, pts, _fraction(args.delta), _domain_arg(obj.get("domain")))
    q_moved = [p for p in q if res.perturbed[p] != res.original[p]]
    delta = _fraction(args.delta)
    certs = [
        Certificate("approximation_bound", res.sup_change <= float(delta) and not q_moved,
                    f"sup change {decimal12(res.sup_change)} vs delta {decimal12(delta)}; Q moved: {q_moved}"),
    ]
    if args.out:
        atomic_write(args.out, dumps({
            "eta": number(res.eta),
            "chi": [jsonable(c) for c in res.chi],
            "perturbed": [[c.to_json() for c in f] for f in res.perturbed],
            "sup_change": number(res.sup_change),
            "certificates": [c.to_json() for c in certs],
        }))
    print(f"eta = {res.eta} ({decimal12(res.eta)})", file=out)
    return _emit(certs, out)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="legendrify", description="Exact holomorphic Legendrian curves.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lift", help="Legendrian lift of a curve in a surface")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", help="certify that a stored curve is Legendrian")
    p.add_argument("curve")
    p.add_argument("--nondegenerate", action="store_true", help="also test the vertical component")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bryant", help="Bryant transform of (f, g)")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_bryant)

    p = sub.add_parser("periods", help="exact reduced periods over the holes, as CSV")
    p.add_argument("--form", required=True)
    p.add_argument("--domain", required=True)
    p.add_argument("--oracle", action="store_true", help="add a quadrature comparison")
    p.add_argument("--nodes", type=int, default=None)
    p.add_argument("--output")
    p.set_defaults(func=cmd_periods)

    p = sub.add_parser("deform", help="deform a vertical Legendrian curve to a horizontal one")
    p.add_argument("--vertical", required=True)
    p.add_argument("--epsilon")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("param-deform", help="deform a grid family, fixing the members in Q")
    p.add_argument("--family", required=True)
    p.add_argument("--grid", type=int)
    p.add_argument("--q", default="")
    p.add_argument("--epsilon")
    p.add_argument("--config")
    p.add_argument("--out")
    p.add_argument("--plot")
    p.set_defaults(func=cmd_param_deform)

    p = sub.add_parser("branch-experiment", help="liftings near a branch point")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--eps", required=True, help="comma-separated rationals")
    p.add_argument("--radius", default="1/2")
    p.add_argument("--output")
    p.add_argument("--plot")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("perturb", help="make every member of a family nonconstant on test points")
    p.add_argument("--family", required=True)
    p.add_argument("--q", default="")
    p.add_argument("--test-points", required=True)
    p.add_argument("--delta", default="1/1000")
    p.add_argument("--out")
    p.set_defaults(func=cmd_perturb)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=err)
    except LegendrifyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        name = type(exc).__name__
        print(f"error: {name}: {exc}", file=err)
    return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
