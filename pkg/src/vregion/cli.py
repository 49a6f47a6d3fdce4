"""Command-line entry point: ``vregion {classify,boundary,extremal,verify,reduce}``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 I/O error.
Every command writes a JSON record to stdout unless ``--text`` is given.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

import numpy as np

from . import export
from .errors import DomainError, RegimeError
from .extremal import build_disk_family_function, build_extremal, eval_jet
from .oracle import TOL_FILL, TOL_IN, verify
from .reduction import GeneralParams, map_back_polyline, to_canonical
from .region import (
    CanonicalParams,
    RegimeKind,
    amplitude,
    boundary_polyline,
    circle_case_center_radius,
    classify_regime,
    gamma,
    scale,
)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3

_NUM = r"(?:\d+\.?\d*|\.\d+)"
_COMPLEX = re.compile(
    rf"^\s*(?P<re>[+-]?{_NUM})?\s*(?:(?P<sign>[+-])?\s*(?P<im>{_NUM})?\s*(?P<i>[ij]))?\s*$"
)


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` with decimal parts."""
    m = _COMPLEX.match(text)
    if not m or (m["re"] is None and m["i"] is None):
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")
    re_txt, im_txt, sign = m["re"], m["im"], m["sign"]
    if m["i"] and re_txt is not None and sign is None:
        if im_txt is not None:
            raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")
        # a lone signed imaginary part such as "-0.25i" lands in the real group
        re_txt, im_txt, sign = None, re_txt.lstrip("+-"), "-" if re_txt.startswith("-") else "+"
    re_part = float(re_txt) if re_txt is not None else 0.0
    im_part = 0.0
    if m["i"]:
        im_part = float(im_txt) if im_txt is not None else 1.0
        if sign == "-":
            im_part = -im_part
    return complex(re_part, im_part)


class _Fail(Exception):
    def __init__(self, code, msg):
        super().__init__(msg)
        self.code = code


def _params(args) -> CanonicalParams:
    try:
        return CanonicalParams(args.r, args.s)
    except DomainError as exc:
        raise _Fail(EXIT_INPUT, str(exc)) from exc


def _emit(args, doc: dict, text: str) -> None:
    print(text if getattr(args, "text", False) else export.dumps(doc))


def cmd_classify(args) -> int:
    p = _params(args)
    reg = classify_regime(p)
    payload = {"regime": reg.kind.value, "theta0": reg.theta0, "amplitude": amplitude(p)}
    text = f"regime: {reg.kind.value}\namplitude: {export.fmt(amplitude(p))}"
    if reg.kind is RegimeKind.MIXED:
        text += f"\ntheta0: {export.fmt(reg.theta0)}"
    if reg.kind is RegimeKind.FULL_CIRCLE:
        c, rad = circle_case_center_radius(p)
        payload["circle"] = {"center": export.cplx(c), "radius": rad}
        text += f"\ncircle center: {export.fmt(c)}\ncircle radius: {export.fmt(rad)}"
    _emit(args, export.record("classify", {"r": p.r, "s": p.s}, payload), text)
    return EXIT_OK


def cmd_boundary(args) -> int:
    p = _params(args)
    if args.samples < 16:
        raise _Fail(EXIT_INPUT, "--samples must be at least 16")
    poly = boundary_polyline(p, args.samples)
    if args.format == "json":
        out = export.polyline_to_json(poly)
    elif args.format == "csv":
        out = export.polyline_to_csv(poly)
    else:
        out = export.polyline_to_svg(poly)
    if args.out in (None, "-"):
        sys.stdout.write(out)
        return EXIT_OK
    try:
        export.write_text(args.out, out)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write {args.out}: {exc}") from exc
    return EXIT_OK


def _jet_dict(j) -> dict:
    return {"f": export.cplx(j.v), "d1": export.cplx(j.d1), "d2": export.cplx(j.d2)}


def cmd_extremal(args) -> int:
    p = _params(args)
    z = complex(p.r) if args.z_eval is None else args.z_eval
    if abs(z) >= 1.0:
        raise _Fail(EXIT_INPUT, "--z-eval must lie in the open unit disk")
    if args.lam is not None:
        try:
            spec = build_disk_family_function(p, args.lam, args.alpha)
        except DomainError as exc:
            raise _Fail(EXIT_INPUT, str(exc)) from exc
        payload = {"form": spec.form, "lambda": export.cplx(spec.lam), "alpha": export.cplx(spec.alpha)}
        target = None
    else:
        if args.theta is None:
            raise _Fail(EXIT_INPUT, "give --theta, or --lam and --alpha")
        spec = build_extremal(p, args.theta)
        bp = gamma(p, args.theta)
        payload = {
            "form": spec.form,
            "theta": args.theta,
            "zeta": export.cplx(spec.zeta),
            "rotation": export.cplx(complex(math.cos(args.theta), math.sin(args.theta))),
            "gamma": export.cplx(bp.gamma),
            "arc_kind": bp.arc_kind.value,
        }
        target = bp.gamma
    jet = eval_jet(spec, z)
    payload["z_eval"] = export.cplx(z)
    payload["jet"] = _jet_dict(jet)
    text = f"form: {spec.form}\njet at {z}: f={jet.v}, f'={jet.d1}, f''={jet.d2}"
    if target is not None:
        text += f"\nzeta: {spec.zeta}\ngamma: {target}"
    _emit(args, export.record("extremal", {"r": p.r, "s": p.s}, payload), text)
    return EXIT_OK


def attainment_sweep(p: CanonicalParams, poly, n: int = 64) -> tuple[float, float]:
    """Worst |f''(r) - gamma| over ``n`` evenly spaced polyline vertices, and its angle."""
    worst, at = 0.0, float(poly.theta[0])
    for k in np.linspace(0, len(poly) - 1, n).round().astype(int):
        t = float(poly.theta[k])
        err = abs(eval_jet(build_extremal(p, t), complex(p.r)).d2 - poly.gamma[k])
        if err > worst:
            worst, at = float(err), t
    return worst, at


def cmd_verify(args) -> int:
    p = _params(args)
    if args.rings < 2 or args.angles < 8 or args.alphas < 8:
        raise _Fail(EXIT_INPUT, "need --rings >= 2, --angles >= 8, --alphas >= 8")
    poly = boundary_polyline(p, args.samples)
    if args.perturb_gamma:
        poly.gamma = poly.gamma * (1.0 - args.perturb_gamma)
    rep = verify(p, poly, args.rings, args.angles, args.alphas, args.tol_in, args.tol_fill, seed=args.seed)
    sweep_err, sweep_theta = attainment_sweep(p, poly)
    sc = scale(p)
    sweep_ok = sweep_err <= args.tol_in * sc
    ok = rep.passed and sweep_ok
    payload = {
        "passed": ok,
        "max_support_violation": rep.max_support_violation,
        "support_tolerance": args.tol_in * sc,
        "hull_gap": rep.hull_gap,
        "fill_tolerance": args.tol_fill * rep.diameter,
        "diameter": rep.diameter,
        "scale": sc,
        "n_samples": rep.n_samples,
        "attainment_error": sweep_err,
        "attainment_theta": sweep_theta,
        "worst_sample": export.cplx(rep.worst_sample),
        "worst_theta": rep.worst_theta,
        "grid": {"rings": args.rings, "angles": args.angles, "alphas": args.alphas, "seed": args.seed},
    }
    _emit(
        args,
        export.record("verify", {"r": p.r, "s": p.s}, payload),
        f"passed: {ok}\nsupport violation: {rep.max_support_violation:.3e} (tol {args.tol_in * sc:.3e})\n"
        f"hull gap: {rep.hull_gap:.3e} (tol {args.tol_fill * rep.diameter:.3e})\n"
        f"attainment error: {sweep_err:.3e}",
    )
    if not ok:
        print(
            f"verification failed: worst sample {rep.worst_sample} at theta={rep.worst_theta} "
            f"(violation {rep.max_support_violation:.3e}); attainment error {sweep_err:.3e} at theta={sweep_theta}",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    return EXIT_OK


def cmd_reduce(args) -> int:
    try:
        red = to_canonical(GeneralParams(args.z0, args.w0))
    except DomainError as exc:
        raise _Fail(EXIT_INPUT, str(exc)) from exc
    p = red.canonical
    payload = {"r": p.r, "s": p.s, "phase": export.cplx(red.phase), "amplitude": amplitude(p)}
    if args.boundary:
        pts, normals = map_back_polyline(red, boundary_polyline(p, args.samples))
        payload["boundary"] = {"re": pts.real.tolist(), "im": pts.imag.tolist(), "normal_angle": normals.tolist()}
    params = {"z0": export.cplx(red.general.z0), "w0": export.cplx(red.general.w0)}
    _emit(
        args,
        export.record("reduce", params, payload),
        f"r: {export.fmt(p.r)}\ns: {export.fmt(p.s)}\nphase: {red.phase.real:+.17g}{red.phase.imag:+.17g}i",
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vregion", description="Variability region of f''(z0) for bounded analytic maps.")
    sub = ap.add_subparsers(dest="command", required=True)

    def canon(sp):
        sp.add_argument("--r", type=float, required=True)
        sp.add_argument("--s", type=float, required=True)
        sp.add_argument("--text", action="store_true", help="human-readable output instead of JSON")

    sp = sub.add_parser("classify", help="shape of the boundary for (r, s)")
    canon(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("boundary", help="export the boundary polyline")
    canon(sp)
    sp.add_argument("--samples", type=int, default=2048)
    sp.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    sp.add_argument("--out", default=None, help="output file (default stdout)")
    sp.set_defaults(func=cmd_boundary)

    sp = sub.add_parser("extremal", help="extremal function attaining gamma(theta)")
    canon(sp)
    sp.add_argument("--theta", type=float)
    sp.add_argument("--lam", type=parse_complex, help="disk-family parameter lambda (with --alpha)")
    sp.add_argument("--alpha", type=parse_complex, default=1 + 0j)
    sp.add_argument("--z-eval", type=parse_complex, default=None)
    sp.set_defaults(func=cmd_extremal)

    sp = sub.add_parser("verify", help="brute-force check of the boundary")
    canon(sp)
    sp.add_argument("--rings", type=int, default=100)
    sp.add_argument("--angles", type=int, default=100)
    sp.add_argument("--alphas", type=int, default=64)
    sp.add_argument("--samples", type=int, default=2048)
    sp.add_argument("--tol-in", type=float, default=TOL_IN)
    sp.add_argument("--tol-fill", type=float, default=TOL_FILL)
    sp.add_argument("--seed", type=int, default=None, help="random sampling with this seed")
    sp.add_argument("--perturb-gamma", type=float, default=0.0, help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reduce", help="reduce general (z0, w0) to canonical (r, s)")
    sp.add_argument("--z0", type=parse_complex, required=True)
    sp.add_argument("--w0", type=parse_complex, required=True)
    sp.add_argument("--boundary", action="store_true")
    sp.add_argument("--samples", type=int, default=2048)
    sp.add_argument("--text", action="store_true")
    sp.set_defaults(func=cmd_reduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"vregion: {exc}", file=sys.stderr)
        return exc.code
    except (DomainError, RegimeError) as exc:
        print(f"vregion: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
