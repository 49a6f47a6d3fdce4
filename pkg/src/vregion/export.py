"""JSON, CSV and SVG serialisation of boundary polylines and command records."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .region import ArcKind, CanonicalParams, RegimeKind, RegionPolyline, amplitude, classify_regime

SCHEMA_VERSION = "1"
CSV_HEADER = ["theta", "r_theta", "zeta_re", "zeta_im", "gamma_re", "gamma_im", "arc_kind"]


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def record(command: str, params: dict, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "params": params, "payload": payload}


def cplx(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def uncplx(d: dict) -> complex:
    return complex(d["re"], d["im"])


def dumps(doc: dict) -> str:
    # float repr is the shortest string that round-trips bit-exactly;
    # no indent so the C encoder handles large polylines
    return json.dumps(doc, allow_nan=False) + "\n"


def polyline_payload(poly: RegionPolyline) -> dict:
    reg = classify_regime(poly.params)
    return {
        "regime": reg.kind.value,
        "theta0": reg.theta0,
        "closed": True,
        "points": {
            "theta": poly.theta.tolist(),
            "r_theta": poly.r_theta.tolist(),
            "zeta_re": poly.zeta.real.tolist(),
            "zeta_im": poly.zeta.imag.tolist(),
            "v_re": poly.v.real.tolist(),
            "v_im": poly.v.imag.tolist(),
            "gamma_re": poly.gamma.real.tolist(),
            "gamma_im": poly.gamma.imag.tolist(),
            "arc_kind": [k.value for k in poly.arc_kinds],
        },
    }


def polyline_to_json(poly: RegionPolyline) -> str:
    params = {"r": poly.params.r, "s": poly.params.s}
    return dumps(record("boundary", params, polyline_payload(poly)))


def polyline_from_json(text: str) -> RegionPolyline:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    p = CanonicalParams(doc["params"]["r"], doc["params"]["s"])
    pts = doc["payload"]["points"]
    arr = {k: np.array(v, dtype=float) for k, v in pts.items() if k != "arc_kind"}
    return RegionPolyline(
        params=p,
        theta=arr["theta"],
        r_theta=arr["r_theta"],
        zeta=arr["zeta_re"] + 1j * arr["zeta_im"],
        v=arr["v_re"] + 1j * arr["v_im"],
        gamma=arr["gamma_re"] + 1j * arr["gamma_im"],
        circular=np.array([k == ArcKind.CIRCULAR.value for k in pts["arc_kind"]]),
    )


def polyline_to_csv(poly: RegionPolyline) -> str:
    row = ",".join(["%.17g"] * 6) + ",%s\n"
    kinds = np.where(poly.circular, ArcKind.CIRCULAR.value, ArcKind.CS.value).tolist()
    cols = (poly.theta, poly.r_theta, poly.zeta.real, poly.zeta.imag, poly.gamma.real, poly.gamma.imag)
    body = "".join(row % rec for rec in zip(*(np.asarray(c, dtype=float).tolist() for c in cols), kinds))
    return ",".join(CSV_HEADER) + "\n" + body


def polyline_from_csv(text: str, params: CanonicalParams) -> RegionPolyline:
    """Parse CSV output; ``v`` is rebuilt from ``gamma`` since CSV omits it."""
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {rows[0]!r}")
    body = rows[1:]
    col = lambda i: np.array([float(r[i]) for r in body])  # noqa: E731
    gam = col(4) + 1j * col(5)
    return RegionPolyline(
        params=params,
        theta=col(0),
        r_theta=col(1),
        zeta=col(2) + 1j * col(3),
        v=gam / amplitude(params),
        gamma=gam,
        circular=np.array([r[6] == ArcKind.CIRCULAR.value for r in body]),
    )


def _runs(poly: RegionPolyline) -> list[tuple[bool, list[int]]]:
    """Group the closed edge list into maximal runs of one style.

    An edge is circular when either endpoint is; the shared endpoints at
    +-theta0 therefore close the circular arc.
    """
    n = len(poly)
    circ = poly.circular
    kinds = [bool(circ[i] or circ[(i + 1) % n]) for i in range(n)]
    if all(k == kinds[0] for k in kinds):
        return [(kinds[0], [i % n for i in range(n + 1)])]
    start = next(i for i in range(n) if kinds[i] != kinds[i - 1])
    runs: list[tuple[bool, list[int]]] = []
    for j in range(n):
        i = (start + j) % n
        if not runs or runs[-1][0] != kinds[i]:
            runs.append((kinds[i], [i]))
        runs[-1][1].append((i + 1) % n)
    return runs


def polyline_to_svg(poly: RegionPolyline, size: int = 480) -> str:
    """Self-contained SVG; circular arc solid, c_s arc dashed in the mixed regime."""
    g = poly.gamma
    x, y = g.real, -g.imag  # SVG y axis points down
    xmin, xmax, ymin, ymax = x.min(), x.max(), y.min(), y.max()
    w, h = xmax - xmin, ymax - ymin
    m = 0.05 * max(w, h)
    vb = (xmin - m, ymin - m, w + 2 * m, h + 2 * m)
    stroke = max(w, h) / 300.0
    reg = classify_regime(poly.params)
    split = reg.kind is RegimeKind.MIXED
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
        f'height="{size * vb[3] / vb[2]:.1f}" viewBox="{" ".join(fmt(v) for v in vb)}">',
        f"  <title>boundary of V(r={fmt(poly.params.r)}, s={fmt(poly.params.s)}): {reg.kind.value}</title>",
        f'  <line class="axis" x1="{fmt(vb[0])}" y1="0" x2="{fmt(vb[0] + vb[2])}" y2="0" '
        f'stroke="#999" stroke-width="{fmt(stroke / 2)}"/>',
        f'  <line class="axis" x1="0" y1="{fmt(vb[1])}" x2="0" y2="{fmt(vb[1] + vb[3])}" '
        f'stroke="#999" stroke-width="{fmt(stroke / 2)}"/>',
    ]
    for circular, idx in _runs(poly):
        xs, ys = x[idx].tolist(), y[idx].tolist()
        d = "M " + " L ".join("%.17g,%.17g" % xy for xy in zip(xs, ys))
        if len(idx) == len(poly) + 1:
            d += " Z"
        cls = "circular-arc" if circular else "cs-arc"
        dash = "" if circular or not split else ' stroke-dasharray="{a} {b}"'.format(a=fmt(4 * stroke), b=fmt(2 * stroke))
        lines.append(
            f'  <path class="{cls}" d="{d}" fill="none" stroke="black" '
            f'stroke-width="{fmt(stroke)}"{dash}/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text)

