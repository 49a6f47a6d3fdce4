"""Write the boundary of V(r, s) for the three reference pairs as SVG, JSON and CSV.

    python3 scripts/reproduce_figures.py --out figures/
"""

import argparse
from pathlib import Path

from vregion import export
from vregion.region import CanonicalParams, boundary_polyline, classify_regime

PAIRS = {
    "full_circle": CanonicalParams(3 / 4, 1 / 4),
    "convex_jordan": CanonicalParams(1 / 4, 4 / 17),
    "mixed": CanonicalParams(2 / 3, 1 / 3),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--samples", type=int, default=2048)
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, p in PAIRS.items():
        poly = boundary_polyline(p, args.samples)
        reg = classify_regime(p)
        export.write_text(out / f"{name}.svg", export.polyline_to_svg(poly))
        export.write_text(out / f"{name}.json", export.polyline_to_json(poly))
        export.write_text(out / f"{name}.csv", export.polyline_to_csv(poly))
        extra = f" theta0={reg.theta0:.12f}" if reg.theta0 is not None else ""
        print(f"{name:14s} r={p.r:.6f} s={p.s:.6f} {reg.kind.value}{extra} -> {out / name}.{{svg,json,csv}}")


if __name__ == "__main__":
    main()
