"""Brute-force sweep: compare the analytic boundary with the sampled region on random (r, s).

Reports, per pair, the worst support violation (relative to scale) and the
hull gap (relative to the region diameter), then the worst of each.

    python3 scripts/oracle_sweep.py --pairs 40 --seed 1
"""

import argparse
import time

import numpy as np

from vregion.oracle import verify
from vregion.region import CanonicalParams, boundary_polyline, classify_regime


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=40)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--rings", type=int, default=60)
    ap.add_argument("--angles", type=int, default=100)
    ap.add_argument("--alphas", type=int, default=32)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    worst_v = worst_g = -np.inf
    t0 = time.perf_counter()
    for _ in range(args.pairs):
        r = rng.uniform(0.05, 0.95)
        p = CanonicalParams(r, rng.uniform(0.0, 0.99) * r)
        rep = verify(p, boundary_polyline(p), args.rings, args.angles, args.alphas)
        v, g = rep.max_support_violation / rep.scale, rep.hull_gap / rep.diameter
        worst_v, worst_g = max(worst_v, v), max(worst_g, g)
        flag = "ok " if rep.passed else "BAD"
        print(f"{flag} r={p.r:.4f} s={p.s:.4f} {classify_regime(p).kind.value:12s} "
              f"violation={v:+.2e} gap={g:.3%}")
    print(f"worst violation {worst_v:+.2e}*scale, worst gap {worst_g:.3%} "
          f"({args.pairs} pairs, {time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
