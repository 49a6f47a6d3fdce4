"""Planar polygon checks on complex vertex arrays (closed, last edge implied)."""

from __future__ import annotations

import numpy as np


def _cross(a, b):
    return (np.conj(a) * b).imag


def min_turn_offset(pts: np.ndarray) -> float:
    """Smallest signed distance of each vertex from the line through the previous edge.

    Non-negative values mean counter-clockwise convex turning at every vertex.
    """
    e = np.roll(pts, -1) - pts
    en = np.roll(e, -1)
    ln = np.abs(e)
    ok = ln > 0
    return float(np.min(_cross(e[ok], en[ok]) / ln[ok]))


def winding_number(pts: np.ndarray, q: complex = 0j) -> int:
    d = np.angle((np.roll(pts, -1) - q) / (pts - q))
    return int(round(d.sum() / (2 * np.pi)))


def point_strictly_inside_convex(pts: np.ndarray, q: complex = 0j) -> bool:
    e = np.roll(pts, -1) - pts
    return bool(np.all(_cross(e, q - pts) > 0) or np.all(_cross(e, q - pts) < 0))


def _orient(a, b, c):
    return np.sign(_cross(b - a, c - a))


def is_simple_brute(pts: np.ndarray, block: int = 512) -> bool:
    """Brute-force check that no two non-adjacent edges properly cross."""
    a = pts
    b = np.roll(pts, -1)
    n = len(pts)
    idx = np.arange(n)
    for lo in range(0, n, block):
        i = idx[lo:lo + block][:, None]
        ai, bi = a[lo:lo + block][:, None], b[lo:lo + block][:, None]
        o1 = _orient(ai, bi, a[None, :])
        o2 = _orient(ai, bi, b[None, :])
        o3 = _orient(a[None, :], b[None, :], ai)
        o4 = _orient(a[None, :], b[None, :], bi)
        hit = (o1 * o2 < 0) & (o3 * o4 < 0)
        gap = np.abs(i - idx[None, :])
        adjacent = (gap <= 1) | (gap == n - 1)
        if np.any(hit & ~adjacent):
            return False
    return True


def _proper_cross(a1, b1, a2, b2):
    return (_orient(a1, b1, a2) * _orient(a1, b1, b2) < 0) & (_orient(a2, b2, a1) * _orient(a2, b2, b1) < 0)


def is_simple(pts: np.ndarray) -> bool:
    """No two non-adjacent edges properly cross.

    Edges are sorted by their left x end; only pairs whose x ranges overlap
    are tested, which for a convex polygon is O(n) pairs.
    """
    n = len(pts)
    a, b = pts, np.roll(pts, -1)
    lo = np.minimum(a.real, b.real)
    hi = np.maximum(a.real, b.real)
    order = np.argsort(lo, kind="stable")
    lo_s, hi_s = lo[order], hi[order]
    for k in range(1, n):
        i, j = order[:-k], order[k:]
        live = lo_s[k:] <= hi_s[:-k]
        if not np.any(live):
            break
        i, j = i[live], j[live]
        gap = np.abs(i - j)
        keep = (gap > 1) & (gap != n - 1)
        i, j = i[keep], j[keep]
        if np.any(_proper_cross(a[i], b[i], a[j], b[j])):
            return False
    return True
