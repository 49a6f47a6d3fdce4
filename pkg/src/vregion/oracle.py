"""Brute-force check of the boundary against the union-of-disks description.

Points ``A (c(lambda) + rho(lambda) alpha)`` are sampled over a grid of
``lambda`` in the closed unit disk and ``alpha`` on the unit circle. The
analytic boundary must support-dominate every sample (soundness) and the
convex hull of the samples must come close to every boundary vertex
(tightness).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull

from .errors import DomainError
from .region import CanonicalParams, RegionPolyline, amplitude, scale

TOL_IN = 1e-9
TOL_FILL = 0.02
_CHUNK = 4096


def worker_count() -> int:
    env = os.environ.get("VREGION_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


@dataclass
class SampleCloud:
    params: CanonicalParams
    points: np.ndarray
    lambdas: np.ndarray
    alphas: np.ndarray
    lambda_grid: dict = field(default_factory=dict)

    @property
    def alpha_count(self) -> int:
        return len(self.alphas)

    def __len__(self):
        return len(self.points)


@dataclass
class VerificationReport:
    max_support_violation: float
    hull_gap: float
    n_samples: int
    tol_in: float
    tol_fill: float
    scale: float
    diameter: float
    worst_sample: complex | None = None
    worst_theta: float | None = None

    @property
    def passed(self) -> bool:
        return (
            self.max_support_violation <= self.tol_in * self.scale
            and self.hull_gap <= self.tol_fill * self.diameter
        )


def sample_disks(p: CanonicalParams, lambdas, alphas) -> np.ndarray:
    """All ``A (c(lambda) + rho(lambda) alpha)``; row-major over (lambda, alpha)."""
    lam = np.asarray(lambdas, dtype=complex).ravel()[:, None]
    al = np.asarray(alphas, dtype=complex).ravel()[None, :]
    c = lam * (1.0 - p.s * lam)
    rho = p.r * (1.0 - np.abs(lam) ** 2)
    return (amplitude(p) * (c + rho * al)).ravel()


def lambda_grid(rings: int, angles: int) -> np.ndarray:
    """Rings of radius k/rings, k = 1..rings, each with ``angles`` uniform points."""
    rad = np.arange(1, rings + 1) / rings
    ang = np.exp(2j * np.pi * np.arange(angles) / angles)
    return (rad[:, None] * ang[None, :]).ravel()


def sample_region(
    p: CanonicalParams,
    rings: int = 100,
    angles: int = 100,
    alphas: int = 64,
    seed: int | None = None,
) -> SampleCloud:
    """Grid sampling by default; ``seed`` switches to seeded random ``lambda`` and ``alpha``.

    The random mode draws ``rings * angles`` values of ``lambda`` uniformly in
    the disk, adds the ``angles`` points of the unit ring, and draws
    ``alphas`` uniform phases.
    """
    if rings < 2 or angles < 8 or alphas < 8:
        raise DomainError("sample_region needs rings >= 2, angles >= 8, alphas >= 8")
    if seed is None:
        lam = lambda_grid(rings, angles)
        al = np.exp(2j * np.pi * np.arange(alphas) / alphas)
        desc = {"mode": "grid", "rings": rings, "angles": angles}
    else:
        rng = np.random.default_rng(seed)
        n = rings * angles
        lam = np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
        lam = np.concatenate([lam, np.exp(2j * np.pi * np.arange(angles) / angles)])
        al = np.exp(2j * np.pi * rng.random(alphas))
        desc = {"mode": "random", "seed": seed, "interior": n, "boundary_ring": angles}
    return SampleCloud(p, sample_disks(p, lam, al), lam, al, desc)


def _hull_vertices(points: np.ndarray) -> np.ndarray:
    if len(points) < 64:
        return points
    xy = np.column_stack([points.real, points.imag])
    try:
        hull = ConvexHull(xy)
    except Exception:
        return points
    return points[hull.vertices]


def support_violations(points, gam, theta) -> tuple[float, int, int]:
    """Max of ``Re((p - gamma) e^{-i theta})`` over all pairs, with the argmax indices."""
    points = np.asarray(points, dtype=complex).ravel()
    gam = np.asarray(gam, dtype=complex).ravel()
    e = np.exp(-1j * np.asarray(theta, dtype=float).ravel())
    offs = (gam * e).real
    cx, sy = e.real, e.imag  # Re(p e) = x cos - y sin with e = cos - i sin
    chunks = [slice(i, i + _CHUNK) for i in range(0, len(points), _CHUNK)]

    def one(sl):
        pt = points[sl]
        m = np.outer(pt.real, cx) - np.outer(pt.imag, sy) - offs[None, :]
        k = int(np.argmax(m))
        i, j = divmod(k, m.shape[1])
        return float(m[i, j]), sl.start + i, j

    if len(chunks) > 1 and worker_count() > 1:
        with ThreadPoolExecutor(worker_count()) as ex:
            res = list(ex.map(one, chunks))
    else:
        res = [one(sl) for sl in chunks]
    return max(res, key=lambda t: t[0])


def support_check(cloud: SampleCloud, boundary: RegionPolyline, tol: float = TOL_IN) -> VerificationReport:
    """Worst support-inequality violation of the cloud against the boundary.

    Only hull vertices of the cloud can realise a maximum of a linear
    functional, so the cloud is reduced to its hull first.
    """
    if cloud.params != boundary.params:
        raise DomainError("cloud and boundary were built for different params")
    pts = _hull_vertices(cloud.points)
    v, i, j = support_violations(pts, boundary.gamma, boundary.theta)
    return VerificationReport(
        max_support_violation=v,
        hull_gap=float("nan"),
        n_samples=len(cloud),
        tol_in=tol,
        tol_fill=TOL_FILL,
        scale=scale(boundary.params),
        diameter=polyline_diameter(boundary),
        worst_sample=complex(pts[i]),
        worst_theta=float(boundary.theta[j]),
    )


def polyline_diameter(boundary: RegionPolyline) -> float:
    g = boundary.gamma
    xy = np.column_stack([g.real, g.imag])
    hv = xy[ConvexHull(xy).vertices] if len(g) >= 3 else xy
    d = hv[:, None, :] - hv[None, :, :]
    return float(np.sqrt((d ** 2).sum(-1)).max())


def _point_segment_dist(q: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distance from each point of ``q`` to the nearest segment ``a[k]b[k]``."""
    best = np.full(q.shape, np.inf)
    for lo in range(0, len(a), 512):
        aa, bb = a[lo:lo + 512][None, :], b[lo:lo + 512][None, :]
        ab = bb - aa
        qq = q[:, None]
        t = ((qq - aa) * np.conj(ab)).real / np.maximum(np.abs(ab) ** 2, 1e-300)
        t = np.clip(t, 0.0, 1.0)
        best = np.minimum(best, np.abs(qq - (aa + t * ab)).min(axis=1))
    return best


def hull_gap(cloud: SampleCloud, boundary: RegionPolyline) -> float:
    """Largest distance from a boundary vertex to the convex hull of the samples."""
    if len(cloud) < 3:
        raise DomainError("hull_gap needs at least 3 samples")
    xy = np.column_stack([cloud.points.real, cloud.points.imag])
    try:
        hull = ConvexHull(xy)
    except Exception as exc:
        raise DomainError("degenerate sample hull") from exc
    hv = cloud.points[hull.vertices]  # counter-clockwise
    a, b = hv, np.roll(hv, -1)
    q = boundary.gamma
    # inside test: left of every edge
    cross = ((b - a)[None, :].conj() * (q[:, None] - a[None, :])).imag
    inside = np.all(cross >= 0.0, axis=1)
    d = _point_segment_dist(q, a, b)
    d[inside] = 0.0
    return float(d.max())


def verify(
    p: CanonicalParams,
    boundary: RegionPolyline,
    rings: int = 100,
    angles: int = 100,
    alphas: int = 64,
    tol_in: float = TOL_IN,
    tol_fill: float = TOL_FILL,
    seed: int | None = None,
) -> VerificationReport:
    cloud = sample_region(p, rings, angles, alphas, seed=seed)
    rep = support_check(cloud, boundary, tol_in)
    rep.hull_gap = hull_gap(cloud, boundary)
    rep.tol_fill = tol_fill
    return rep


def contains(boundary: RegionPolyline, point, tol: float = TOL_IN) -> bool:
    """Convex membership by the support inequalities of every boundary sample."""
    v, _, _ = support_violations(np.atleast_1d(point), boundary.gamma, boundary.theta)
    return v <= tol * scale(boundary.params)


def cs_ring_mismatch(p: CanonicalParams, boundary_fn, ring_angles: int = 100) -> tuple[float, int]:
    """Compare unit-ring samples with the boundary at their outward normal angle.

    For ``lambda`` on the unit circle the sample ``A c_s(lambda)`` has normal
    direction ``arg(lambda (1 - 2 s lambda))``. Where the boundary at that
    angle is on the c_s arc, both must coincide. ``boundary_fn`` maps a
    theta array to ``(gamma, circular_mask)``. Returns the worst distance and
    the number of ring points compared.
    """
    lam = np.exp(2j * np.pi * np.arange(ring_angles) / ring_angles)
    n = lam * (1.0 - 2.0 * p.s * lam)
    # stationarity holds with multiplier |n|/2; it must be at least r
    ok = np.abs(n) / 2.0 >= p.r
    th = np.angle(n[ok])
    gam, circ = boundary_fn(th)
    on_cs = ~circ
    if not np.any(on_cs):
        return 0.0, 0
    samples = sample_disks(p, lam[ok][on_cs], [1.0])
    return float(np.max(np.abs(samples - gam[on_cs]))), int(on_cs.sum())
