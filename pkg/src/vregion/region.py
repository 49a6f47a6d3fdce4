"""Geometry of the canonical variability region V(r, s) of f''(r).

The region is ``A(r, s)`` times the union of the disks centred at
``c_s(zeta) = zeta (1 - s zeta)`` with radius ``rho_r(zeta) = r (1 - |zeta|^2)``
over the closed unit disk. Its boundary is traced by the support point in
direction ``theta``; this module computes that point, the boundary curve, the
three-way shape classification, and the classical first-order disks.

Scalar operations accept a float ``theta``; the ``*_array`` variants are
vectorised over numpy arrays and back the polyline construction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

BISECT_MAX_ITER = 200
BISECT_XTOL = 1e-14
DEFAULT_SAMPLES = 2048
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class CanonicalParams:
    r: float
    s: float

    def __post_init__(self):
        r, s = float(self.r), float(self.s)
        if not (math.isfinite(r) and math.isfinite(s) and 0.0 <= s < r < 1.0):
            raise DomainError(f"need 0 <= s < r < 1, got r={self.r!r}, s={self.s!r}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)


class RegimeKind(str, enum.Enum):
    FULL_CIRCLE = "FullCircle"
    CONVEX_JORDAN = "ConvexJordan"
    MIXED = "Mixed"


@dataclass(frozen=True)
class Regime:
    kind: RegimeKind
    theta0: float | None = None

    def __str__(self):
        if self.kind is RegimeKind.MIXED:
            return f"Mixed(theta0={self.theta0!r})"
        return self.kind.value


class ArcKind(str, enum.Enum):
    CIRCULAR = "CircularArc"
    CS = "CsArc"


@dataclass(frozen=True)
class BoundaryPoint:
    theta: float
    r_theta: float
    zeta_theta: complex
    v_theta: complex
    gamma: complex
    arc_kind: ArcKind


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def contains(self, z, tol=0.0) -> bool:
        return abs(z - self.center) <= self.radius + tol


class GammaCurveShape(str, enum.Enum):
    CONVEX = "Convex"
    SMOOTH_NON_CONVEX = "SmoothNonConvex"
    CUSP = "Cusp"
    SELF_INTERSECTING = "SelfIntersecting"


@dataclass(frozen=True)
class GammaCurveClass:
    shape: GammaCurveShape
    witness: dict


def amplitude(p) -> float:
    """Positive scale factor ``2(r^2 - s^2) / (r^2 (1 - r^2)^2)``.

    Accepts canonical params or anything with ``z0``/``w0`` attributes, in
    which case ``r = |z0|`` and ``s = |w0|``; the rotation phase of a general
    problem is carried by :mod:`vregion.reduction`, not by this factor.
    """
    if hasattr(p, "z0"):
        r, s = abs(p.z0), abs(p.w0)
    else:
        r, s = p.r, p.s
    r2 = r * r
    return 2.0 * (r2 - s * s) / (r2 * (1.0 - r2) ** 2)


def scale(p: CanonicalParams) -> float:
    """Magnitude used to turn relative tolerances into absolute ones."""
    return amplitude(p) * (1.0 + p.s + p.r)


def c_s(p: CanonicalParams, zeta):
    return zeta * (1.0 - p.s * zeta)


def rho_r(p: CanonicalParams, zeta):
    return p.r * (1.0 - np.abs(zeta) ** 2)


def h_theta(p: CanonicalParams, theta, x):
    x = np.asarray(x, dtype=float)
    if np.any(x <= p.s):
        raise DomainError(f"h_theta needs x > s = {p.s}")
    out = np.abs(x * np.exp(1j * np.asarray(theta)) - p.s) / (2.0 * (x * x - p.s * p.s))
    return float(out) if out.ndim == 0 else out


def _interior_mask(p: CanonicalParams, theta):
    reg = classify_regime(p)
    if reg.kind is RegimeKind.MIXED:
        # same split as the modulus test, but exact at the inserted +-theta0
        wrapped = np.abs(np.angle(np.exp(1j * theta)))
        wrapped = np.where(np.abs(theta) <= np.pi, np.abs(theta), wrapped)
        return wrapped < reg.theta0
    return np.abs(p.r * np.exp(1j * theta) - p.s) < 2.0 * (p.r * p.r - p.s * p.s)


def solve_r_theta_array(p: CanonicalParams, theta):
    """Vectorised ``r_theta`` and interior flags for an array of angles.

    Outside the interior set, bisect ``h_theta(x) = 1`` on
    ``[max(r, 1/2 - s), 1/2 + s]``; ``h_theta`` is strictly decreasing there
    and brackets 1 because ``1/(2(x+s)) <= h_theta(x) <= 1/(2(x-s))``.
    """
    theta = np.asarray(theta, dtype=float)
    r, s = p.r, p.s
    interior = _interior_mask(p, theta)
    out = np.full(theta.shape, r)
    todo = ~interior
    if not np.any(todo):
        return out, interior
    e = np.exp(1j * theta[todo])

    def g(x):  # h_theta(x) - 1, in product form to avoid a division
        return np.abs(x * e - s) - 2.0 * (x * x - s * s)

    lo = np.full(e.shape, max(r, 0.5 - s))
    hi = np.full(e.shape, 0.5 + s)
    # the equality case |r e^{i theta} - s| = 2(r^2 - s^2) has root r
    glo = g(lo)
    exact_lo = glo <= 0.0
    for _ in range(BISECT_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if np.all((hi - lo <= BISECT_XTOL) | (mid == lo) | (mid == hi)):
            break
        pos = g(mid) > 0.0
        lo = np.where(pos, mid, lo)
        hi = np.where(pos, hi, mid)
    # pick the endpoint with the smaller residual in h
    x = np.where(np.abs(_h(e, s, lo) - 1.0) <= np.abs(_h(e, s, hi) - 1.0), lo, hi)
    x = np.where(exact_lo, lo, x)
    out[todo] = x
    return out, interior


def _h(e, s, x):
    return np.abs(x * e - s) / (2.0 * (x * x - s * s))


def solve_r_theta(p: CanonicalParams, theta: float) -> tuple[float, bool]:
    rt, interior = solve_r_theta_array(p, np.array([theta]))
    return float(rt[0]), bool(interior[0])


def zeta_theta_array(p: CanonicalParams, theta):
    theta = np.asarray(theta, dtype=float)
    rt, interior = solve_r_theta_array(p, theta)
    z = (rt * np.exp(1j * theta) - p.s) / (2.0 * (rt * rt - p.s * p.s))
    # on the boundary branch |z| = 1 up to rounding; snap the modulus
    z = np.where(interior, z, z / np.abs(z))
    return z, rt, interior


def zeta_theta(p: CanonicalParams, theta: float) -> complex:
    z, _, _ = zeta_theta_array(p, np.array([theta]))
    return complex(z[0])


def support_point_array(p: CanonicalParams, theta):
    theta = np.asarray(theta, dtype=float)
    z, rt, interior = zeta_theta_array(p, theta)
    v = c_s(p, z) + np.where(interior, rho_r(p, z), 0.0) * np.exp(1j * theta)
    return v, z, rt, interior


def support_point(p: CanonicalParams, theta: float) -> complex:
    v, _, _, _ = support_point_array(p, np.array([theta]))
    return complex(v[0])


def gamma(p: CanonicalParams, theta: float) -> BoundaryPoint:
    v, z, rt, interior = support_point_array(p, np.array([theta]))
    return BoundaryPoint(
        theta=float(theta),
        r_theta=float(rt[0]),
        zeta_theta=complex(z[0]),
        v_theta=complex(v[0]),
        gamma=complex(amplitude(p) * v[0]),
        arc_kind=ArcKind.CIRCULAR if interior[0] else ArcKind.CS,
    )


def classify_regime(p: CanonicalParams) -> Regime:
    r, s = p.r, p.s
    if r - s >= 0.5:
        return Regime(RegimeKind.FULL_CIRCLE)
    if r + s <= 0.5:
        return Regime(RegimeKind.CONVEX_JORDAN)
    d = r * r - s * s
    arg = (r * r + s * s - 4.0 * d * d) / (2.0 * s * r)
    return Regime(RegimeKind.MIXED, math.acos(min(1.0, max(-1.0, arg))))


def circle_case_center_radius(p: CanonicalParams) -> tuple[float, float]:
    r, s = p.r, p.s
    k = 2.0 * r * r * (1.0 - r * r) ** 2
    return -s / k, (1.0 + 4.0 * (r * r - s * s)) * r / k


def circle_case_point(p: CanonicalParams, zeta: complex) -> complex:
    """Closed-form point on the circle that bounds V(r, s) when r - s >= 1/2."""
    if abs(abs(zeta) - 1.0) > UNIT_TOL:
        raise DomainError(f"circle_case_point needs |zeta| = 1, got {abs(zeta)!r}")
    r, s = p.r, p.s
    return ((1.0 + 4.0 * (r * r - s * s)) * r * zeta - s) / (2.0 * r * r * (1.0 - r * r) ** 2)


@dataclass
class RegionPolyline:
    """Ordered closed sampling of the boundary, stored column-wise."""

    params: CanonicalParams
    theta: np.ndarray
    r_theta: np.ndarray
    zeta: np.ndarray
    v: np.ndarray
    gamma: np.ndarray
    circular: np.ndarray
    closed: bool = field(default=True)

    def __len__(self):
        return len(self.theta)

    @property
    def points(self) -> list[BoundaryPoint]:
        return [
            BoundaryPoint(
                float(t), float(rt), complex(z), complex(v), complex(g),
                ArcKind.CIRCULAR if c else ArcKind.CS,
            )
            for t, rt, z, v, g, c in zip(
                self.theta, self.r_theta, self.zeta, self.v, self.gamma, self.circular
            )
        ]

    @property
    def arc_kinds(self) -> list[ArcKind]:
        return [ArcKind.CIRCULAR if c else ArcKind.CS for c in self.circular]


def theta_grid(p: CanonicalParams, n: int) -> np.ndarray:
    """Uniform grid over (-pi, pi] with +-theta0 inserted in the mixed regime."""
    k = np.arange(1, n + 1)
    th = -np.pi + 2.0 * np.pi * k / n
    th[-1] = np.pi
    reg = classify_regime(p)
    if reg.kind is RegimeKind.MIXED:
        th = np.union1d(th, [-reg.theta0, reg.theta0])
    return th


def boundary_from_thetas(p: CanonicalParams, th) -> RegionPolyline:
    th = np.asarray(th, dtype=float)
    v, z, rt, interior = support_point_array(p, th)
    return RegionPolyline(p, th, rt, z, v, amplitude(p) * v, interior)


def boundary_polyline(p: CanonicalParams, n: int = DEFAULT_SAMPLES) -> RegionPolyline:
    if n < 16:
        raise DomainError("boundary_polyline needs at least 16 samples")
    return boundary_from_thetas(p, theta_grid(p, n))


def first_derivative_disk(z0: complex, w0: complex) -> Disk:
    """Exact set of f'(z0) over self-maps with f(0) = 0 and f(z0) = w0."""
    a, b = abs(z0), abs(w0)
    if not (0.0 < a < 1.0 and b < a):
        raise DomainError(f"need 0 < |z0| < 1 and |w0| < |z0|, got z0={z0!r}, w0={w0!r}")
    return Disk(complex(w0 / z0), (a * a - b * b) / (a * (1.0 - a * a)))


def rogosinski_disk(z0: complex, mu: complex) -> Disk:
    """Exact set of f(z0) over self-maps with f(0) = 0 and f'(0) = mu."""
    a, m = abs(z0), abs(mu)
    if not (0.0 < a < 1.0 and m <= 1.0):
        raise DomainError(f"need 0 < |z0| < 1 and |mu| <= 1, got z0={z0!r}, mu={mu!r}")
    den = 1.0 - a * a * m * m
    return Disk(complex(z0 * mu * (1.0 - a * a) / den), (1.0 - m * m) * a * a / den)


def classify_gamma_curve(s: float, samples: int = 4096) -> GammaCurveClass:
    """Shape of the closed curve ``zeta -> zeta (1 - s zeta)`` on the unit circle.

    The classification uses exact thresholds on ``s``; the witness is
    computed numerically and corroborates it.
    """
    if not 0.0 <= s < 1.0:
        raise DomainError(f"need 0 <= s < 1, got {s!r}")
    t = np.linspace(-np.pi, np.pi, samples, endpoint=False)
    # curvature numerator Im(conj(c') c'') = 1 + 8 s^2 - 6 s cos t
    curv = 1.0 + 8.0 * s * s - 6.0 * s * np.cos(t)
    speed = np.abs(1.0 - 2.0 * s * np.exp(1j * t))
    witness = {
        "min_curvature": float(curv.min()),
        "argmin_curvature": float(t[np.argmin(curv)]),
        "min_speed": float(speed.min()),
    }
    if s <= 0.25:
        shape = GammaCurveShape.CONVEX
    elif s < 0.5:
        shape = GammaCurveShape.SMOOTH_NON_CONVEX
    elif s == 0.5:
        shape = GammaCurveShape.CUSP
        witness["derivative_at_1"] = complex(1.0 - 2.0 * s)
    else:
        shape = GammaCurveShape.SELF_INTERSECTING
        # c_s(e^{it}) is real where sin t (1 - 2 s cos t) = 0
        t0 = math.acos(1.0 / (2.0 * s))
        z = complex(math.cos(t0), math.sin(t0))
        witness["pair"] = (t0, -t0)
        witness["point"] = complex(z * (1.0 - s * z))
        witness["point_conj"] = complex(z.conjugate() * (1.0 - s * z.conjugate()))
    return GammaCurveClass(shape, witness)
