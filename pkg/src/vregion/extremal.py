"""Extremal functions for the boundary of V(r, s), as Moebius composition trees.

Three shapes are built, all normalised at ``z0 = r``, ``w0 = s``:

* ``Interior``   f(z) = z T_{s/r}( T_{-r}(z) T_zeta(e^{i theta} T_{-r}(z)) ), |zeta| < 1
* ``BoundaryArc`` f(z) = z T_{s/r}( zeta T_{-r}(z) ), |zeta| = 1
* ``DiskFamily``   f(z) = z T_{s/r}( T_{-r}(z) T_lambda(alpha T_{-r}(z)) )

``Interior`` is the ``DiskFamily`` shape with ``lambda = zeta_theta`` and
``alpha = e^{i theta}``. Specs are evaluated on demand through order-2 jets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import jets
from .errors import DomainError, RegimeError
from .jets import Jet2
from .region import CanonicalParams, UNIT_TOL, zeta_theta

VALIDATION_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99)


@dataclass(frozen=True)
class Interior:
    params: CanonicalParams
    theta: float
    zeta: complex

    def __post_init__(self):
        if not abs(self.zeta) < 1.0:
            raise DomainError(f"Interior spec needs |zeta| < 1, got {abs(self.zeta)!r}")

    @property
    def form(self) -> str:
        return "Interior"


@dataclass(frozen=True)
class BoundaryArc:
    params: CanonicalParams
    zeta: complex

    def __post_init__(self):
        if abs(abs(self.zeta) - 1.0) > UNIT_TOL:
            raise DomainError(f"BoundaryArc spec needs |zeta| = 1, got {abs(self.zeta)!r}")

    @property
    def form(self) -> str:
        return "BoundaryArc"


@dataclass(frozen=True)
class DiskFamily:
    params: CanonicalParams
    lam: complex
    alpha: complex

    def __post_init__(self):
        # lam/alpha may be broadcastable arrays for batch evaluation
        if np.any(np.abs(self.lam) > 1.0 + UNIT_TOL) or np.any(np.abs(self.alpha) > 1.0 + UNIT_TOL):
            raise DomainError("DiskFamily spec needs |lambda| <= 1 and |alpha| <= 1")

    @property
    def form(self) -> str:
        return "DiskFamily"


ExtremalSpec = Interior | BoundaryArc | DiskFamily


@dataclass(frozen=True)
class MembershipReport:
    f0: complex
    f_r_error: float
    sup_mod: float
    passed: bool


def build_extremal_interior(p: CanonicalParams, theta: float) -> Interior:
    z = zeta_theta(p, theta)
    if abs(z) >= 1.0 - UNIT_TOL:
        raise RegimeError(f"zeta_theta lies on the unit circle at theta={theta!r}; use the boundary-arc form")
    return Interior(p, float(theta), z)


def build_extremal_boundary(p: CanonicalParams, theta: float) -> BoundaryArc:
    z = zeta_theta(p, theta)
    if abs(z) < 1.0 - UNIT_TOL:
        raise RegimeError(f"zeta_theta is interior at theta={theta!r}; use the interior form")
    return BoundaryArc(p, z)


def build_extremal(p: CanonicalParams, theta: float) -> Interior | BoundaryArc:
    """Whichever of the two boundary forms applies at ``theta``."""
    z = zeta_theta(p, theta)
    if abs(z) >= 1.0 - UNIT_TOL:
        return BoundaryArc(p, z)
    return Interior(p, float(theta), z)


def build_disk_family_function(p: CanonicalParams, lam: complex, alpha: complex) -> DiskFamily:
    if np.ndim(lam) or np.ndim(alpha):
        return DiskFamily(p, np.asarray(lam, dtype=complex), np.asarray(alpha, dtype=complex))
    return DiskFamily(p, complex(lam), complex(alpha))


def _inner_factor(spec, t: Jet2) -> Jet2:
    """The factor multiplying ``T_{-r}(z)`` inside ``T_{s/r}``."""
    if isinstance(spec, BoundaryArc):
        return jets.constant(spec.zeta)
    if isinstance(spec, Interior):
        lam, alpha = spec.zeta, np.exp(1j * spec.theta)
    else:
        lam, alpha = spec.lam, spec.alpha
    return jets.moebius_jet(lam, jets.jet_scale(t, alpha))


def compose(spec: ExtremalSpec, z: Jet2) -> Jet2:
    """Jet of ``f o g`` where ``z`` is the jet of the inner map ``g``."""
    p = spec.params
    t = jets.moebius_jet(-p.r, z)
    return z * jets.moebius_jet(p.s / p.r, t * _inner_factor(spec, t))


def eval_jet(spec: ExtremalSpec, z) -> Jet2:
    """Exact ``(f, f', f'')`` at ``z``; ``z`` may be a complex array."""
    if np.max(np.abs(z)) >= 1.0:
        raise DomainError("eval_jet needs |z| < 1")
    return compose(spec, jets.identity(np.asarray(z, dtype=complex) if np.ndim(z) else complex(z)))


def evaluate(spec: ExtremalSpec, z):
    """Function values only; vectorised over ``z``."""
    p = spec.params
    z = np.asarray(z, dtype=complex)
    t = jets.moebius_eval(-p.r, z)
    if isinstance(spec, BoundaryArc):
        inner = spec.zeta * t
    else:
        if isinstance(spec, Interior):
            lam, alpha = spec.zeta, np.exp(1j * spec.theta)
        else:
            lam, alpha = spec.lam, spec.alpha
        inner = t * jets.moebius_eval(lam, alpha * t)
    return z * jets.moebius_eval(p.s / p.r, inner)


def validation_grid(grid_radius: float = 0.999, grid_n: int = 512) -> np.ndarray:
    if not 0.0 < grid_radius < 1.0 or grid_n < 64:
        raise DomainError("validation grid needs 0 < radius < 1 and at least 64 angles")
    radii = np.array(VALIDATION_RADII + (grid_radius,))
    ang = np.exp(2j * np.pi * np.arange(grid_n) / grid_n)
    return (radii[:, None] * ang[None, :]).ravel()


def validate_membership(spec: ExtremalSpec, grid_radius: float = 0.999, grid_n: int = 512) -> MembershipReport:
    """Check f(0) = 0, f(r) = s and |f| <= 1 on a grid of concentric circles."""
    p = spec.params
    f0 = complex(evaluate(spec, 0j))
    err = float(abs(evaluate(spec, complex(p.r)) - p.s))
    sup = float(np.max(np.abs(evaluate(spec, validation_grid(grid_radius, grid_n)))))
    passed = abs(f0) <= 1e-12 and err <= 1e-12 and sup <= 1.0 + 1e-9
    return MembershipReport(f0, err, sup, passed)


def disk_family_value(p: CanonicalParams, lam, alpha):
    """Closed-form ``f''(r) / A`` for the disk family: c(lambda) + rho(lambda) alpha."""
    return lam * (1.0 - p.s * lam) + p.r * (1.0 - np.abs(lam) ** 2) * alpha


def dieudonne_derivative(p: CanonicalParams, lam):
    """Canonical ``f'(r)`` for a self-map with ``f~(r) = lambda``."""
    return p.s / p.r + (p.r ** 2 - p.s ** 2) / (p.r * (1.0 - p.r ** 2)) * lam


# names used by the published interface
TheoremA = DiskFamily
build_theoremA_function = build_disk_family_function
theoremA_value = disk_family_value
