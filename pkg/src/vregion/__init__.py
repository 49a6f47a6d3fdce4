"""Variability region of f''(z0) over analytic self-maps of the disk with f(0) = 0, f(z0) = w0."""

from .errors import DomainError, PoleError, RegimeError
from .extremal import (
    BoundaryArc,
    DiskFamily,
    Interior,
    build_disk_family_function,
    build_extremal,
    build_extremal_boundary,
    build_extremal_interior,
    eval_jet,
    validate_membership,
)
from .jets import Jet2, jet_add, jet_div, jet_mul, moebius_eval, moebius_jet
from .oracle import contains, hull_gap, sample_region, support_check, verify
from .reduction import GeneralParams, Reduction, map_back, to_canonical
from .region import (
    ArcKind,
    BoundaryPoint,
    CanonicalParams,
    Disk,
    Regime,
    RegimeKind,
    RegionPolyline,
    amplitude,
    boundary_polyline,
    c_s,
    circle_case_point,
    classify_gamma_curve,
    classify_regime,
    first_derivative_disk,
    gamma,
    h_theta,
    rho_r,
    rogosinski_disk,
    solve_r_theta,
    support_point,
    zeta_theta,
)

__version__ = "0.1.0"

__all__ = [
    "amplitude",
    "ArcKind",
    "boundary_polyline",
    "BoundaryArc",
    "BoundaryPoint",
    "build_disk_family_function",
    "build_extremal",
    "build_extremal_boundary",
    "build_extremal_interior",
    "c_s",
    "CanonicalParams",
    "circle_case_point",
    "classify_gamma_curve",
    "classify_regime",
    "contains",
    "Disk",
    "DiskFamily",
    "DomainError",
    "eval_jet",
    "first_derivative_disk",
    "gamma",
    "GeneralParams",
    "h_theta",
    "hull_gap",
    "Interior",
    "Jet2",
    "jet_add",
    "jet_div",
    "jet_mul",
    "map_back",
    "moebius_eval",
    "moebius_jet",
    "PoleError",
    "Reduction",
    "Regime",
    "RegimeError",
    "RegimeKind",
    "RegionPolyline",
    "rho_r",
    "rogosinski_disk",
    "sample_region",
    "solve_r_theta",
    "support_check",
    "support_point",
    "to_canonical",
    "validate_membership",
    "verify",
    "zeta_theta",
]
