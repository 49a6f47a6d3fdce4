"""Reduction of a general problem (z0, w0) to the canonical real pair (r, s).

Rotating the argument and the value of a self-map rotates the region:
``V(z0, w0) = phase * V(|z0|, |w0|)`` with
``phase = exp(i (arg w0 - 2 arg z0))``. With ``w0 = 0`` the angle of ``w0``
is taken to be 0.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from . import jets
from .errors import DomainError
from .extremal import ExtremalSpec, compose
from .jets import Jet2
from .region import CanonicalParams, RegionPolyline


@dataclass(frozen=True)
class GeneralParams:
    z0: complex
    w0: complex

    def __post_init__(self):
        z0, w0 = complex(self.z0), complex(self.w0)
        if not (0.0 < abs(z0) < 1.0 and abs(w0) < abs(z0)):
            raise DomainError(f"need 0 < |z0| < 1 and |w0| < |z0|, got z0={z0!r}, w0={w0!r}")
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "w0", w0)


@dataclass(frozen=True)
class Reduction:
    general: GeneralParams
    canonical: CanonicalParams
    phase: complex

    @property
    def arg_z0(self) -> float:
        return cmath.phase(self.general.z0)

    @property
    def arg_w0(self) -> float:
        return cmath.phase(self.general.w0) if self.general.w0 != 0 else 0.0


def to_canonical(g: GeneralParams) -> Reduction:
    t1 = cmath.phase(g.z0)
    t2 = cmath.phase(g.w0) if g.w0 != 0 else 0.0
    return Reduction(g, CanonicalParams(abs(g.z0), abs(g.w0)), cmath.exp(1j * (t2 - 2.0 * t1)))


def map_back(red: Reduction, canonical_point):
    """Carry a point (or array of points) of V(r, s) to V(z0, w0)."""
    return red.phase * canonical_point


def map_back_polyline(red: Reduction, poly: RegionPolyline) -> tuple[np.ndarray, np.ndarray]:
    """Transported boundary points and their outward normal angles."""
    # rotating by the phase rotates every support direction by arg(phase)
    return map_back(red, poly.gamma), poly.theta + cmath.phase(red.phase)


def rotated_jet(red: Reduction, spec: ExtremalSpec) -> Jet2:
    """Jet at z0 of ``g(z) = e^{i t2} f(e^{-i t1} z)`` where ``f`` is a canonical spec.

    ``g`` lies in the general class whenever ``f`` lies in the canonical one.
    """
    if spec.params != red.canonical:
        raise DomainError("spec was built for different canonical params")
    u = cmath.exp(-1j * red.arg_z0)
    inner = Jet2(u * red.general.z0, u + 0j, 0j)
    return jets.jet_scale(compose(spec, inner), cmath.exp(1j * red.arg_w0))
