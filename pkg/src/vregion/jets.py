"""Order-2 Taylor jets over the complex numbers and Moebius disk automorphisms.

A :class:`Jet2` holds ``(f, f', f'')`` at an evaluation point that the caller
tracks. Arithmetic is closed on jets, so nested compositions of Moebius maps
and products can be differentiated exactly without finite differences.

Every field may be a Python ``complex`` or a numpy array of complex values;
the arithmetic is written so both broadcast the same way.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PoleError

POLE_EPS = 1e-14


@dataclass(frozen=True)
class Jet2:
    v: complex
    d1: complex = 0j
    d2: complex = 0j

    # make ndarray * Jet2 dispatch to Jet2.__rmul__ instead of broadcasting
    __array_ufunc__ = None

    def __add__(self, other):
        return jet_add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return jet_add(self, jet_scale(_lift(other), -1.0))

    def __rsub__(self, other):
        return jet_add(_lift(other), jet_scale(self, -1.0))

    def __mul__(self, other):
        if isinstance(other, Jet2):
            return jet_mul(self, other)
        return jet_scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return jet_div(self, _lift(other))

    def __rtruediv__(self, other):
        return jet_div(_lift(other), self)

    def __neg__(self):
        return jet_scale(self, -1.0)

    def conj_coeffs(self) -> "Jet2":
        return Jet2(np.conj(self.v), np.conj(self.d1), np.conj(self.d2))


def constant(c) -> Jet2:
    return Jet2(c, 0j * np.ones_like(c), 0j * np.ones_like(c))


def identity(z) -> Jet2:
    """Jet of ``z -> z`` at the point ``z``."""
    return Jet2(z, 1.0 + 0j * np.ones_like(z), 0j * np.ones_like(z))


ZERO = Jet2(0j, 0j, 0j)
ONE = Jet2(1 + 0j, 0j, 0j)


def _lift(x) -> Jet2:
    return x if isinstance(x, Jet2) else constant(x)


def _check_pole(den) -> None:
    m = np.min(np.abs(den))
    if not m >= POLE_EPS:  # also catches NaN
        raise PoleError(f"denominator magnitude {m:.3e} below pole epsilon {POLE_EPS:g}")


def jet_add(x: Jet2, y: Jet2) -> Jet2:
    return Jet2(x.v + y.v, x.d1 + y.d1, x.d2 + y.d2)


def jet_scale(x: Jet2, c) -> Jet2:
    return Jet2(c * x.v, c * x.d1, c * x.d2)


def jet_mul(x: Jet2, y: Jet2) -> Jet2:
    """Leibniz rule truncated at order 2."""
    return Jet2(
        x.v * y.v,
        x.d1 * y.v + x.v * y.d1,
        x.d2 * y.v + 2.0 * x.d1 * y.d1 + x.v * y.d2,
    )


def jet_div(x: Jet2, y: Jet2) -> Jet2:
    """Quotient rule truncated at order 2.

    Raises :class:`PoleError` when ``|y.v|`` is below ``POLE_EPS``.
    """
    _check_pole(y.v)
    v = x.v / y.v
    d1 = (x.d1 - v * y.d1) / y.v
    d2 = (x.d2 - 2.0 * d1 * y.d1 - v * y.d2) / y.v
    return Jet2(v, d1, d2)


def moebius_eval(a, z):
    """Evaluate ``T_a(z) = (z + a) / (1 + conj(a) z)``."""
    den = 1.0 + np.conj(a) * z
    _check_pole(den)
    return (z + a) / den


def moebius_jet(a, z: Jet2) -> Jet2:
    """Jet of ``T_a`` composed with the function whose jet is ``z``."""
    return jet_div(jet_add(z, constant(a + 0j * z.v)), jet_add(ONE, jet_scale(z, np.conj(a))))
