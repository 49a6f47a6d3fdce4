import cmath
import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from vregion.errors import DomainError
from vregion.polygon import is_simple, min_turn_offset, point_strictly_inside_convex, winding_number
from vregion.region import (
    ArcKind,
    CanonicalParams,
    GammaCurveShape,
    RegimeKind,
    amplitude,
    boundary_polyline,
    c_s,
    circle_case_center_radius,
    circle_case_point,
    classify_gamma_curve,
    classify_regime,
    first_derivative_disk,
    gamma,
    h_theta,
    rho_r,
    rogosinski_disk,
    scale,
    solve_r_theta,
    support_point,
    zeta_theta,
)

from conftest import FIGURE_PARAMS

thetas = st.floats(-math.pi, math.pi)


@st.composite
def params(draw):
    r = draw(st.floats(0.02, 0.98))
    s = draw(st.floats(0.0, 1.0)) * r * 0.999
    return CanonicalParams(r, s)


def amplitude_exact(r: F, s: F) -> F:
    return 2 * (r * r - s * s) / (r * r * (1 - r * r) ** 2)


def brute_support_value(p, theta, n_rad=400, n_ang=1440):
    """max over a polar zeta grid of Re(c_s(zeta) e^{-i theta}) + rho_r(zeta)."""
    rad = np.linspace(0, 1, n_rad)[:, None]
    ang = np.exp(2j * np.pi * np.arange(n_ang) / n_ang)[None, :]
    z = rad * ang
    k = (z * (1 - p.s * z) * cmath.exp(-1j * theta)).real + p.r * (1 - np.abs(z) ** 2)
    return k.max()


def test_params_validation():
    for r, s in [(0.5, 0.5), (0.5, 0.6), (1.0, 0.1), (0.3, -0.1), (float("nan"), 0.1)]:
        with pytest.raises(DomainError):
            CanonicalParams(r, s)


def test_amplitude_examples():
    assert amplitude(FIGURE_PARAMS["mixed"]) == pytest.approx(4.86, rel=1e-15)
    assert float(amplitude_exact(F(2, 3), F(1, 3))) == 4.86
    assert amplitude(FIGURE_PARAMS["full_circle"]) == pytest.approx(4096 / 441, rel=1e-15)
    assert amplitude(CanonicalParams(0.5, 0.5 - 1e-12)) < 1e-10


def test_c_s_and_rho_examples():
    assert c_s(CanonicalParams(0.5, 0.0), 0.3 + 0.4j) == 0.3 + 0.4j
    assert c_s(CanonicalParams(0.9, 0.5), 1.0) == 0.5
    assert c_s(CanonicalParams(0.9, 1 / 3), 0.5) == pytest.approx(5 / 12, rel=1e-15)
    p = CanonicalParams(2 / 3, 1 / 3)
    assert rho_r(p, 0) == p.r
    assert rho_r(p, cmath.exp(0.3j)) == pytest.approx(0, abs=1e-15)
    assert rho_r(p, 0.5) == pytest.approx(0.5, rel=1e-15)


@given(thetas, st.floats(0.01, 0.99))
def test_h_theta_special_cases(theta, x):
    assert h_theta(CanonicalParams(0.99, 0.0), theta, x) == pytest.approx(1 / (2 * x), rel=1e-14)
    s = 0.3 * x
    p = CanonicalParams(0.99, s)
    assert h_theta(p, math.pi, x) == pytest.approx(1 / (2 * (x - s)), rel=1e-14)
    assert h_theta(p, 0.0, x) == pytest.approx(1 / (2 * (x + s)), rel=1e-14)


def test_h_theta_domain():
    with pytest.raises(DomainError):
        h_theta(CanonicalParams(0.5, 0.2), 0.0, 0.2)


@given(thetas, st.floats(0.0, 0.95))
def test_h_theta_strictly_decreasing(theta, s):
    p = CanonicalParams(0.99, s)
    x = np.linspace(s, 2.0, 400)[1:]
    h = h_theta(p, theta, x)
    assert np.all(np.diff(h) < 0)


def test_r_theta_closed_forms():
    p = CanonicalParams(2 / 3, 1 / 3)
    rt, interior = solve_r_theta(p, math.pi)
    assert not interior and rt == pytest.approx(1 / 3 + 1 / 2, abs=1e-14)
    p = CanonicalParams(1 / 4, 4 / 17)
    rt, interior = solve_r_theta(p, 0.0)
    assert not interior and rt == pytest.approx(1 / 2 - 4 / 17, abs=1e-14)
    p = CanonicalParams(0.3, 0.0)
    for t in np.linspace(-3, 3, 13):
        rt, interior = solve_r_theta(p, t)
        assert not interior and rt == pytest.approx(0.5, abs=1e-14)


@given(params(), thetas)
def test_root_residual_and_bracket(p, theta):
    rt, interior = solve_r_theta(p, theta)
    if interior:
        assert rt == p.r
    else:
        assert abs(h_theta(p, theta, rt) - 1) <= 1e-13
        assert max(p.r, 0.5 - p.s) <= rt <= 0.5 + p.s


@given(params(), thetas)
def test_zeta_dichotomy(p, theta):
    z = zeta_theta(p, theta)
    inside = abs(p.r * cmath.exp(1j * theta) - p.s) < 2 * (p.r**2 - p.s**2)
    if inside:
        assert abs(z) < 1
    else:
        assert abs(abs(z) - 1) <= 1e-12


def test_zeta_examples():
    assert zeta_theta(FIGURE_PARAMS["mixed"], 0.0) == pytest.approx(0.5, abs=1e-15)
    for t in np.linspace(-3, 3, 7):
        assert zeta_theta(CanonicalParams(0.4, 0.0), t) == pytest.approx(cmath.exp(1j * t), abs=1e-14)
        z = zeta_theta(FIGURE_PARAMS["full_circle"], t)
        assert z == pytest.approx((3 * cmath.exp(1j * t) - 1) / 4, abs=1e-15)
        assert abs(z) < 1


def test_support_point_examples():
    assert support_point(FIGURE_PARAMS["mixed"], 0.0) == pytest.approx(11 / 12, abs=1e-15)
    for t in np.linspace(-3, 3, 7):
        assert support_point(CanonicalParams(0.45, 0.0), t) == pytest.approx(cmath.exp(1j * t), abs=1e-14)
    assert support_point(FIGURE_PARAMS["full_circle"], 0.0) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("name", list(FIGURE_PARAMS))
@pytest.mark.parametrize("theta", np.linspace(-math.pi, math.pi, 9))
def test_support_point_against_brute_force(name, theta):
    p = FIGURE_PARAMS[name]
    v = support_point(p, theta)
    got = (v * cmath.exp(-1j * theta)).real
    brute = brute_support_value(p, theta)
    assert brute <= got + 1e-12
    assert got - brute < 2e-4  # grid resolution


def test_gamma_examples():
    p = FIGURE_PARAMS["mixed"]
    bp = gamma(p, 0.0)
    assert bp.gamma == pytest.approx(4.455, abs=1e-12)
    assert bp.arc_kind is ArcKind.CIRCULAR
    eq_circ = float((F(7, 3) * F(2, 3) - F(1, 3)) / (2 * F(4, 9) * F(25, 81)))
    assert eq_circ == 4.455
    assert bp.gamma == pytest.approx(eq_circ, rel=1e-14)


@given(params(), thetas)
def test_gamma_conjugate_symmetry(p, theta):
    a, b = gamma(p, theta).gamma, gamma(p, -theta).gamma
    assert abs(a - b.conjugate()) <= 1e-12 * scale(p)


def test_classify_figures():
    assert classify_regime(FIGURE_PARAMS["full_circle"]).kind is RegimeKind.FULL_CIRCLE
    assert classify_regime(FIGURE_PARAMS["convex_jordan"]).kind is RegimeKind.CONVEX_JORDAN
    reg = classify_regime(FIGURE_PARAMS["mixed"])
    assert reg.kind is RegimeKind.MIXED
    assert reg.theta0 == pytest.approx(math.acos(0.25), abs=1e-12)


def test_theta0_formula_exact():
    r, s = F(2, 3), F(1, 3)
    assert (r * r + s * s - 4 * (r * r - s * s) ** 2) / (2 * s * r) == F(1, 4)


@given(params())
def test_regime_conditions(p):
    reg = classify_regime(p)
    if reg.kind is RegimeKind.MIXED:
        assert p.r + p.s > 0.5 and p.r - p.s < 0.5
        assert 0 <= reg.theta0 <= math.pi
        # theta0 is where |r e^{i theta} - s| = 2(r^2 - s^2)
        lhs = abs(p.r * cmath.exp(1j * reg.theta0) - p.s)
        assert lhs == pytest.approx(2 * (p.r**2 - p.s**2), rel=1e-8, abs=1e-12)


def test_theta0_clamp_near_boundary():
    # r - s just below 1/2: argument of arccos approaches -1
    reg = classify_regime(CanonicalParams(0.75, 0.25 + 1e-16))
    assert reg.kind in (RegimeKind.FULL_CIRCLE, RegimeKind.MIXED)
    if reg.kind is RegimeKind.MIXED:
        assert math.isfinite(reg.theta0)


def test_regime_overlap_point_is_consistent():
    p = CanonicalParams(0.5, 0.0)
    assert classify_regime(p).kind is RegimeKind.FULL_CIRCLE
    for t in np.linspace(-math.pi, math.pi, 33):
        z = cmath.exp(1j * t)
        assert circle_case_point(p, z) == pytest.approx(amplitude(p) * c_s(p, z), abs=1e-14)
    assert circle_case_point(p, 1.0) == pytest.approx(32 / 9, rel=1e-15)


def test_circle_case_examples():
    c, rad = circle_case_center_radius(FIGURE_PARAMS["full_circle"])
    assert c == pytest.approx(-512 / 441, rel=1e-14)
    assert rad == pytest.approx(4608 / 441, rel=1e-14)
    r = 0.7
    c, rad = circle_case_center_radius(CanonicalParams(r, 0.0))
    assert c == 0.0
    assert rad == pytest.approx((1 + 4 * r * r) / (2 * r * (1 - r * r) ** 2), rel=1e-14)
    with pytest.raises(DomainError):
        circle_case_point(FIGURE_PARAMS["full_circle"], 0.9)


def test_circle_identity_full_circle():
    p = FIGURE_PARAMS["full_circle"]
    poly = boundary_polyline(p, 2048)
    ref = np.array([circle_case_point(p, cmath.exp(1j * t)) for t in poly.theta])
    assert np.max(np.abs(poly.gamma - ref)) <= 1e-10 * 4608 / 441


@pytest.mark.parametrize("n", [16, 17, 100])
def test_polyline_small(figure_params, n):
    poly = boundary_polyline(figure_params, n)
    mixed = classify_regime(figure_params).kind is RegimeKind.MIXED
    assert len(poly) == n + (2 if mixed else 0)
    assert np.all(np.diff(poly.theta) > 0)
    assert poly.theta[-1] == math.pi and poly.theta[0] > -math.pi
    assert poly.closed
    assert min_turn_offset(poly.gamma) >= -1e-9 * scale(figure_params)


def test_polyline_rejects_tiny_n():
    with pytest.raises(DomainError):
        boundary_polyline(FIGURE_PARAMS["mixed"], 8)


def test_polyline_geometry(figure_params):
    p = figure_params
    poly = boundary_polyline(p)
    g = poly.gamma
    sc = scale(p)
    assert is_simple(g)
    assert winding_number(g) == 1
    assert min_turn_offset(g) >= -1e-9 * sc
    assert point_strictly_inside_convex(g, 0j)
    # conjugate symmetry: theta grid is symmetric apart from the endpoint pi
    inner = np.abs(poly.theta) < math.pi
    by_theta = dict(zip(np.round(poly.theta[inner], 12), g[inner]))
    for t, v in zip(poly.theta[inner], g[inner]):
        assert abs(by_theta[round(-t, 12)] - v.conjugate()) <= 1e-12 * sc


def test_mixed_arc_kinds():
    p = FIGURE_PARAMS["mixed"]
    th0 = classify_regime(p).theta0
    poly = boundary_polyline(p)
    for bp in poly.points:
        if abs(bp.theta) < th0:
            assert bp.arc_kind is ArcKind.CIRCULAR
        else:
            assert bp.arc_kind is ArcKind.CS
    assert th0 in poly.theta and -th0 in poly.theta


def test_mixed_arcs_meet_at_theta0():
    p = FIGURE_PARAMS["mixed"]
    th0 = classify_regime(p).theta0
    k = 1 / (2 * p.r**2 * (1 - p.r**2) ** 2)
    for t in (th0, -th0):
        circ = k * ((1 + 4 * (p.r**2 - p.s**2)) * p.r * cmath.exp(1j * t) - p.s)
        z0 = (p.r * cmath.exp(1j * t) - p.s) / (2 * (p.r**2 - p.s**2))
        cs = amplitude(p) * c_s(p, z0)
        assert abs(circ - cs) <= 1e-10
        assert abs(gamma(p, t).gamma - cs) <= 1e-10


def test_first_derivative_disk():
    d = first_derivative_disk(0.3 + 0.4j, 0)
    assert d.center == 0 and d.radius == pytest.approx(0.5 / 0.75)
    d = first_derivative_disk(0.5, 0.25)
    assert d.center == pytest.approx(0.5) and d.radius == pytest.approx(0.5, rel=1e-15)
    assert first_derivative_disk(0.5, 0.5 - 1e-9).radius < 1e-8
    with pytest.raises(DomainError):
        first_derivative_disk(0.5, 0.6)
    with pytest.raises(DomainError):
        first_derivative_disk(0, 0)


def test_rogosinski_disk():
    d = rogosinski_disk(0.6j, 0)
    assert d.center == 0 and d.radius == pytest.approx(0.36)
    mu = cmath.exp(0.7j)
    d = rogosinski_disk(0.6j, mu)
    assert d.radius == pytest.approx(0, abs=1e-15) and d.center == pytest.approx(0.6j * mu)
    d = rogosinski_disk(0.5, 0.5)
    assert d.center == pytest.approx(0.2, rel=1e-15) and d.radius == pytest.approx(0.2, rel=1e-15)
    with pytest.raises(DomainError):
        rogosinski_disk(0.5, 1.1)


@given(st.floats(0.01, 0.99), thetas, st.floats(0, 1), st.floats(-math.pi, math.pi))
def test_rogosinski_inside_schwarz_disk(a, t, m, u):
    d = rogosinski_disk(a * cmath.exp(1j * t), m * cmath.exp(1j * u))
    assert abs(d.center) + d.radius <= a + 1e-12


@pytest.mark.parametrize(
    "s,shape",
    [(0.2, GammaCurveShape.CONVEX), (0.25, GammaCurveShape.CONVEX), (0.3, GammaCurveShape.SMOOTH_NON_CONVEX),
     (0.5, GammaCurveShape.CUSP), (0.7, GammaCurveShape.SELF_INTERSECTING)],
)
def test_gamma_curve_shapes(s, shape):
    res = classify_gamma_curve(s)
    assert res.shape is shape
    w = res.witness
    if shape is GammaCurveShape.CONVEX:
        assert w["min_curvature"] >= 0
    elif shape is GammaCurveShape.SMOOTH_NON_CONVEX:
        assert w["min_curvature"] < 0 and w["min_speed"] > 0
    elif shape is GammaCurveShape.CUSP:
        assert w["derivative_at_1"] == 0 and w["min_speed"] < 1e-12
    else:
        assert abs(w["point"] - w["point_conj"]) < 1e-14
        assert w["pair"][0] != w["pair"][1]


def test_gamma_curve_curvature_formula_against_finite_differences():
    s, t, h = 0.37, 0.4, 1e-4

    def c(u):
        z = cmath.exp(1j * u)
        return z * (1 - s * z)

    d1 = (c(t + h) - c(t - h)) / (2 * h)
    d2 = (c(t + h) - 2 * c(t) + c(t - h)) / h**2
    assert (d1.conjugate() * d2).imag == pytest.approx(1 + 8 * s * s - 6 * s * math.cos(t), rel=1e-6)
