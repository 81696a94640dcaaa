import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hypercam import (
    HPoint,
    UwParams,
    Viewport,
    camera_from_span,
    dist,
    hyperbolic_dist_from_uw,
    pseudosphere,
    rho_from_theta,
    screen_point,
    theta_from_rho,
    uw_dist_from_hyperbolic,
    v_to_w,
    w_to_v,
    world_point,
)
from oracles import dist_oracle, points


class TestUwCompat:
    def test_right_angle_at_sqrt2(self):
        assert theta_from_rho(math.sqrt(2.0)) == pytest.approx(math.pi / 2, abs=1e-15)
        assert rho_from_theta(math.pi / 2) == pytest.approx(math.sqrt(2.0), rel=1e-15)

    @given(st.floats(0.05, 3.0))
    def test_theta_rho_inverse(self, rho):
        assert rho_from_theta(theta_from_rho(rho)) == pytest.approx(rho, rel=1e-12)

    def test_w_scaling(self):
        assert v_to_w(3.0, 2.0) == 12.0
        assert w_to_v(12.0, 2.0) == 3.0

    def test_default_params_give_right_angle(self):
        p = UwParams()
        assert theta_from_rho(p.rho) == pytest.approx(math.pi / 2, abs=1e-15)

    @given(
        st.floats(0.8, 2.0),
        points(1),
        points(1),
    )
    def test_uw_distance_equivalence(self, rho, x, y):
        # the u,w metric |(rho^2 du, dw)| / (rho^2 w) is the standard
        # half-plane metric in coordinates (rho^2 u, w), shrunk by rho^2;
        # measure it there with the independent chord-form oracle
        r2 = rho * rho
        xw = HPoint(r2 * x.u, v_to_w(x.v, rho))
        yw = HPoint(r2 * y.u, v_to_w(y.v, rho))
        sigma = dist_oracle(xw, yw) / r2
        d = dist(x, y)
        assert hyperbolic_dist_from_uw(sigma, rho) == pytest.approx(
            d, rel=1e-9, abs=1e-12
        )
        assert uw_dist_from_hyperbolic(d, rho) == pytest.approx(
            sigma, rel=1e-9, abs=1e-12
        )

    def test_invalid_params(self):
        with pytest.raises(ValueError):
            UwParams(rho=0.0)
        with pytest.raises(ValueError):
            UwParams(rho=-1.0)
        with pytest.raises(ValueError):
            theta_from_rho(-0.5)
        with pytest.raises(ValueError):
            rho_from_theta(math.pi)


class TestViewport:
    def test_half_width_90_degrees(self):
        vp = Viewport((math.pi / 2,))
        assert vp.r_half[0] == pytest.approx(1.0, rel=1e-15)
        assert vp.dim == 1

    def test_two_axis(self):
        vp = Viewport((math.pi / 2, math.pi / 3))
        assert vp.dim == 2
        assert vp.r_half[1] == pytest.approx(math.tan(math.pi / 6), rel=1e-14)

    def test_angle_validation(self):
        with pytest.raises(ValueError):
            Viewport((0.0,))
        with pytest.raises(ValueError):
            Viewport((math.pi,))
        with pytest.raises(ValueError):
            Viewport(())
        with pytest.raises(ValueError):
            Viewport((1.0, 1.0, 1.0))

    def test_world_screen_roundtrip(self):
        cam = HPoint([3.0, -1.0], 2.0)
        r = np.array([0.25, -0.75])
        p = world_point(cam, r)
        assert np.allclose(p, cam.v * r + cam.u)
        assert np.allclose(screen_point(cam, p), r, atol=1e-15)

    def test_screen_center_is_footprint(self):
        cam = HPoint([5.0], 0.5)
        assert world_point(cam, np.zeros(1))[0] == 5.0

    @given(points(2), st.floats(-1.0, 1.0), st.floats(-1.0, 1.0))
    def test_roundtrip_property(self, cam, r1, r2):
        r = np.array([r1, r2])
        assert np.allclose(screen_point(cam, world_point(cam, r)), r, atol=1e-9)


class TestCameraFromSpan:
    def test_exact_fit_one_axis(self):
        vp = Viewport((math.pi / 2,))
        cam = camera_from_span(np.array([2.0]), np.array([6.0]), vp)
        assert cam.u[0] == pytest.approx(4.0)
        assert cam.v == pytest.approx(2.0)
        # edges land exactly on the viewport edges
        assert world_point(cam, vp.r_half)[0] == pytest.approx(6.0)
        assert world_point(cam, -vp.r_half)[0] == pytest.approx(2.0)

    def test_limiting_axis_wins(self):
        vp = Viewport((math.pi / 2, math.pi / 2))
        cam = camera_from_span(
            np.array([0.0, 0.0]), np.array([10.0, 2.0]), vp
        )
        assert cam.v == pytest.approx(5.0)
        # the wide axis fits exactly, the narrow one fits inside
        r = screen_point(cam, np.array([10.0, 2.0]))
        assert r[0] == pytest.approx(1.0)
        assert abs(r[1]) <= 1.0

    def test_degenerate_span_rejected(self):
        vp = Viewport((math.pi / 2,))
        with pytest.raises(ValueError):
            camera_from_span(np.array([1.0]), np.array([1.0]), vp)
        with pytest.raises(ValueError):
            camera_from_span(np.array([2.0]), np.array([1.0]), vp)

    @given(
        st.floats(-50.0, 50.0),
        st.floats(0.01, 40.0),
        st.floats(0.3, 2.8),
    )
    def test_span_always_visible(self, lo, width, theta):
        vp = Viewport((theta,))
        cam = camera_from_span(np.array([lo]), np.array([lo + width]), vp)
        r_lo = screen_point(cam, np.array([lo]))
        r_hi = screen_point(cam, np.array([lo + width]))
        assert abs(r_lo[0]) <= vp.r_half[0] * (1 + 1e-9)
        assert abs(r_hi[0]) <= vp.r_half[0] * (1 + 1e-9)


class TestPseudosphere:
    def test_rim_at_unit_altitude(self):
        x, y, z = pseudosphere(0.0, 1.0)
        assert x == pytest.approx(1.0)
        assert y == pytest.approx(0.0)
        assert z == pytest.approx(0.0)

    def test_wraps_by_angle(self):
        x, y, _ = pseudosphere(math.pi / 2, 1.0)
        assert x == pytest.approx(0.0, abs=1e-15)
        assert y == pytest.approx(1.0)

    def test_radius_shrinks_with_altitude(self):
        _, _, z1 = pseudosphere(0.0, 2.0)
        x2, _, z2 = pseudosphere(0.0, 8.0)
        assert 0 < z1 < z2
        assert x2 == pytest.approx(1.0 / 8.0)

    def test_below_rim_rejected(self):
        with pytest.raises(ValueError):
            pseudosphere(0.0, 0.5)

    @given(st.floats(-10.0, 10.0), st.floats(1.0, 50.0))
    def test_surface_equation(self, u, v):
        x, y, z = pseudosphere(u, v)
        assert math.hypot(x, y) == pytest.approx(1.0 / v, rel=1e-12)
        t = math.acosh(v)
        assert z == pytest.approx(t - math.tanh(t), rel=1e-9, abs=1e-12)
