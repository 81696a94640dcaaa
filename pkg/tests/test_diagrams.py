import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hypercam import (
    DiagramConfig,
    HPoint,
    Pathline,
    StepSignal,
    Trajectory,
    discontinuity_scan,
    grad_mag,
    pathline_membership,
    pathlines,
    pow2ceil,
    render_worldscreen_svg,
    rms_flow,
    rms_flow_series,
    screen_bounds_series,
    tracked_screen_series,
    velocity_jumps,
)


def static_traj(m=5, u=0.0, v=1.0, period=0.1):
    return Trajectory(
        period,
        np.full((m, 1), u),
        np.full(m, v),
        du=np.zeros((m, 1)),
        dv=np.zeros(m),
    )


class TestPow2Ceil:
    @pytest.mark.parametrize(
        "x,expect",
        [
            (3.0, 4.0),
            (4.0, 4.0),
            (0.3, 0.5),
            (1.0, 1.0),
            (0.25, 0.25),
            (1.0e-3, 2.0**-9),
            (5.1, 8.0),
        ],
    )
    def test_worked_values(self, x, expect):
        assert pow2ceil(x) == expect

    def test_validation(self):
        for bad in (0.0, -1.0, math.inf, math.nan):
            with pytest.raises(ValueError):
                pow2ceil(bad)

    @given(st.floats(1e-20, 1e20))
    def test_tight_power_of_two(self, x):
        q = pow2ceil(x)
        m, _ = math.frexp(q)
        assert m == 0.5  # exact power of two
        assert q >= x
        assert q / 2.0 < x


class TestGradMag:
    def test_static_is_altitude(self):
        assert grad_mag(2.0, 0.0, 0.0, 0.7) == 2.0

    def test_pan_and_zoom_terms(self):
        assert grad_mag(1.0, 1.0, 1.0, 1.0) == pytest.approx(math.sqrt(5.0))
        # pure zoom contributes r*v'
        assert grad_mag(1.0, 2.0, 0.0, 0.5) == pytest.approx(math.sqrt(2.0))


class TestPathlines:
    def test_static_unit_camera(self):
        # P = pow2ceil(0.25) = 0.25; every multiple in [-1, 1] survives
        lines = pathlines(static_traj(m=6), DiagramConfig())
        values = [pl.value for pl in lines.pathlines]
        assert values == [0.25 * k for k in range(-4, 5)]
        for pl in lines.pathlines:
            assert pl.indices.tolist() == list(range(6))
            assert np.allclose(pl.r, pl.value)

    def test_bounded_count_across_zoom_levels(self):
        # candidate spacing tracks the altitude, so the line count in view
        # is the same at any zoom depth
        for v in (2.0**-12, 1.0, 2.0**13):
            lines = pathlines(static_traj(v=v), DiagramConfig())
            assert len(lines) == 9

    def test_value_spacing_doubles_with_altitude(self):
        vals1 = [pl.value for pl in pathlines(static_traj(v=1.0), DiagramConfig()).pathlines]
        vals2 = [pl.value for pl in pathlines(static_traj(v=2.0), DiagramConfig()).pathlines]
        assert vals2 == [2.0 * p for p in vals1]

    def test_membership_is_exact_no_epsilon(self):
        # p = k*P and the divisor are both powers of two scaled by ints, so
        # the test is exact float arithmetic
        assert pathline_membership(0.75, 0.75, 1.0, 0.0, 0.0, 0.25)
        assert not pathline_membership(0.25, 0.25, 1.0, 0.0, 0.0, 0.5)
        assert pathline_membership(0.0, 0.0, 1.0, 123.0, -7.0, 0.25)

    def test_fast_motion_thins_lines(self):
        # high onscreen speed doubles the local divisor, dropping odd lines
        survives = [
            pathline_membership(0.25 * k, 0.0, 1.0, 0.0, 5.0, 0.25)
            for k in range(-4, 5)
        ]
        # q = pow2ceil(0.25 * hypot(1, 5)) = 2: only multiples of 2 survive
        assert survives == [
            (0.25 * k / 2.0).is_integer() for k in range(-4, 5)
        ]

    def test_leave_and_return_splits_runs(self):
        # the world value 0 leaves the view while the camera pans away and
        # returns; its trace must split into two polylines
        u = np.array([0.0, 0.0, 3.0, 3.0, 0.0, 0.0])
        m = u.size
        traj = Trajectory(0.1, u, np.ones(m), du=np.zeros((m, 1)), dv=np.zeros(m))
        lines = pathlines(traj, DiagramConfig())
        zero_runs = [pl for pl in lines.pathlines if pl.value == 0.0]
        assert len(zero_runs) == 2
        assert zero_runs[0].indices.tolist() == [0, 1]
        assert zero_runs[1].indices.tolist() == [4, 5]

    def test_screen_positions(self):
        traj = Trajectory(
            0.1,
            np.array([0.5, 0.5]),
            np.array([2.0, 2.0]),
            du=np.zeros((2, 1)),
            dv=np.zeros(2),
        )
        lines = pathlines(traj, DiagramConfig())
        for pl in lines.pathlines:
            assert np.allclose(pl.r, (pl.value - 0.5) / 2.0)
            assert np.all(np.abs(pl.r) <= 1.0 + 1e-12)

    def test_deterministic_and_ordered(self):
        traj = Trajectory(
            0.05,
            np.linspace(0.0, 2.0, 20),
            np.linspace(1.0, 0.5, 20),
        )
        a = pathlines(traj, DiagramConfig())
        b = pathlines(traj, DiagramConfig())
        assert len(a) == len(b)
        for pa, pb in zip(a.pathlines, b.pathlines):
            assert pa.value == pb.value
            assert np.array_equal(pa.indices, pb.indices)
            assert np.array_equal(pa.r, pb.r)
        starts = [(pl.value, pl.indices[0]) for pl in a.pathlines]
        assert starts == sorted(starts)

    def test_validation(self):
        with pytest.raises(ValueError):
            pathlines(static_traj(m=1), DiagramConfig())
        with pytest.raises(ValueError):
            pathlines(static_traj(), DiagramConfig(), axis=1)
        with pytest.raises(ValueError):
            Pathline(0.0, np.array([0, 2]), np.array([0.0, 0.0]))
        with pytest.raises(ValueError):
            Pathline(0.0, np.array([0]), np.array([]))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            DiagramConfig(alpha_iso=0.0)
        with pytest.raises(ValueError):
            DiagramConfig(r_lo=1.0, r_hi=-1.0)
        with pytest.raises(ValueError):
            DiagramConfig(width=10)


class TestScreenBounds:
    def test_values(self):
        traj = Trajectory(0.1, np.array([1.0, 2.0]), np.array([1.0, 4.0]))
        center, lower, upper = screen_bounds_series(traj, 0.5)
        assert np.array_equal(center[:, 0], [1.0, 2.0])
        assert np.array_equal(lower[:, 0], [0.5, 0.0])
        assert np.array_equal(upper[:, 0], [1.5, 4.0])

    def test_per_axis_half_extent(self):
        traj = Trajectory(0.1, np.zeros((2, 2)), np.array([2.0, 2.0]))
        _, lower, upper = screen_bounds_series(traj, [1.0, 0.5])
        assert np.array_equal(upper[0], [2.0, 1.0])
        assert np.array_equal(lower[0], [-2.0, -1.0])


class TestRmsFlow:
    def test_pure_pan(self):
        m = 3
        traj = Trajectory(
            0.1,
            np.zeros(m),
            np.full(m, 2.0),
            du=np.full((m, 1), 3.0),
            dv=np.zeros(m),
        )
        assert rms_flow(traj, 1, DiagramConfig()) == pytest.approx(1.5, rel=1e-12)

    def test_pure_zoom_is_inv_sqrt3(self):
        m = 3
        v = np.array([1.0, 2.0, 4.0])
        traj = Trajectory(0.1, np.zeros(m), v, du=np.zeros((m, 1)), dv=v.copy())
        for i in range(m):
            assert rms_flow(traj, i, DiagramConfig()) == pytest.approx(
                1.0 / math.sqrt(3.0), rel=1e-12
            )

    def test_series_shape(self):
        traj = static_traj(m=7)
        series = rms_flow_series(traj, DiagramConfig())
        assert series.shape == (7,)
        assert np.all(series == 0.0)

    @given(
        st.floats(-5.0, 5.0),
        st.floats(-5.0, 5.0),
        st.floats(-1.5, 0.5),
        st.floats(0.6, 1.5),
    )
    def test_closed_form_matches_quadrature(self, a, b, lo, span):
        # independent check: numerically average the squared slope
        # (a + b*r)^2 over [lo, hi]
        hi = lo + span
        m = 3
        v0 = 2.0
        traj = Trajectory(
            0.1,
            np.zeros(m),
            np.full(m, v0),
            du=np.full((m, 1), a * v0),
            dv=np.full(m, b * v0),
        )
        cfg = DiagramConfig(r_lo=lo, r_hi=hi)
        r = np.linspace(lo, hi, 20001)
        numeric = math.sqrt(np.trapezoid((a + b * r) ** 2, r) / (hi - lo))
        assert rms_flow(traj, 1, cfg) == pytest.approx(numeric, rel=1e-6, abs=1e-9)

    def test_two_axes_add_in_quadrature(self):
        m = 3
        traj = Trajectory(
            0.1,
            np.zeros((m, 2)),
            np.ones(m),
            du=np.tile([3.0, 4.0], (m, 1)),
            dv=np.zeros(m),
        )
        assert rms_flow(traj, 1, DiagramConfig()) == pytest.approx(5.0, rel=1e-12)


class TestTrackedPoint:
    def test_series(self):
        traj = Trajectory(0.1, np.array([0.0, 1.0]), np.array([1.0, 2.0]))
        r = tracked_screen_series(traj)
        assert np.allclose(r[:, 0], [0.0, -0.5])

    def test_uniform_pan_has_no_jumps(self):
        t = 0.1 * np.arange(30)
        traj = Trajectory(0.1, 0.7 * t, np.ones(30))
        jumps, speeds = velocity_jumps(traj)
        assert np.allclose(jumps, 0.0, atol=1e-12)
        assert np.allclose(speeds, 0.7, atol=1e-12)

    def test_minimum_samples(self):
        with pytest.raises(ValueError):
            velocity_jumps(Trajectory(0.1, np.zeros(2), np.ones(2)))


class TestDiscontinuityScan:
    @staticmethod
    def piecewise_pan(slopes, samples_per_seg=10, period=0.1):
        u = [0.0]
        for s in slopes:
            for _ in range(samples_per_seg):
                u.append(u[-1] + s * period)
        u = np.array(u)
        return Trajectory(period, u, np.ones(u.size))

    def test_abrupt_stop_detected_once(self):
        traj = self.piecewise_pan([1.0, 0.0])
        found = discontinuity_scan(traj, 0.2)
        assert len(found) == 1
        t, jump = found[0]
        assert t == pytest.approx(1.0, abs=1e-9)
        assert jump == pytest.approx(1.0, rel=1e-9)

    def test_static_camera_is_quiet(self):
        assert discontinuity_scan(static_traj(m=40), 0.2) == []

    def test_smooth_motion_is_quiet(self):
        # a geodesic flight sampled densely has tiny velocity changes
        from hypercam import gerp

        A, B = HPoint([0.0], 1.0), HPoint([2.0], 1.0)
        pts = [gerp(A, B, k / 120.0) for k in range(121)]
        traj = Trajectory.from_points(1.0 / 60.0, pts)
        assert discontinuity_scan(traj, 0.2) == []

    def test_scale_is_local(self):
        # a moderate jump near slow motion is flagged; widening the window
        # to include a much faster segment masks it
        traj = self.piecewise_pan([0.1, 0.2, 10.0])
        near = discontinuity_scan(traj, 0.2, window=3)
        assert any(abs(t - 1.0) < 1e-9 for t, _ in near)
        wide = discontinuity_scan(traj, 0.2, window=1000)
        assert not any(abs(t - 1.0) < 1e-9 for t, _ in wide)
        assert any(abs(t - 2.0) < 1e-9 for t, _ in wide)

    def test_speed_floor_suppresses_noise(self):
        # micro-jumps around a parked camera stay below the floor
        u = np.zeros(40)
        u[20] = 1e-9  # one-sample wiggle
        traj = Trajectory(0.1, u, np.ones(40))
        assert discontinuity_scan(traj, 0.2, speed_floor=1.0) == []

    def test_threshold_validation(self):
        with pytest.raises(ValueError):
            discontinuity_scan(static_traj(), 0.0)

    def test_results_in_time_order(self):
        traj = self.piecewise_pan([1.0, -1.0, 1.0])
        found = discontinuity_scan(traj, 0.2)
        times = [t for t, _ in found]
        assert times == sorted(times)
        assert len(found) == 2


class TestSvg:
    def make_traj(self):
        t = np.linspace(0.0, 1.0, 31)
        return Trajectory(1.0 / 30.0, 2.0 * t, 1.0 + t)

    def test_well_formed(self):
        svg = render_worldscreen_svg(self.make_traj(), DiagramConfig())
        assert svg.startswith("<svg ")
        assert svg.rstrip().endswith("</svg>")
        assert svg.count("<svg") == 1
        import xml.etree.ElementTree as ET

        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")

    def test_deterministic(self):
        a = render_worldscreen_svg(self.make_traj(), DiagramConfig())
        b = render_worldscreen_svg(self.make_traj(), DiagramConfig())
        assert a == b

    def test_panels_and_classes(self):
        svg = render_worldscreen_svg(self.make_traj(), DiagramConfig())
        assert svg.count('class="bound"') == 2
        assert svg.count('class="center"') == 1
        assert 'class="pathline"' in svg
        assert "world span" in svg and "screen r" in svg
        assert 'class="target"' not in svg

    def test_target_overlay(self):
        sig = StepSignal(
            ((0.0, HPoint([0.0], 1.0)), (0.5, HPoint([2.0], 2.0)))
        )
        svg = render_worldscreen_svg(self.make_traj(), DiagramConfig(), target=sig)
        assert svg.count('class="target"') == 2

    def test_target_dim_mismatch(self):
        sig = StepSignal(((0.0, HPoint([0.0, 0.0], 1.0)),))
        with pytest.raises(ValueError):
            render_worldscreen_svg(self.make_traj(), DiagramConfig(), target=sig)

    def test_2d_doubles_panels(self):
        t = np.linspace(0.0, 1.0, 11)
        traj = Trajectory(0.1, np.stack([t, -t], axis=1), 1.0 + t)
        svg = render_worldscreen_svg(traj, DiagramConfig())
        assert svg.count('class="bound"') == 4
        assert "axis 1" in svg and "axis 2" in svg

    def test_time_labels(self):
        svg = render_worldscreen_svg(self.make_traj(), DiagramConfig())
        assert "t = 0 s" in svg
        assert "t = 1 s" in svg
