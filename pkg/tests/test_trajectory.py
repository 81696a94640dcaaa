import math

import numpy as np
import pytest

from hypercam import (
    HPoint,
    Trajectory,
    TrajectoryFormatError,
    read_trajectory_csv,
    write_trajectory_csv,
)


def make_traj(m=5, dim=1, period=0.1):
    u = np.linspace(0.0, 1.0, m * dim).reshape(m, dim)
    v = np.linspace(1.0, 2.0, m)
    return Trajectory(period, u, v)


class TestTrajectory:
    def test_basics(self):
        traj = make_traj(m=7, period=0.25)
        assert len(traj) == 7
        assert traj.dim == 1
        assert traj.duration == pytest.approx(1.5)
        assert np.allclose(traj.times, 0.25 * np.arange(7))

    def test_point_accessor(self):
        traj = make_traj()
        p = traj.point(2)
        assert isinstance(p, HPoint)
        assert p.u[0] == traj.u[2, 0] and p.v == traj.v[2]

    def test_from_points_roundtrip(self):
        pts = [HPoint([0.0, 1.0], 1.0), HPoint([1.0, 0.5], 2.0)]
        traj = Trajectory.from_points(0.5, pts)
        assert traj.dim == 2 and len(traj) == 2
        assert traj.point(1) == pts[1]

    def test_1d_u_promoted_to_column(self):
        traj = Trajectory(0.1, np.array([0.0, 1.0]), np.array([1.0, 1.0]))
        assert traj.u.shape == (2, 1)

    def test_validation(self):
        with pytest.raises(ValueError):
            Trajectory(0.0, np.zeros((2, 1)), np.ones(2))
        with pytest.raises(ValueError):
            Trajectory(0.1, np.zeros((2, 3)), np.ones(2))
        with pytest.raises(ValueError):
            Trajectory(0.1, np.zeros((2, 1)), np.ones(3))
        with pytest.raises(ValueError):
            Trajectory(0.1, np.zeros((2, 1)), np.array([1.0, 0.0]))
        with pytest.raises(ValueError):
            Trajectory(0.1, np.array([[0.0], [math.inf]]), np.ones(2))

    def test_derivatives_both_or_neither(self):
        with pytest.raises(ValueError):
            Trajectory(
                0.1, np.zeros((2, 1)), np.ones(2), du=np.zeros((2, 1)), dv=None
            )

    def test_provided_derivatives_returned_verbatim(self):
        du = np.full((3, 1), 2.0)
        dv = np.full(3, -1.0)
        traj = Trajectory(0.1, np.zeros((3, 1)), np.ones(3), du=du, dv=dv)
        got_du, got_dv = traj.derivatives()
        assert np.array_equal(got_du, du) and np.array_equal(got_dv, dv)

    def test_finite_difference_fallback_exact_on_quadratic(self):
        # central differences are exact for quadratics at interior samples
        T = 0.1
        t = T * np.arange(6)
        u = 3.0 * t * t - t
        traj = Trajectory(T, u, np.ones(6))
        du, dv = traj.derivatives()
        assert np.allclose(du[1:-1, 0], 6.0 * t[1:-1] - 1.0, atol=1e-12)
        assert np.allclose(dv, 0.0)
        # one-sided ends are exact for linears
        lin = Trajectory(T, 5.0 * t, np.ones(6))
        dl, _ = lin.derivatives()
        assert np.allclose(dl[:, 0], 5.0, atol=1e-12)


class TestCsv:
    def test_roundtrip_bit_exact(self, tmp_path):
        rng = np.random.default_rng(7)
        u = rng.standard_normal((9, 2))
        v = np.exp(rng.standard_normal(9))
        traj = Trajectory(1.0 / 60.0, u, v)
        path = tmp_path / "traj.csv"
        write_trajectory_csv(traj, path)
        back = read_trajectory_csv(path)
        assert back.period == pytest.approx(traj.period, rel=1e-12)
        assert np.array_equal(back.u, traj.u)
        assert np.array_equal(back.v, traj.v)

    def test_header_1d(self, tmp_path):
        path = tmp_path / "t.csv"
        write_trajectory_csv(make_traj(), path)
        assert path.read_text().splitlines()[0] == "t,u1,v"

    def test_header_2d(self, tmp_path):
        traj = Trajectory(0.1, np.zeros((2, 2)), np.ones(2))
        path = tmp_path / "t.csv"
        write_trajectory_csv(traj, path)
        assert path.read_text().splitlines()[0] == "t,u1,u2,v"

    def test_bad_header(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("time,x,z\n0,0,1\n")
        with pytest.raises(TrajectoryFormatError, match="line 1"):
            read_trajectory_csv(path)

    def test_field_count_error_names_line(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("t,u1,v\n0,0,1\n0.1,1\n")
        with pytest.raises(TrajectoryFormatError, match="line 3"):
            read_trajectory_csv(path)

    def test_non_numeric_error_names_line(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("t,u1,v\n0,0,1\n0.1,oops,1\n")
        with pytest.raises(TrajectoryFormatError, match="line 3"):
            read_trajectory_csv(path)

    def test_non_uniform_times_rejected(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("t,u1,v\n0,0,1\n0.1,0,1\n0.3,0,1\n")
        with pytest.raises(TrajectoryFormatError, match="uniform"):
            read_trajectory_csv(path)

    def test_decreasing_times_rejected(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("t,u1,v\n0,0,1\n-0.1,0,1\n")
        with pytest.raises(TrajectoryFormatError):
            read_trajectory_csv(path)

    def test_nonpositive_altitude_rejected(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("t,u1,v\n0,0,1\n0.1,0,-1\n")
        with pytest.raises(TrajectoryFormatError):
            read_trajectory_csv(path)

    def test_single_sample_rejected(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("t,u1,v\n0,0,1\n")
        with pytest.raises(TrajectoryFormatError, match="2 samples"):
            read_trajectory_csv(path)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("")
        with pytest.raises(TrajectoryFormatError, match="empty"):
            read_trajectory_csv(path)

    def test_blank_lines_skipped(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("t,u1,v\n0,0,1\n\n0.1,1,2\n\n")
        traj = read_trajectory_csv(path)
        assert len(traj) == 2 and traj.v[1] == 2.0
