"""Uniformly sampled camera trajectories and their CSV interchange format."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import HPoint

__all__ = ["Trajectory", "write_trajectory_csv", "read_trajectory_csv", "TrajectoryFormatError"]


class TrajectoryFormatError(ValueError):
    """Malformed trajectory CSV."""


@dataclass
class Trajectory:
    """Camera samples (u[i], v[i]) at t = i * period, optionally with derivatives.

    du/dv, when present, are per-sample time derivatives in world units per
    second.  Consumers that need derivatives and find none fall back to
    finite differences (central, one-sided at the ends).
    """

    period: float
    u: np.ndarray
    v: np.ndarray
    du: np.ndarray | None = None
    dv: np.ndarray | None = None

    def __post_init__(self):
        self.period = float(self.period)
        if not (math.isfinite(self.period) and self.period > 0.0):
            raise ValueError(f"period must be finite and positive, got {self.period!r}")
        self.u = np.asarray(self.u, dtype=float)
        if self.u.ndim == 1:
            self.u = self.u[:, None]
        self.v = np.asarray(self.v, dtype=float).reshape(-1)
        if self.u.ndim != 2 or self.u.shape[1] not in (1, 2):
            raise ValueError(f"u must be (m, 1) or (m, 2), got {self.u.shape}")
        if self.u.shape[0] != self.v.size:
            raise ValueError("u and v sample counts differ")
        if not (np.all(np.isfinite(self.u)) and np.all(np.isfinite(self.v))):
            raise ValueError("trajectory samples must be finite")
        if not np.all(self.v > 0.0):
            raise ValueError("altitude must stay positive along the trajectory")
        for name in ("du", "dv"):
            arr = getattr(self, name)
            if arr is not None:
                arr = np.asarray(arr, dtype=float)
                if name == "du" and arr.ndim == 1:
                    arr = arr[:, None]
                setattr(self, name, arr)
        if (self.du is None) != (self.dv is None):
            raise ValueError("provide both derivative series or neither")
        if self.du is not None:
            if self.du.shape != self.u.shape or self.dv.shape != self.v.shape:
                raise ValueError("derivative series must match sample shapes")

    def __len__(self) -> int:
        return self.v.size

    @property
    def dim(self) -> int:
        return self.u.shape[1]

    @property
    def duration(self) -> float:
        return (len(self) - 1) * self.period

    @property
    def times(self) -> np.ndarray:
        return np.arange(len(self)) * self.period

    def point(self, i: int) -> HPoint:
        return HPoint(self.u[i], self.v[i])

    @classmethod
    def from_points(cls, period: float, points) -> "Trajectory":
        pts = list(points)
        if not pts:
            raise ValueError("empty trajectory")
        u = np.stack([p.u for p in pts])
        v = np.array([p.v for p in pts])
        return cls(period, u, v)

    def derivatives(self) -> tuple[np.ndarray, np.ndarray]:
        """Provided derivative series, or finite-difference approximations."""
        if self.du is not None:
            return self.du, self.dv
        if len(self) < 2:
            raise ValueError("need at least 2 samples to differentiate")
        return _finite_diff(self.u, self.period), _finite_diff(self.v, self.period)


def _finite_diff(arr: np.ndarray, period: float) -> np.ndarray:
    d = np.empty_like(arr)
    d[1:-1] = (arr[2:] - arr[:-2]) / (2.0 * period)
    d[0] = (arr[1] - arr[0]) / period
    d[-1] = (arr[-1] - arr[-2]) / period
    return d


def write_trajectory_csv(traj: Trajectory, path) -> None:
    """Write `t,u1[,u2],v` rows at 17 significant digits (lossless roundtrip)."""
    cols = ["t"] + [f"u{i + 1}" for i in range(traj.dim)] + ["v"]
    times = traj.times
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(cols) + "\n")
        for i in range(len(traj)):
            row = [times[i], *traj.u[i], traj.v[i]]
            fh.write(",".join(format(val, ".17g") for val in row) + "\n")


def read_trajectory_csv(path) -> Trajectory:
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise TrajectoryFormatError(f"{path}: empty file")
    header = lines[0].split(",")
    if header not in (["t", "u1", "v"], ["t", "u1", "u2", "v"]):
        raise TrajectoryFormatError(
            f"{path}: line 1: header must be t,u1[,u2],v, got {lines[0]!r}"
        )
    width = len(header)
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != width:
            raise TrajectoryFormatError(
                f"{path}: line {lineno}: expected {width} fields, got {len(parts)}"
            )
        try:
            rows.append([float(p) for p in parts])
        except ValueError:
            raise TrajectoryFormatError(
                f"{path}: line {lineno}: non-numeric field in {line!r}"
            ) from None
    if len(rows) < 2:
        raise TrajectoryFormatError(f"{path}: need at least 2 samples")
    data = np.array(rows)
    t = data[:, 0]
    steps = np.diff(t)
    period = float(steps[0])
    if period <= 0.0 or not np.allclose(steps, period, rtol=1e-9, atol=1e-12):
        raise TrajectoryFormatError(f"{path}: time column must be uniformly increasing")
    try:
        return Trajectory(period, data[:, 1:-1], data[:, -1])
    except ValueError as exc:
        raise TrajectoryFormatError(f"{path}: {exc}") from None
