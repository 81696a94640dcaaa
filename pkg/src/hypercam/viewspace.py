"""Bridges between the half-space camera model, u,w view coordinates, and the screen.

The classic u,w formulation of zoom-pan animation tracks a pan position u
and a zoom-out measure w with a trade-off parameter rho; it coincides with
the hyperbolic model up to the change of coordinates w = rho^2 v and a
global rescaling of path length by rho^2.  The camera's angle of view
theta = 2 arctan(rho^2 / 2) carries the same trade-off on the screen side:
a view (u, v) shows the world interval u +/- v*tan(theta/2) per axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import HPoint

__all__ = [
    "UwParams",
    "Viewport",
    "v_to_w",
    "w_to_v",
    "hyperbolic_dist_from_uw",
    "uw_dist_from_hyperbolic",
    "theta_from_rho",
    "rho_from_theta",
    "world_point",
    "screen_point",
    "camera_from_span",
    "pseudosphere",
]


def theta_from_rho(rho: float) -> float:
    """Angle of view (radians, in (0, pi)) for trade-off parameter rho."""
    rho = float(rho)
    if not (math.isfinite(rho) and rho > 0.0):
        raise ValueError(f"rho must be finite and positive, got {rho!r}")
    return 2.0 * math.atan(rho * rho / 2.0)


def rho_from_theta(theta: float) -> float:
    theta = float(theta)
    if not (0.0 < theta < math.pi):
        raise ValueError(f"theta must lie in (0, pi), got {theta!r}")
    return math.sqrt(2.0 * math.tan(theta / 2.0))


@dataclass(frozen=True)
class UwParams:
    """u,w trade-off parameter; rho = sqrt(2) gives a 90 degree view angle."""

    rho: float = math.sqrt(2.0)

    def __post_init__(self):
        object.__setattr__(self, "rho", float(self.rho))
        if not (math.isfinite(self.rho) and self.rho > 0.0):
            raise ValueError(f"rho must be finite and positive, got {self.rho!r}")

    @property
    def theta(self) -> float:
        return theta_from_rho(self.rho)


def v_to_w(v: float, rho: float) -> float:
    if not v > 0.0:
        raise ValueError(f"altitude must be positive, got {v!r}")
    if not rho > 0.0:
        raise ValueError(f"rho must be positive, got {rho!r}")
    return rho * rho * v


def w_to_v(w: float, rho: float) -> float:
    if not w > 0.0:
        raise ValueError(f"w must be positive, got {w!r}")
    if not rho > 0.0:
        raise ValueError(f"rho must be positive, got {rho!r}")
    return w / (rho * rho)


def hyperbolic_dist_from_uw(sigma: float, rho: float) -> float:
    """Rescale a u,w path length sigma to hyperbolic distance: s = rho^2 sigma."""
    if not rho > 0.0:
        raise ValueError(f"rho must be positive, got {rho!r}")
    return rho * rho * float(sigma)


def uw_dist_from_hyperbolic(s: float, rho: float) -> float:
    if not rho > 0.0:
        raise ValueError(f"rho must be positive, got {rho!r}")
    return float(s) / (rho * rho)


@dataclass(frozen=True)
class Viewport:
    """Camera angle of view per screen axis: one angle for n=2, two for n=3.

    The derived half extent r_half = tan(theta/2) is the screen-space
    coordinate of the view edge; screen coordinates live in
    [-r_half, r_half] per axis.
    """

    theta: tuple[float, ...] = (math.pi / 2.0,)

    def __post_init__(self):
        angles = self.theta
        if isinstance(angles, (int, float)):
            angles = (float(angles),)
        angles = tuple(float(a) for a in angles)
        if len(angles) not in (1, 2):
            raise ValueError(f"viewport needs 1 or 2 angles, got {len(angles)}")
        for a in angles:
            if not (0.0 < a < math.pi):
                raise ValueError(f"theta must lie in (0, pi), got {a!r}")
        object.__setattr__(self, "theta", angles)

    @property
    def r_half(self) -> np.ndarray:
        return np.array([math.tan(a / 2.0) for a in self.theta])

    @property
    def dim(self) -> int:
        """Number of world axes shown (1 or 2)."""
        return len(self.theta)


def world_point(x: HPoint, r) -> np.ndarray:
    """Map screen coordinates r to world coordinates: p = v*r + u."""
    r = np.asarray(r, dtype=float)
    return x.v * r + x.u


def screen_point(x: HPoint, p) -> np.ndarray:
    """Map world coordinates p to screen coordinates: r = (p - u)/v."""
    p = np.asarray(p, dtype=float)
    return (p - x.u) / x.v


def camera_from_span(p_lo, p_hi, viewport: Viewport) -> HPoint:
    """Smallest camera view whose screen covers the world box [p_lo, p_hi].

    The footprint is the box midpoint; the altitude is the largest
    half-span / r_half over axes, so the whole box is visible (with slack
    on the other axis when the aspect does not match).
    """
    lo = np.asarray(p_lo, dtype=float).reshape(-1)
    hi = np.asarray(p_hi, dtype=float).reshape(-1)
    if lo.size != viewport.dim or hi.size != viewport.dim:
        raise ValueError(
            f"span has {lo.size}/{hi.size} components, viewport has {viewport.dim}"
        )
    if not np.all(lo < hi):
        raise ValueError(f"span must satisfy lo < hi per axis, got {lo} .. {hi}")
    u = 0.5 * (lo + hi)
    v = float(np.max(0.5 * (hi - lo) / viewport.r_half))
    return HPoint(u, v)


def pseudosphere(u: float, v: float) -> tuple[float, float, float]:
    """Embed a view (u, v), v >= 1, on the pseudosphere surface in 3-space.

    Returns ((cos u)/v, (sin u)/v, acosh(v) - tanh(acosh(v))).  The
    embedding is partial (undefined for v < 1) and periodic in u with
    period 2*pi, so distinct views can land on the same surface point.
    """
    u = float(u)
    v = float(v)
    if v < 1.0:
        raise ValueError(f"pseudosphere embedding requires v >= 1, got {v!r}")
    t = math.acosh(v)
    return (math.cos(u) / v, math.sin(u) / v, t - math.tanh(t))
