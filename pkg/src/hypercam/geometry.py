"""Poincare upper half-space kernel for camera zooming and panning.

A camera view over an n-1 dimensional document is a point of H^n
(n = 2 or 3): a footprint position ``u`` in world units plus a strictly
positive altitude ``v`` proportional to the visible world span.  Under the
metric ds = ||dx|| / v, perceptually balanced zoom-and-pan paths are
geodesics, and the usual Riemannian toolbox (distance, interpolation,
exp/log maps, parallel transport, covariant derivative) has closed forms.

Geodesics are vertical rays or semicircles orthogonal to v = 0.  The
closed forms below parameterize them by arc length through the signed
coordinates

    r_i = asinh((v1^2 - v0^2 + (-1)^i ||u1 - u0||^2) / (-2 v_i ||u1 - u0||))

of the endpoints along the arc, which stays well conditioned even when the
endpoints nearly share a footprint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "VERTICAL_EPS",
    "DegenerateGeodesicError",
    "HPoint",
    "HVector",
    "zero_vector",
    "hnorm",
    "dist",
    "geo",
    "gerp",
    "exp_map",
    "log_map",
    "transport",
    "covariant_derivative",
    "clipvec",
]

# Relative footprint tolerance below which the vertical-geodesic formulas
# take over; scaled by altitude so the switch is invariant under the
# similarity isometries of the model.
VERTICAL_EPS = 1e-12


class DegenerateGeodesicError(ValueError):
    """No geodesic direction exists between coincident endpoints."""


def _footprint(value) -> np.ndarray:
    arr = np.asarray(value, dtype=float).reshape(-1)
    if arr.size not in (1, 2):
        raise ValueError(f"footprint must have 1 or 2 components, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("footprint components must be finite")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


def _norm(arr: np.ndarray) -> float:
    # math.hypot beats np.linalg.norm by ~20x on length-1/2 arrays and is
    # correctly rounded; these ops sit in per-frame inner loops.
    return math.hypot(*arr)


@dataclass(frozen=True, eq=False)
class HPoint:
    """A camera view: footprint ``u`` (world units) and altitude ``v`` > 0."""

    u: np.ndarray
    v: float

    def __post_init__(self):
        object.__setattr__(self, "u", _footprint(self.u))
        object.__setattr__(self, "v", float(self.v))
        if not (math.isfinite(self.v) and self.v > 0.0):
            raise ValueError(f"altitude must be finite and positive, got {self.v!r}")

    @property
    def n(self) -> int:
        """Dimension of the ambient hyperbolic space (2 or 3)."""
        return self.u.size + 1

    def __eq__(self, other):
        if not isinstance(other, HPoint):
            return NotImplemented
        return (
            self.v == other.v
            and self.u.size == other.u.size
            and bool(np.all(self.u == other.u))
        )

    def __repr__(self):
        return f"HPoint(u={self.u.tolist()}, v={self.v})"


@dataclass(frozen=True, eq=False)
class HVector:
    """A tangent vector at ``base``: footprint part ``du``, altitude part ``dv``."""

    base: HPoint
    du: np.ndarray
    dv: float

    def __post_init__(self):
        object.__setattr__(self, "du", _footprint(self.du))
        object.__setattr__(self, "dv", float(self.dv))
        if not math.isfinite(self.dv):
            raise ValueError("altitude component must be finite")
        if self.du.size != self.base.u.size:
            raise ValueError("tangent footprint dimension must match base point")

    def __add__(self, other):
        if not isinstance(other, HVector):
            return NotImplemented
        if other.base != self.base:
            raise ValueError("cannot add tangent vectors at different base points")
        return HVector(self.base, self.du + other.du, self.dv + other.dv)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float)):
            return NotImplemented
        return HVector(self.base, scalar * self.du, scalar * self.dv)

    __rmul__ = __mul__

    def __neg__(self):
        return HVector(self.base, -self.du, -self.dv)

    def __repr__(self):
        return f"HVector(base={self.base!r}, du={self.du.tolist()}, dv={self.dv})"


def zero_vector(x: HPoint) -> HVector:
    return HVector(x, np.zeros_like(x.u), 0.0)


def hnorm(X: HVector) -> float:
    """Riemannian length of a tangent vector: ||(du, dv)|| / v."""
    return math.hypot(*X.du, X.dv) / X.base.v


def _check_pair(x: HPoint, y: HPoint):
    if x.u.size != y.u.size:
        raise ValueError("points live in spaces of different dimension")


def _is_vertical(delta: float, x: HPoint, y: HPoint) -> bool:
    return delta <= VERTICAL_EPS * max(x.v, y.v)


def _arc_coords(x: HPoint, y: HPoint, delta: float) -> tuple[float, float]:
    """Signed arc-length coordinates (r0, r1) of x and y on their geodesic."""
    gap = y.v * y.v - x.v * x.v
    r0 = math.asinh((gap + delta * delta) / (-2.0 * x.v * delta))
    r1 = math.asinh((gap - delta * delta) / (-2.0 * y.v * delta))
    return r0, r1


def dist(x: HPoint, y: HPoint) -> float:
    """Hyperbolic distance between two views."""
    _check_pair(x, y)
    du = y.u - x.u
    delta = _norm(du)
    if _is_vertical(delta, x, y):
        return abs(math.log(y.v / x.v))
    r0, r1 = _arc_coords(x, y, delta)
    # r1 > r0 mathematically; clamp shields against ulp-level cancellation.
    return max(r1 - r0, 0.0)


def geo(x: HPoint, y: HPoint, s: float) -> HPoint:
    """Point at arc length ``s`` from ``x`` along the geodesic toward ``y``.

    ``s`` may exceed dist(x, y) or be negative: the parameterization covers
    the whole geodesic, so the same formula extrapolates.  Raises
    DegenerateGeodesicError when x = y and s != 0 (no direction to move in).
    """
    _check_pair(x, y)
    s = float(s)
    du = y.u - x.u
    delta = _norm(du)
    if _is_vertical(delta, x, y):
        if x.v == y.v:
            if s == 0.0:
                return x
            raise DegenerateGeodesicError(
                "geodesic direction undefined for coincident endpoints"
            )
        k = 1.0 if y.v > x.v else -1.0
        return HPoint(x.u, x.v * math.exp(s * k))
    r0, _ = _arc_coords(x, y, delta)
    denom = math.cosh(s + r0)
    u_s = x.u + (x.v * math.sinh(s) / denom) * (du / delta)
    v_s = x.v * math.cosh(r0) / denom
    return HPoint(u_s, v_s)


def gerp(x: HPoint, y: HPoint, a: float) -> HPoint:
    """Geodesic interpolation: the point a fraction ``a`` of the way to ``y``.

    gerp(x, y, 0) = x and gerp(x, y, 1) = y; values outside [0, 1]
    extrapolate along the same geodesic.  gerp(x, x, a) = x for any a.
    """
    _check_pair(x, y)
    S = dist(x, y)
    if S == 0.0:
        return x
    return geo(x, y, float(a) * S)


def exp_map(X: HVector) -> HPoint:
    """Endpoint of the geodesic leaving X.base with initial velocity X.

    Travels for unit time, covering arc length hnorm(X).
    """
    x = X.base
    mag = hnorm(X)
    if mag == 0.0:
        return x
    delta = _norm(X.du)
    if delta <= VERTICAL_EPS * abs(X.dv):
        return HPoint(x.u, x.v * math.exp(X.dv / x.v))
    r0 = -math.asinh(X.dv / delta)
    denom = math.cosh(mag + r0)
    u1 = x.u + (x.v * math.sinh(mag) / denom) * (X.du / delta)
    v1 = x.v * math.cosh(r0) / denom
    return HPoint(u1, v1)


def log_map(x: HPoint, y: HPoint) -> HVector:
    """Initial velocity at ``x`` of the unit-time geodesic reaching ``y``.

    Inverse of exp_map: exp_map(log_map(x, y)) = y, and
    hnorm(log_map(x, y)) = dist(x, y).
    """
    _check_pair(x, y)
    du = y.u - x.u
    delta = _norm(du)
    if _is_vertical(delta, x, y):
        return HVector(x, np.zeros_like(x.u), x.v * math.log(y.v / x.v))
    r0, r1 = _arc_coords(x, y, delta)
    S = r1 - r0
    U = (x.v * S / math.cosh(r0)) * (du / delta)
    V = -x.v * S * math.tanh(r0)
    return HVector(x, U, V)


def transport(X: HVector, y: HPoint) -> HVector:
    """Parallel-transport X along the geodesic from its base to ``y``.

    The component in the vertical plane of the connecting geodesic rotates
    with the arc's tangent; the in-plane frame at arc coordinate r has
    unit-circle form tanh(r) + i sech(r), so the rotation is one complex
    multiply.  Transport is a linear isometry: hyperbolic norms and angles
    are preserved exactly.
    """
    x = X.base
    _check_pair(x, y)
    du = y.u - x.u
    delta = _norm(du)
    scale = y.v / x.v
    if _is_vertical(delta, x, y):
        return HVector(y, scale * X.du, scale * X.dv)
    direction = du / delta
    along = float(X.du @ direction)
    across = X.du - along * direction
    r0, r1 = _arc_coords(x, y, delta)
    frame0 = complex(math.tanh(r0), 1.0 / math.cosh(r0))
    frame1 = complex(math.tanh(r1), 1.0 / math.cosh(r1))
    rotated = frame1 * frame0.conjugate() * complex(along, X.dv)
    return HVector(y, scale * (across + rotated.real * direction), scale * rotated.imag)


def covariant_derivative(x, xdot, X: HVector, Xdot) -> HVector:
    """Covariant time derivative of a vector field X(t) along a path x(t).

    ``xdot`` is the path velocity (du/dt, dv/dt) and ``Xdot`` the naive
    componentwise derivative (dU/dt, dV/dt).  The correction terms come
    from the half-space Christoffel symbols, all proportional to 1/v.
    """
    if X.base != x:
        raise ValueError("vector field sample must be based at the path point")
    udot = np.asarray(xdot[0], dtype=float).reshape(-1)
    vdot = float(xdot[1])
    dU = np.asarray(Xdot[0], dtype=float).reshape(-1)
    dV = float(Xdot[1])
    v = x.v
    U, V = X.du, X.dv
    Uprime = dU - (vdot * U + V * udot) / v
    Vprime = dV + (float(udot @ U) - vdot * V) / v
    return HVector(x, Uprime, Vprime)


def clipvec(X: HVector, c: float) -> HVector:
    """Rescale X to hyperbolic length at most ``c`` (direction preserved)."""
    c = float(c)
    if c < 0.0 or not math.isfinite(c):
        raise ValueError(f"clip length must be finite and >= 0, got {c!r}")
    mag = hnorm(X)
    if mag <= c or mag == 0.0:
        return X
    f = c / mag
    return HVector(X.base, f * X.du, f * X.dv)
