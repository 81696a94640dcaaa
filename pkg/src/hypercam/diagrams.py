"""World/screen diagrams: bounds series, optical pathlines, flow metrics, SVG.

A world/screen diagram stacks two panels over a shared time axis: the
world-space span visible on screen (center and bounds), and the optical
pathlines, the screen-space traces r(t) = (p - u(t)) / v(t) of fixed world
points p.  A pathline's slope is that point's onscreen speed, so velocity
discontinuities show up as kinks and the density of lines tracks zoom
level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .trajectory import Trajectory

__all__ = [
    "DiagramConfig",
    "Pathline",
    "PathlineSet",
    "pow2ceil",
    "grad_mag",
    "pathline_membership",
    "pathlines",
    "screen_bounds_series",
    "rms_flow",
    "rms_flow_series",
    "tracked_screen_series",
    "velocity_jumps",
    "discontinuity_scan",
    "render_worldscreen_svg",
]


@dataclass(frozen=True)
class DiagramConfig:
    """Pathline spacing and screen bounds for diagram construction.

    alpha_iso scales the isoline density: smaller alpha_iso means more
    pathlines per screen height.  (It is unrelated to the filter gain
    alpha.)  r_lo/r_hi bound the pathline panel in screen space; r_half is
    the view half-extent used for the bounds panel.
    """

    alpha_iso: float = 0.25
    r_lo: float = -1.0
    r_hi: float = 1.0
    r_half: float = 1.0
    width: int = 640
    height: int = 480

    def __post_init__(self):
        if not (math.isfinite(self.alpha_iso) and self.alpha_iso > 0.0):
            raise ValueError(f"alpha_iso must be finite and positive, got {self.alpha_iso!r}")
        if not self.r_lo < self.r_hi:
            raise ValueError(f"need r_lo < r_hi, got {self.r_lo!r} .. {self.r_hi!r}")
        if not self.r_half > 0.0:
            raise ValueError(f"r_half must be positive, got {self.r_half!r}")
        if self.width < 64 or self.height < 64:
            raise ValueError("image dimensions must be at least 64x64")


@dataclass(frozen=True)
class Pathline:
    """Screen trace of one world value over a run of consecutive samples."""

    value: float
    indices: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "indices", np.asarray(self.indices, dtype=np.int64))
        object.__setattr__(self, "r", np.asarray(self.r, dtype=float))
        if self.indices.size != self.r.size or self.indices.size == 0:
            raise ValueError("indices and r must be equal-length and nonempty")
        if self.indices.size > 1 and not np.all(np.diff(self.indices) == 1):
            raise ValueError("pathline sample indices must be consecutive")


@dataclass(frozen=True)
class PathlineSet:
    period: float
    pathlines: tuple

    def __post_init__(self):
        object.__setattr__(self, "pathlines", tuple(self.pathlines))

    def __len__(self) -> int:
        return len(self.pathlines)


def pow2ceil(x: float) -> float:
    """Smallest power of two >= x; exact (powers of two are fixed points)."""
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise ValueError(f"pow2ceil needs finite x > 0, got {x!r}")
    mantissa, exponent = math.frexp(x)  # x = mantissa * 2**exponent, mantissa in [0.5, 1)
    if mantissa == 0.5:
        return math.ldexp(1.0, exponent - 1)
    return math.ldexp(1.0, exponent)


def grad_mag(v: float, vprime: float, uprime: float, r: float) -> float:
    """Gradient magnitude of the world-value field phi(t, r) = v(t)*r + u(t).

    Equals sqrt(v^2 + (r*v' + u')^2): the r-derivative is v, the
    t-derivative is the world velocity seen at screen position r.
    """
    return math.hypot(v, r * vprime + uprime)


def _divides(q: float, p: float) -> bool:
    # q is a power of two and p = k*P with P a power of two >= alpha*|v|,
    # so p/q is exact float arithmetic and the check has no epsilon.
    return (p / q).is_integer()


def pathline_membership(
    p: float, r: float, v: float, vprime: float, uprime: float, alpha_iso: float
) -> bool:
    """Exact isoline test: does pow2ceil(alpha*||grad phi||) divide p?"""
    q = pow2ceil(alpha_iso * grad_mag(v, vprime, uprime, r))
    return _divides(q, p)


def pathlines(traj: Trajectory, cfg: DiagramConfig, axis: int = 0) -> PathlineSet:
    """Extract the optical pathlines of a trajectory along one screen axis.

    Per sample i, candidate world values are the multiples of
    P = pow2ceil(alpha * |v|) inside the visible span [v*r_lo + u, v*r_hi + u]
    (P alone guarantees a bounded number of candidates at any zoom level).
    A candidate p survives at screen position r = (p - u) / v iff
    pow2ceil(alpha * ||grad phi||) divides p, which thins lines where the
    field changes fast so the drawn density stays roughly uniform.
    Surviving (i, r) pairs accumulate in a hash map keyed by p; runs of
    consecutive sample indices become polylines, with breaks wherever a
    value drops out and returns.  Output ordering is by world value then
    time: deterministic.
    """
    m = len(traj)
    if m < 2:
        raise ValueError("need at least 2 samples to draw pathlines")
    if not 0 <= axis < traj.dim:
        raise ValueError(f"axis {axis} out of range for dim {traj.dim}")
    du, dv = traj.derivatives()
    u_ax = traj.u[:, axis]
    du_ax = du[:, axis]
    alpha = cfg.alpha_iso
    accum: dict = {}
    for i in range(m):
        v = float(traj.v[i])
        u = float(u_ax[i])
        vp = float(dv[i])
        up = float(du_ax[i])
        P = pow2ceil(alpha * v)
        k_lo = math.ceil((v * cfg.r_lo + u) / P)
        k_hi = math.floor((v * cfg.r_hi + u) / P)
        for k in range(k_lo, k_hi + 1):
            p = k * P
            r = (p - u) / v
            q = pow2ceil(alpha * grad_mag(v, vp, up, r))
            if _divides(q, p):
                accum.setdefault(p, []).append((i, r))
    lines = []
    for p in sorted(accum):
        entries = accum[p]
        start = 0
        for j in range(1, len(entries) + 1):
            if j == len(entries) or entries[j][0] != entries[j - 1][0] + 1:
                chunk = entries[start:j]
                lines.append(
                    Pathline(
                        p,
                        np.array([e[0] for e in chunk], dtype=np.int64),
                        np.array([e[1] for e in chunk]),
                    )
                )
                start = j
    return PathlineSet(traj.period, tuple(lines))


def screen_bounds_series(traj: Trajectory, r_half) -> tuple:
    """World-space (center, lower, upper) series of the visible span.

    r_half may be a scalar or one value per axis; outputs share u's shape.
    """
    half = traj.v[:, None] * np.asarray(r_half, dtype=float)
    return traj.u, traj.u - half, traj.u + half


def rms_flow(traj: Trajectory, i: int, cfg: DiagramConfig) -> float:
    """RMS onscreen speed at sample i, closed form over r in [r_lo, r_hi].

    Pathline slope at (t, r) is -(u' + r*v')/v, linear in r, so its mean
    square over the interval is a quadratic evaluated analytically; axes
    contribute in quadrature for 2-D footprints.
    """
    du, dv = traj.derivatives()
    lo, hi = cfg.r_lo, cfg.r_hi
    v = float(traj.v[i])
    b = float(dv[i]) / v
    total = 0.0
    for axis in range(traj.dim):
        a = float(du[i, axis]) / v
        total += a * a + a * b * (lo + hi) + b * b * (lo * lo + lo * hi + hi * hi) / 3.0
    return math.sqrt(total)


def rms_flow_series(traj: Trajectory, cfg: DiagramConfig) -> np.ndarray:
    return np.array([rms_flow(traj, i, cfg) for i in range(len(traj))])


def tracked_screen_series(traj: Trajectory) -> np.ndarray:
    """Screen coordinates, over time, of the world point at the first frame's center."""
    return (traj.u[0] - traj.u) / traj.v[:, None]


def velocity_jumps(traj: Trajectory) -> tuple:
    """Finite-difference velocity changes of the tracked point.

    Returns (jumps, speeds): jumps[j] = |w[j+1] - w[j]| compares the
    screen velocities of adjacent frame pairs and lands at sample j+1;
    speeds[j] = |w[j]|.
    """
    if len(traj) < 3:
        raise ValueError("need at least 3 samples to compare velocities")
    r = tracked_screen_series(traj)
    w = np.diff(r, axis=0) / traj.period
    dw = w[1:] - w[:-1]
    jumps = np.sqrt(np.sum(dw * dw, axis=1))
    speeds = np.sqrt(np.sum(w * w, axis=1))
    return jumps, speeds


def discontinuity_scan(
    traj: Trajectory,
    threshold: float,
    speed_floor: float = 1e-6,
    window: int | None = None,
) -> list:
    """Find instants where the tracked point's screen velocity jumps.

    A jump at sample i counts when it exceeds threshold times the local
    velocity scale: the largest speed within `window` samples (default a
    quarter second) around the two segments being compared, floored at
    speed_floor so a parked camera does not divide by zero.  Returns
    (time, jump magnitude) pairs in time order.
    """
    if not threshold > 0.0:
        raise ValueError(f"threshold must be positive, got {threshold!r}")
    jumps, speeds = velocity_jumps(traj)
    if window is None:
        window = max(1, round(0.25 / traj.period))
    found = []
    for j in range(jumps.size):
        lo = max(0, j - window)
        hi = min(speeds.size, j + 2 + window)
        scale = max(float(np.max(speeds[lo:hi])), speed_floor)
        if jumps[j] > threshold * scale:
            found.append(((j + 1) * traj.period, float(jumps[j])))
    return found


# Fixed styling: determinism is worth more here than configurability.
_SVG_FONT = "font-family:monospace;font-size:11px;fill:#333333"
_FRAME_STYLE = "fill:none;stroke:#333333;stroke-width:1"
_BOUND_STYLE = "fill:none;stroke:#1f77b4;stroke-width:1.3"
_CENTER_STYLE = "fill:none;stroke:#1f77b4;stroke-width:1;stroke-dasharray:4 3"
_PATHLINE_STYLE = "fill:none;stroke:#888888;stroke-width:0.7"
_TARGET_STYLE = "fill:none;stroke:#d62728;stroke-width:2.4"

_MARGIN_LEFT = 50.0
_MARGIN_RIGHT = 12.0
_MARGIN_TOP = 24.0
_MARGIN_BOTTOM = 30.0
_PANEL_GAP = 18.0


def _fmt(x: float) -> str:
    out = format(x, ".2f")
    return "0.00" if out == "-0.00" else out


def _polyline(xs, ys, style: str, cls: str) -> str:
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(xs, ys))
    return f'<polyline class="{cls}" style="{style}" points="{pts}"/>'


class _Panel:
    """Affine world->pixel mapping for one stacked panel."""

    def __init__(self, x0, y0, width, height, t_end, val_lo, val_hi):
        self.x0, self.y0 = x0, y0
        self.width, self.height = width, height
        self.t_end = t_end
        self.val_lo, self.val_hi = val_lo, val_hi

    def x(self, t):
        return self.x0 + (np.asarray(t) / self.t_end) * self.width

    def y(self, val):
        span = self.val_hi - self.val_lo
        return self.y0 + (self.val_hi - np.asarray(val)) / span * self.height

    def frame(self, label):
        parts = [
            f'<rect style="{_FRAME_STYLE}" x="{_fmt(self.x0)}" y="{_fmt(self.y0)}" '
            f'width="{_fmt(self.width)}" height="{_fmt(self.height)}"/>',
            f'<text style="{_SVG_FONT}" x="{_fmt(self.x0)}" y="{_fmt(self.y0 - 5)}">{label}</text>',
            f'<text style="{_SVG_FONT}" x="{_fmt(self.x0 - 44)}" y="{_fmt(self.y(self.val_hi) + 10)}">{self.val_hi:.3g}</text>',
            f'<text style="{_SVG_FONT}" x="{_fmt(self.x0 - 44)}" y="{_fmt(self.y(self.val_lo))}">{self.val_lo:.3g}</text>',
        ]
        return parts


def _pad_range(lo: float, hi: float) -> tuple:
    if hi <= lo:
        lo, hi = lo - 0.5, hi + 0.5
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def render_worldscreen_svg(
    traj: Trajectory,
    cfg: DiagramConfig,
    target: "StepSignal | None" = None,
) -> str:
    """Render a world/screen diagram: bounds panel(s) above, pathlines below.

    For 2-D footprints, each axis gets its own bounds + pathline panel pair.
    When a step-target signal is supplied, its visible world span is drawn
    in the bounds panel as a pair of bold lines.  Output is deterministic:
    same trajectory, config, and target give identical bytes.
    """
    if target is not None and target.dim != traj.dim:
        raise ValueError("target signal dimension must match the trajectory")
    times = traj.times
    t_end = float(times[-1]) if len(traj) > 1 else 1.0
    center, lower, upper = screen_bounds_series(traj, cfg.r_half)
    target_lo = target_hi = None
    if target is not None:
        tgt = [target.at(t) for t in times]
        tu = np.stack([p.u for p in tgt])
        tv = np.array([p.v for p in tgt])
        target_lo = tu - tv[:, None] * cfg.r_half
        target_hi = tu + tv[:, None] * cfg.r_half

    inner_w = cfg.width - _MARGIN_LEFT - _MARGIN_RIGHT
    n_panels = 2 * traj.dim
    inner_h = cfg.height - _MARGIN_TOP - _MARGIN_BOTTOM - (n_panels - 1) * _PANEL_GAP
    panel_h = inner_h / n_panels

    body = []
    panel_y = _MARGIN_TOP
    for axis in range(traj.dim):
        lo_vals = [lower[:, axis].min()]
        hi_vals = [upper[:, axis].max()]
        if target_lo is not None:
            lo_vals.append(target_lo[:, axis].min())
            hi_vals.append(target_hi[:, axis].max())
        w_lo, w_hi = _pad_range(float(min(lo_vals)), float(max(hi_vals)))
        world = _Panel(_MARGIN_LEFT, panel_y, inner_w, panel_h, t_end, w_lo, w_hi)
        suffix = f" (axis {axis + 1})" if traj.dim > 1 else ""
        body += world.frame(f"world span{suffix}")
        if target_lo is not None:
            body.append(
                _polyline(world.x(times), world.y(target_lo[:, axis]), _TARGET_STYLE, "target")
            )
            body.append(
                _polyline(world.x(times), world.y(target_hi[:, axis]), _TARGET_STYLE, "target")
            )
        body.append(_polyline(world.x(times), world.y(lower[:, axis]), _BOUND_STYLE, "bound"))
        body.append(_polyline(world.x(times), world.y(upper[:, axis]), _BOUND_STYLE, "bound"))
        body.append(_polyline(world.x(times), world.y(center[:, axis]), _CENTER_STYLE, "center"))
        panel_y += panel_h + _PANEL_GAP

        lines = pathlines(traj, cfg, axis=axis)
        screen = _Panel(_MARGIN_LEFT, panel_y, inner_w, panel_h, t_end, cfg.r_lo, cfg.r_hi)
        body += screen.frame(f"screen r{suffix}")
        for line in lines.pathlines:
            body.append(
                _polyline(
                    screen.x(line.indices * traj.period),
                    screen.y(line.r),
                    _PATHLINE_STYLE,
                    "pathline",
                )
            )
        panel_y += panel_h + _PANEL_GAP

    axis_y = cfg.height - _MARGIN_BOTTOM + 16
    body.append(
        f'<text style="{_SVG_FONT}" x="{_fmt(_MARGIN_LEFT)}" y="{_fmt(axis_y)}">t = 0 s</text>'
    )
    end_label = f"t = {t_end:.3g} s"
    body.append(
        f'<text style="{_SVG_FONT}" text-anchor="end" x="{_fmt(_MARGIN_LEFT + inner_w)}" '
        f'y="{_fmt(axis_y)}">{end_label}</text>'
    )
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{cfg.width}" height="{cfg.height}" '
        f'viewBox="0 0 {cfg.width} {cfg.height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"
