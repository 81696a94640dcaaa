"""Causal smoothing of a target camera signal along hyperbolic geodesics.

Baselines first: constant-hyperbolic-speed pursuit and easing-curve
playback, both of which restart their plan at every target change and so
jump in velocity when interrupted mid-flight.  The filters proper replace
planning with state: a geodesic one-pole stage steps a fraction b = alpha*T
of the way to the current target each sample, a clipped stage caps the step
length at T*c, and a two-pole stage integrates a spring-mass-damper whose
velocity state rides along by parallel transport.  Cascading k one-pole
stages makes the output continuous through its (k-1)th derivative, so four
stages give continuous jerk; none of the filters ever looks ahead, so an
interruption is just the next input sample.
"""

from __future__ import annotations

import bisect
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .geometry import (
    HPoint,
    HVector,
    dist,
    exp_map,
    geo,
    gerp,
    log_map,
    transport,
    zero_vector,
)
from .trajectory import Trajectory

__all__ = [
    "StepSignal",
    "SampledSignal",
    "TargetSignal",
    "OnePole",
    "ClippedOnePole",
    "TwoPole",
    "StageConfig",
    "FilterConfig",
    "FilterStabilityWarning",
    "StageState",
    "init_state",
    "one_pole_step",
    "clipped_one_pole_step",
    "two_pole_step",
    "cascade_step",
    "clipped_two_pole_step",
    "run_filter",
    "run_filter_stages",
    "integrate_ct",
    "cosine_easing",
    "EasingConfig",
    "constant_speed_eval",
    "easing_eval",
    "run_constant_speed",
    "run_easing",
]


class FilterStabilityWarning(UserWarning):
    """A configured discretization is legal but known to misbehave."""


@dataclass(frozen=True)
class StepSignal:
    """Piecewise-constant target: held between events, right-continuous.

    A target change at exactly a sample instant is visible at that sample.
    """

    events: tuple

    def __post_init__(self):
        events = tuple((float(t), target) for t, target in self.events)
        if not events:
            raise ValueError("signal needs at least one event")
        if events[0][0] != 0.0:
            raise ValueError(f"first event must be at t=0, got t={events[0][0]}")
        times = [t for t, _ in events]
        for a, b in zip(times, times[1:]):
            if not b > a:
                raise ValueError(f"event times must strictly increase, got {a} then {b}")
        dims = {target.u.size for _, target in events}
        if len(dims) != 1:
            raise ValueError("all event targets must share one dimension")
        object.__setattr__(self, "events", events)
        object.__setattr__(self, "_times", times)

    @property
    def dim(self) -> int:
        return self.events[0][1].u.size

    def at(self, t: float) -> HPoint:
        # +1e-9 keeps "change at exactly t = i*T is visible at sample i"
        # true when i*T carries float roundoff
        idx = bisect.bisect_right(self._times, t + 1e-9) - 1
        if idx < 0:
            idx = 0
        return self.events[idx][1]


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled target with zero-order hold between samples."""

    period: float
    samples: tuple

    def __post_init__(self):
        object.__setattr__(self, "period", float(self.period))
        object.__setattr__(self, "samples", tuple(self.samples))
        if self.period <= 0.0:
            raise ValueError(f"period must be positive, got {self.period!r}")
        if not self.samples:
            raise ValueError("signal needs at least one sample")
        dims = {s.u.size for s in self.samples}
        if len(dims) != 1:
            raise ValueError("all samples must share one dimension")

    @property
    def dim(self) -> int:
        return self.samples[0].u.size

    def at(self, t: float) -> HPoint:
        # +1e-9 steps guards t = i*period computed with roundoff
        idx = int(math.floor(t / self.period + 1e-9))
        idx = min(max(idx, 0), len(self.samples) - 1)
        return self.samples[idx]


TargetSignal = Union[StepSignal, SampledSignal]


@dataclass(frozen=True)
class OnePole:
    """Geodesic one-pole stage: step a fraction alpha*T toward the target."""

    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValueError(f"alpha must be finite and positive, got {self.alpha!r}")


@dataclass(frozen=True)
class ClippedOnePole:
    """One-pole stage with hyperbolic speed capped at c (step length T*c)."""

    alpha: float
    c: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "c", float(self.c))
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValueError(f"alpha must be finite and positive, got {self.alpha!r}")
        if not (math.isfinite(self.c) and self.c >= 0.0):
            raise ValueError(f"c must be finite and >= 0, got {self.c!r}")


@dataclass(frozen=True)
class TwoPole:
    """Spring-mass-damper stage: natural frequency omega0, damping ratio zeta."""

    omega0: float
    zeta: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "omega0", float(self.omega0))
        object.__setattr__(self, "zeta", float(self.zeta))
        if not (math.isfinite(self.omega0) and self.omega0 > 0.0):
            raise ValueError(f"omega0 must be finite and positive, got {self.omega0!r}")
        if not (math.isfinite(self.zeta) and self.zeta >= 0.0):
            raise ValueError(f"zeta must be finite and >= 0, got {self.zeta!r}")


StageConfig = Union[OnePole, ClippedOnePole, TwoPole]


@dataclass(frozen=True)
class FilterConfig:
    """An ordered stage cascade plus the sampling period it runs at."""

    stages: tuple
    period: float

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        object.__setattr__(self, "period", float(self.period))
        if not self.stages:
            raise ValueError("cascade needs at least one stage")
        if not (math.isfinite(self.period) and self.period > 0.0):
            raise ValueError(f"period must be finite and positive, got {self.period!r}")
        for k, stage in enumerate(self.stages):
            if isinstance(stage, (OnePole, ClippedOnePole)):
                b = stage.alpha * self.period
                if not b < 2.0:
                    raise ValueError(
                        f"stage {k}: b = alpha*T = {b:g} is unstable (requires b < 2)"
                    )
                if b > 1.0:
                    warnings.warn(
                        f"stage {k}: b = alpha*T = {b:g} > 1 oscillates",
                        FilterStabilityWarning,
                        stacklevel=2,
                    )
            elif isinstance(stage, TwoPole):
                if stage.omega0 * self.period >= 0.5:
                    warnings.warn(
                        f"stage {k}: T*omega0 = {stage.omega0 * self.period:g} >= 0.5 "
                        "may destabilize the explicit update",
                        FilterStabilityWarning,
                        stacklevel=2,
                    )
            else:
                raise ValueError(f"stage {k}: unknown stage type {type(stage).__name__}")

    @property
    def rate(self) -> float:
        return 1.0 / self.period


class StageState:
    """Mutable per-stage memory: output y, plus velocity ydot for two-pole stages.

    ydot is kept based at y (re-based by parallel transport after every
    step), so at the start of a step it sits at the previous output exactly
    as the discrete update consumes it.
    """

    __slots__ = ("y", "ydot")

    def __init__(self, y: HPoint, ydot: HVector | None = None):
        self.y = y
        self.ydot = ydot


def init_state(cfg: FilterConfig, y0: HPoint) -> list:
    """All stages start at y0 with zero velocity (zero initial error)."""
    states = []
    for stage in cfg.stages:
        if isinstance(stage, TwoPole):
            states.append(StageState(y0, zero_vector(y0)))
        else:
            states.append(StageState(y0))
    return states


def one_pole_step(state: StageState, x_i: HPoint, b: float) -> HPoint:
    """y[i] = gerp(y[i-1], x[i], b) with b = alpha*T."""
    y = gerp(state.y, x_i, b)
    state.y = y
    return y


def clipped_one_pole_step(
    state: StageState, x_i: HPoint, alpha: float, c: float, period: float
) -> HPoint:
    """Step length along the geodesic is T*min(c, alpha*dist): one-pole
    behavior near the target, constant hyperbolic speed c when far."""
    S = dist(state.y, x_i)
    s = period * min(c, alpha * S)
    y = state.y if s == 0.0 else geo(state.y, x_i, s)
    state.y = y
    return y


def two_pole_step(
    state: StageState, x_i: HPoint, omega0: float, zeta: float, period: float
) -> HPoint:
    """Explicit spring-mass-damper update with transported velocity.

    ydot[i] = (1 - 2*T*zeta*omega0) * ydot[i-1] + T*omega0^2 * log(y[i-1], x[i])
    y[i]    = exp(T * ydot[i])

    ydot[i-1] already sits at y[i-1] (transported at the end of the previous
    step), and both update terms are tangent there, so the vector sum is
    well defined.
    """
    y_prev = state.y
    vel = (1.0 - 2.0 * period * zeta * omega0) * state.ydot + (
        period * omega0 * omega0
    ) * log_map(y_prev, x_i)
    y = exp_map(period * vel)
    state.y = y
    state.ydot = transport(vel, y)
    return y


def _stage_step(stage: StageConfig, state: StageState, x_i: HPoint, period: float) -> HPoint:
    if isinstance(stage, ClippedOnePole):
        return clipped_one_pole_step(state, x_i, stage.alpha, stage.c, period)
    if isinstance(stage, OnePole):
        return one_pole_step(state, x_i, stage.alpha * period)
    return two_pole_step(state, x_i, stage.omega0, stage.zeta, period)


def cascade_step(states: list, x_i: HPoint, cfg: FilterConfig) -> HPoint:
    """Feed x_i through the stage cascade; each stage's output is the next
    stage's input.  Returns the last stage's output."""
    signal = x_i
    for stage, state in zip(cfg.stages, states):
        signal = _stage_step(stage, state, signal, cfg.period)
    return signal


def clipped_two_pole_step(
    states: list,
    x_i: HPoint,
    alpha: float,
    c: float,
    omega0: float,
    zeta: float,
    period: float,
) -> HPoint:
    """Clipped one-pole stage in series before a two-pole stage."""
    mid = clipped_one_pole_step(states[0], x_i, alpha, c, period)
    return two_pole_step(states[1], mid, omega0, zeta, period)


def _sample_count(duration: float, period: float) -> int:
    if duration < 0.0:
        raise ValueError(f"duration must be >= 0, got {duration!r}")
    # -1e-9 absorbs float noise in duration/period when they divide evenly
    return int(math.ceil(duration / period - 1e-9)) + 1


def run_filter(
    signal: TargetSignal,
    cfg: FilterConfig,
    duration: float,
    y0: HPoint | None = None,
) -> Trajectory:
    """Sample the target at cfg.period, apply the cascade, record the output.

    Output sample i depends only on the target at times <= i*T (causal).
    y0 defaults to the first target value, giving zero initial error.
    """
    traj, _ = run_filter_stages(signal, cfg, duration, y0)
    return traj


def run_filter_stages(
    signal: TargetSignal,
    cfg: FilterConfig,
    duration: float,
    y0: HPoint | None = None,
) -> tuple:
    """run_filter, but also returns each stage's own output Trajectory."""
    if y0 is None:
        y0 = signal.at(0.0)
    states = init_state(cfg, y0)
    m = _sample_count(duration, cfg.period)
    outputs = [y0]
    per_stage = [[st.y] for st in states]
    for i in range(1, m):
        x_i = signal.at(i * cfg.period)
        outputs.append(cascade_step(states, x_i, cfg))
        for k, st in enumerate(states):
            per_stage[k].append(st.y)
    traj = Trajectory.from_points(cfg.period, outputs)
    stage_trajs = [Trajectory.from_points(cfg.period, pts) for pts in per_stage]
    return traj, stage_trajs


def integrate_ct(
    stage: StageConfig,
    signal: TargetSignal,
    t_solver: float,
    duration: float,
    y0: HPoint | None = None,
) -> Trajectory:
    """Reference continuous-time trajectory via fine-step geodesic stepping.

    Integrates the stage's governing equation with y <- exp(h * f(y, x))
    (velocity state handled likewise for the two-pole) at step h = t_solver,
    which must be much smaller than the stage's time constant.  Production
    code uses the discrete steps; this exists to test their convergence.
    """
    if y0 is None:
        y0 = signal.at(0.0)
    if isinstance(stage, TwoPole):
        state = StageState(y0, zero_vector(y0))
    else:
        state = StageState(y0)
    m = _sample_count(duration, t_solver)
    points = [y0]
    for i in range(1, m):
        x_i = signal.at(i * t_solver)
        points.append(_stage_step(stage, state, x_i, t_solver))
    return Trajectory.from_points(t_solver, points)


def cosine_easing(a: float) -> float:
    """Smoothstep-style curve: 0 at 0, 1 from 1 on, zero slope at both ends."""
    if a <= 0.0:
        return 0.0
    if a >= 1.0:
        return 1.0
    return 0.5 - 0.5 * math.cos(math.pi * a)


@dataclass(frozen=True)
class EasingConfig:
    """Fixed-duration eased playback: reach the target in `duration` seconds."""

    duration: float
    curve: Callable = cosine_easing

    def __post_init__(self):
        object.__setattr__(self, "duration", float(self.duration))
        if not (math.isfinite(self.duration) and self.duration > 0.0):
            raise ValueError(f"duration must be finite and positive, got {self.duration!r}")


def constant_speed_eval(y0: HPoint, target: HPoint, c: float, t: float) -> HPoint:
    """Position after pursuing target from y0 at hyperbolic speed c for time t."""
    if not c > 0.0:
        raise ValueError(f"speed must be positive, got {c!r}")
    if t < 0.0:
        raise ValueError(f"time must be >= 0, got {t!r}")
    S = dist(y0, target)
    if S == 0.0:
        return y0
    return geo(y0, target, min(c * t, S))


def easing_eval(y0: HPoint, target: HPoint, cfg: EasingConfig, t: float) -> HPoint:
    """Position t seconds into an eased flight from y0 to target."""
    if t < 0.0:
        raise ValueError(f"time must be >= 0, got {t!r}")
    return gerp(y0, target, cfg.curve(t / cfg.duration))


def _run_baseline(signal: StepSignal, period: float, duration: float, y0, evalfn) -> Trajectory:
    """Shared planner loop: replan from the current position at every event."""
    if not isinstance(signal, StepSignal):
        raise TypeError("baselines replan per event and need a StepSignal")
    if y0 is None:
        y0 = signal.at(0.0)
    m = _sample_count(duration, period)
    events = list(signal.events)
    anchor_t = 0.0
    anchor_y = y0
    target = events[0][1]
    next_ev = 1
    points = []
    for i in range(m):
        t_i = i * period
        while next_ev < len(events) and events[next_ev][0] <= t_i + 1e-9:
            ev_t, ev_target = events[next_ev]
            anchor_y = evalfn(anchor_y, target, max(ev_t - anchor_t, 0.0))
            anchor_t = ev_t
            target = ev_target
            next_ev += 1
        points.append(evalfn(anchor_y, target, max(t_i - anchor_t, 0.0)))
    return Trajectory.from_points(period, points)


def run_constant_speed(
    signal: StepSignal,
    c: float,
    period: float,
    duration: float,
    y0: HPoint | None = None,
) -> Trajectory:
    """Constant-speed baseline over a step signal, replanning at each event."""
    return _run_baseline(
        signal, period, duration, y0, lambda y, x, dt: constant_speed_eval(y, x, c, dt)
    )


def run_easing(
    signal: StepSignal,
    cfg: EasingConfig,
    period: float,
    duration: float,
    y0: HPoint | None = None,
) -> Trajectory:
    """Easing baseline over a step signal, restarting the curve at each event."""
    return _run_baseline(
        signal, period, duration, y0, lambda y, x, dt: easing_eval(y, x, cfg, dt)
    )
