"""Scenario and filter-config files: JSON schema, validation, built-ins.

A scenario file describes a target signal over a viewport:

    {
      "name": "two-interruption",
      "dimension": 2,
      "viewport": {"theta_deg": [90.0]},
      "rate": 60.0,
      "duration": 6.0,
      "events": [
        {"t": 0.0, "camera": {"u": [0.0], "v": 1.0}},
        {"t": 1.0, "span": {"lo": [-2.0], "hi": [8.0]}}
      ]
    }

Event targets are either explicit cameras or world spans resolved through
the viewport.  A filter config lists cascade stages and a rate or period:

    {"rate": 60.0, "stages": [{"type": "clipped-one-pole", "alpha": 6.0, "c": 1.0},
                              {"type": "one-pole", "alpha": 6.0}]}

All validation failures raise ScenarioError naming the offending field.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .filters import ClippedOnePole, FilterConfig, OnePole, StepSignal, TwoPole
from .geometry import HPoint
from .viewspace import Viewport, camera_from_span

__all__ = [
    "ScenarioError",
    "Scenario",
    "parse_scenario",
    "load_scenario",
    "parse_filter_config",
    "load_filter_config",
    "default_filter_config",
    "BUILTIN_SCENARIOS",
    "two_interruption_scenario",
    "zoom_out_in_scenario",
]


class ScenarioError(ValueError):
    """A scenario or filter-config document failed validation."""


@dataclass(frozen=True)
class Scenario:
    name: str
    viewport: Viewport
    rate: float
    duration: float
    signal: StepSignal

    def __post_init__(self):
        if not (math.isfinite(self.rate) and self.rate > 0.0):
            raise ValueError(f"rate must be positive, got {self.rate!r}")
        if not (math.isfinite(self.duration) and self.duration > 0.0):
            raise ValueError(f"duration must be positive, got {self.duration!r}")
        last_t = self.signal.events[-1][0]
        if last_t > self.duration:
            raise ValueError(
                f"event at t={last_t} falls outside duration {self.duration}"
            )
        if self.signal.dim != self.viewport.dim:
            raise ValueError(
                f"signal dimension {self.signal.dim} != viewport dimension {self.viewport.dim}"
            )

    @property
    def period(self) -> float:
        return 1.0 / self.rate

    @property
    def dim(self) -> int:
        return self.signal.dim


def _need(doc: dict, key: str, where: str):
    if key not in doc:
        raise ScenarioError(f"{where}: missing required field '{key}'")
    return doc[key]


def _number(value, where: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ScenarioError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _vector(value, where: str) -> list:
    if not isinstance(value, list) or not value:
        raise ScenarioError(f"{where}: expected a nonempty array, got {value!r}")
    return [_number(x, f"{where}[{i}]") for i, x in enumerate(value)]


def _parse_viewport(doc, where: str) -> Viewport:
    if not isinstance(doc, dict):
        raise ScenarioError(f"{where}: expected an object, got {doc!r}")
    if ("theta" in doc) == ("theta_deg" in doc):
        raise ScenarioError(f"{where}: provide exactly one of 'theta' or 'theta_deg'")
    if "theta" in doc:
        angles = _vector(doc["theta"], f"{where}.theta")
    else:
        angles = [math.radians(a) for a in _vector(doc["theta_deg"], f"{where}.theta_deg")]
    try:
        return Viewport(tuple(angles))
    except ValueError as exc:
        raise ScenarioError(f"{where}: {exc}") from None


def _parse_camera(doc, where: str) -> HPoint:
    if not isinstance(doc, dict):
        raise ScenarioError(f"{where}: expected an object, got {doc!r}")
    u = _vector(_need(doc, "u", where), f"{where}.u")
    v = _number(_need(doc, "v", where), f"{where}.v")
    try:
        return HPoint(u, v)
    except ValueError as exc:
        raise ScenarioError(f"{where}: {exc}") from None


def _parse_event(doc, viewport: Viewport, where: str):
    if not isinstance(doc, dict):
        raise ScenarioError(f"{where}: expected an object, got {doc!r}")
    t = _number(_need(doc, "t", where), f"{where}.t")
    if t < 0.0:
        raise ScenarioError(f"{where}.t: must be >= 0, got {t}")
    has_camera = "camera" in doc
    has_span = "span" in doc
    if has_camera == has_span:
        raise ScenarioError(f"{where}: provide exactly one of 'camera' or 'span'")
    if has_camera:
        return t, _parse_camera(doc["camera"], f"{where}.camera")
    span = doc["span"]
    if not isinstance(span, dict):
        raise ScenarioError(f"{where}.span: expected an object, got {span!r}")
    lo = _vector(_need(span, "lo", f"{where}.span"), f"{where}.span.lo")
    hi = _vector(_need(span, "hi", f"{where}.span"), f"{where}.span.hi")
    try:
        return t, camera_from_span(lo, hi, viewport)
    except ValueError as exc:
        raise ScenarioError(f"{where}.span: {exc}") from None


def parse_scenario(doc: dict, source: str = "scenario") -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioError(f"{source}: top level must be an object")
    name = _need(doc, "name", source)
    if not isinstance(name, str) or not name:
        raise ScenarioError(f"{source}.name: expected a nonempty string")
    viewport = _parse_viewport(_need(doc, "viewport", source), f"{source}.viewport")
    rate = _number(_need(doc, "rate", source), f"{source}.rate")
    duration = _number(_need(doc, "duration", source), f"{source}.duration")
    events_doc = _need(doc, "events", source)
    if not isinstance(events_doc, list) or not events_doc:
        raise ScenarioError(f"{source}.events: expected a nonempty array")
    dimension = doc.get("dimension")
    if dimension is not None and dimension != viewport.dim + 1:
        raise ScenarioError(
            f"{source}.dimension: {dimension} does not match viewport "
            f"({viewport.dim} axis -> n = {viewport.dim + 1})"
        )
    events = [
        _parse_event(e, viewport, f"{source}.events[{i}]") for i, e in enumerate(events_doc)
    ]
    try:
        signal = StepSignal(tuple(events))
        return Scenario(name, viewport, rate, duration, signal)
    except ValueError as exc:
        raise ScenarioError(f"{source}: {exc}") from None


def load_scenario(path) -> Scenario:
    """Load a scenario from a JSON file or by built-in name."""
    key = str(path)
    if key in BUILTIN_SCENARIOS:
        return BUILTIN_SCENARIOS[key]()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ScenarioError(
            f"{path}: cannot read scenario ({exc}); "
            f"built-in names: {', '.join(sorted(BUILTIN_SCENARIOS))}"
        ) from None
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON: {exc}") from None
    return parse_scenario(doc, source=str(path))


_STAGE_KEYS = {
    "one-pole": {"type", "alpha"},
    "clipped-one-pole": {"type", "alpha", "c"},
    "two-pole": {"type", "omega0", "zeta"},
}


def _parse_stage(doc, where: str):
    if not isinstance(doc, dict):
        raise ScenarioError(f"{where}: expected an object, got {doc!r}")
    kind = _need(doc, "type", where)
    if kind not in _STAGE_KEYS:
        raise ScenarioError(
            f"{where}.type: unknown stage type {kind!r}; "
            f"valid: {', '.join(sorted(_STAGE_KEYS))}"
        )
    extra = set(doc) - _STAGE_KEYS[kind]
    if extra:
        raise ScenarioError(f"{where}: unexpected fields {sorted(extra)} for type {kind!r}")
    try:
        if kind == "one-pole":
            return OnePole(_number(_need(doc, "alpha", where), f"{where}.alpha"))
        if kind == "clipped-one-pole":
            return ClippedOnePole(
                _number(_need(doc, "alpha", where), f"{where}.alpha"),
                _number(doc.get("c", 1.0), f"{where}.c"),
            )
        return TwoPole(
            _number(_need(doc, "omega0", where), f"{where}.omega0"),
            _number(doc.get("zeta", 1.0), f"{where}.zeta"),
        )
    except ValueError as exc:
        raise ScenarioError(f"{where}: {exc}") from None


def parse_filter_config(doc: dict, source: str = "filter", rate: float | None = None) -> FilterConfig:
    """Parse a filter config; `rate` overrides the document's own rate/period."""
    if not isinstance(doc, dict):
        raise ScenarioError(f"{source}: top level must be an object")
    if rate is not None:
        period = 1.0 / rate
    else:
        if ("rate" in doc) == ("period" in doc):
            raise ScenarioError(f"{source}: provide exactly one of 'rate' or 'period'")
        if "rate" in doc:
            r = _number(doc["rate"], f"{source}.rate")
            if r <= 0.0:
                raise ScenarioError(f"{source}.rate: must be positive, got {r}")
            period = 1.0 / r
        else:
            period = _number(doc["period"], f"{source}.period")
    stages_doc = _need(doc, "stages", source)
    if not isinstance(stages_doc, list) or not stages_doc:
        raise ScenarioError(f"{source}.stages: expected a nonempty array")
    stages = [_parse_stage(s, f"{source}.stages[{i}]") for i, s in enumerate(stages_doc)]
    try:
        return FilterConfig(tuple(stages), period)
    except ValueError as exc:
        raise ScenarioError(f"{source}: {exc}") from None


def load_filter_config(path, rate: float | None = None) -> FilterConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ScenarioError(f"{path}: cannot read filter config ({exc})") from None
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON: {exc}") from None
    return parse_filter_config(doc, source=str(path), rate=rate)


def default_filter_config(rate: float = 60.0) -> FilterConfig:
    """The shipped default: clipped stage at c = 1 Hz, then three plain
    one-pole stages, all with alpha = 6 Hz, at sixty steps per second."""
    return FilterConfig(
        (ClippedOnePole(6.0, 1.0), OnePole(6.0), OnePole(6.0), OnePole(6.0)),
        1.0 / rate,
    )


def two_interruption_scenario() -> Scenario:
    """A flight interrupted twice: redirect at t=1 s mid-approach and again
    at t=3 s while the slower techniques are still in transit."""
    a = HPoint([0.0], 1.0)
    b = HPoint([3.0], 1.0)
    c = HPoint([1.0], 0.5)
    signal = StepSignal(((0.0, a), (1.0, b), (3.0, c)))
    return Scenario("two-interruption", Viewport((math.pi / 2.0,)), 60.0, 6.0, signal)


def zoom_out_in_scenario() -> Scenario:
    """A single long jump that forces the zoom-out-then-in geodesic shape."""
    a = HPoint([0.0], 1.0)
    b = HPoint([40.0], 1.0)
    signal = StepSignal(((0.0, a), (0.5, b)))
    return Scenario("zoom-out-in", Viewport((math.pi / 2.0,)), 60.0, 8.0, signal)


BUILTIN_SCENARIOS = {
    "two-interruption": two_interruption_scenario,
    "zoom-out-in": zoom_out_in_scenario,
}
