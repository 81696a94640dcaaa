import json
import math

import pytest

from hypercam import (
    BUILTIN_SCENARIOS,
    ClippedOnePole,
    OnePole,
    Scenario,
    ScenarioError,
    StepSignal,
    TwoPole,
    Viewport,
    default_filter_config,
    load_filter_config,
    load_scenario,
    parse_filter_config,
    parse_scenario,
    two_interruption_scenario,
    zoom_out_in_scenario,
)
from hypercam.geometry import HPoint


def minimal_doc(**overrides):
    doc = {
        "name": "demo",
        "viewport": {"theta_deg": [90.0]},
        "rate": 60.0,
        "duration": 4.0,
        "events": [
            {"t": 0.0, "camera": {"u": [0.0], "v": 1.0}},
            {"t": 1.0, "span": {"lo": [2.0], "hi": [6.0]}},
        ],
    }
    doc.update(overrides)
    return doc


class TestParseScenario:
    def test_happy_path(self):
        sc = parse_scenario(minimal_doc())
        assert sc.name == "demo"
        assert sc.rate == 60.0 and sc.duration == 4.0
        assert sc.period == pytest.approx(1.0 / 60.0)
        assert sc.dim == 1
        assert len(sc.signal.events) == 2

    def test_span_event_resolved_through_viewport(self):
        sc = parse_scenario(minimal_doc())
        cam = sc.signal.events[1][1]
        # 90 degree view: r_half = 1, so altitude = half span
        assert cam.u[0] == pytest.approx(4.0)
        assert cam.v == pytest.approx(2.0)

    def test_theta_radians_accepted(self):
        sc = parse_scenario(minimal_doc(viewport={"theta": [math.pi / 3]}))
        assert sc.viewport.theta[0] == pytest.approx(math.pi / 3)

    def test_dimension_crosscheck(self):
        assert parse_scenario(minimal_doc(dimension=2)).dim == 1
        with pytest.raises(ScenarioError, match="dimension"):
            parse_scenario(minimal_doc(dimension=3))

    @pytest.mark.parametrize("key", ["name", "viewport", "rate", "duration", "events"])
    def test_missing_field_named(self, key):
        doc = minimal_doc()
        del doc[key]
        with pytest.raises(ScenarioError, match=key):
            parse_scenario(doc)

    def test_error_paths_name_the_field(self):
        doc = minimal_doc()
        doc["events"][1] = {"t": 1.0, "camera": {"u": [0.0], "v": "high"}}
        with pytest.raises(ScenarioError, match=r"events\[1\].camera.v"):
            parse_scenario(doc)

    def test_bool_is_not_a_number(self):
        with pytest.raises(ScenarioError, match="rate"):
            parse_scenario(minimal_doc(rate=True))

    def test_event_needs_exactly_one_target_form(self):
        doc = minimal_doc()
        doc["events"][0] = {
            "t": 0.0,
            "camera": {"u": [0.0], "v": 1.0},
            "span": {"lo": [0.0], "hi": [1.0]},
        }
        with pytest.raises(ScenarioError, match="exactly one"):
            parse_scenario(doc)
        doc["events"][0] = {"t": 0.0}
        with pytest.raises(ScenarioError, match="exactly one"):
            parse_scenario(doc)

    def test_viewport_needs_exactly_one_angle_form(self):
        with pytest.raises(ScenarioError, match="exactly one"):
            parse_scenario(minimal_doc(viewport={"theta": [1.0], "theta_deg": [90.0]}))
        with pytest.raises(ScenarioError, match="exactly one"):
            parse_scenario(minimal_doc(viewport={}))

    def test_negative_event_time(self):
        doc = minimal_doc()
        doc["events"][0]["t"] = -1.0
        with pytest.raises(ScenarioError, match="t"):
            parse_scenario(doc)

    def test_event_after_duration(self):
        doc = minimal_doc(duration=0.5)
        with pytest.raises(ScenarioError, match="duration"):
            parse_scenario(doc)

    def test_signal_viewport_dim_mismatch(self):
        doc = minimal_doc(viewport={"theta_deg": [90.0, 60.0]})
        with pytest.raises(ScenarioError):
            parse_scenario(doc)

    def test_top_level_must_be_object(self):
        with pytest.raises(ScenarioError):
            parse_scenario([1, 2, 3])


class TestLoadScenario:
    def test_builtin_names(self):
        for name in BUILTIN_SCENARIOS:
            sc = load_scenario(name)
            assert sc.name == name

    def test_json_file(self, tmp_path):
        path = tmp_path / "sc.json"
        path.write_text(json.dumps(minimal_doc()))
        assert load_scenario(path).name == "demo"

    def test_missing_file_lists_builtins(self):
        with pytest.raises(ScenarioError, match="two-interruption"):
            load_scenario("/nonexistent/sc.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "sc.json"
        path.write_text("{not json")
        with pytest.raises(ScenarioError, match="invalid JSON"):
            load_scenario(path)


class TestBuiltins:
    def test_two_interruption_shape(self):
        sc = two_interruption_scenario()
        times = [t for t, _ in sc.signal.events]
        assert times == [0.0, 1.0, 3.0]
        assert sc.rate == 60.0 and sc.duration == 6.0
        assert sc.viewport.theta[0] == pytest.approx(math.pi / 2)

    def test_zoom_out_in_shape(self):
        sc = zoom_out_in_scenario()
        assert len(sc.signal.events) == 2
        # the jump is long enough that the direct route is worth a big zoom
        a, b = sc.signal.events[0][1], sc.signal.events[1][1]
        assert abs(b.u[0] - a.u[0]) / max(a.v, b.v) > 10.0


class TestFilterConfigParsing:
    def test_stage_types(self):
        cfg = parse_filter_config(
            {
                "rate": 60.0,
                "stages": [
                    {"type": "clipped-one-pole", "alpha": 6.0, "c": 1.0},
                    {"type": "one-pole", "alpha": 6.0},
                    {"type": "two-pole", "omega0": 6.0, "zeta": 1.0},
                ],
            }
        )
        assert isinstance(cfg.stages[0], ClippedOnePole)
        assert isinstance(cfg.stages[1], OnePole)
        assert isinstance(cfg.stages[2], TwoPole)
        assert cfg.period == pytest.approx(1.0 / 60.0)

    def test_rate_period_exclusive(self):
        stages = [{"type": "one-pole", "alpha": 6.0}]
        with pytest.raises(ScenarioError, match="exactly one"):
            parse_filter_config({"rate": 60.0, "period": 0.1, "stages": stages})
        with pytest.raises(ScenarioError, match="exactly one"):
            parse_filter_config({"stages": stages})

    def test_rate_override_wins(self):
        cfg = parse_filter_config(
            {"rate": 60.0, "stages": [{"type": "one-pole", "alpha": 6.0}]},
            rate=120.0,
        )
        assert cfg.period == pytest.approx(1.0 / 120.0)

    def test_unknown_stage_type_lists_valid(self):
        with pytest.raises(ScenarioError, match="clipped-one-pole"):
            parse_filter_config(
                {"rate": 60.0, "stages": [{"type": "three-pole"}]}
            )

    def test_unexpected_stage_field(self):
        with pytest.raises(ScenarioError, match="unexpected"):
            parse_filter_config(
                {"rate": 60.0, "stages": [{"type": "one-pole", "alpha": 6.0, "cc": 2}]}
            )

    def test_defaults_fill_in(self):
        cfg = parse_filter_config(
            {
                "rate": 60.0,
                "stages": [
                    {"type": "clipped-one-pole", "alpha": 6.0},
                    {"type": "two-pole", "omega0": 6.0},
                ],
            }
        )
        assert cfg.stages[0].c == 1.0
        assert cfg.stages[1].zeta == 1.0

    def test_instability_reported_as_scenario_error(self):
        with pytest.raises(ScenarioError, match="unstable"):
            parse_filter_config(
                {"rate": 1.0, "stages": [{"type": "one-pole", "alpha": 6.0}]}
            )

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(
            json.dumps({"rate": 60.0, "stages": [{"type": "one-pole", "alpha": 6.0}]})
        )
        cfg = load_filter_config(path)
        assert len(cfg.stages) == 1

    def test_load_missing_file(self):
        with pytest.raises(ScenarioError, match="cannot read"):
            load_filter_config("/nonexistent/f.json")

    def test_default_config_shape(self):
        cfg = default_filter_config()
        assert len(cfg.stages) == 4
        assert isinstance(cfg.stages[0], ClippedOnePole)
        assert cfg.stages[0].c == 1.0
        assert all(isinstance(s, OnePole) for s in cfg.stages[1:])
        assert all(s.alpha == 6.0 for s in cfg.stages)
        assert cfg.period == pytest.approx(1.0 / 60.0)


class TestScenarioValidation:
    def test_rate_positive(self):
        sig = StepSignal(((0.0, HPoint([0.0], 1.0)),))
        with pytest.raises(ValueError):
            Scenario("x", Viewport((math.pi / 2,)), 0.0, 1.0, sig)
        with pytest.raises(ValueError):
            Scenario("x", Viewport((math.pi / 2,)), 60.0, -1.0, sig)
