"""Command-line front end: run filters, compare techniques, draw diagrams,
report metrics, emit golden vectors.

Exit codes: 0 success, 1 validation error (bad file, bad field, unknown
name), 2 runtime/numeric error.  All output files are deterministic for
identical inputs; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from .diagrams import (
    DiagramConfig,
    discontinuity_scan,
    render_worldscreen_svg,
    rms_flow_series,
)
from .filters import (
    ClippedOnePole,
    EasingConfig,
    FilterConfig,
    OnePole,
    StepSignal,
    TwoPole,
    run_constant_speed,
    run_easing,
    run_filter,
    run_filter_stages,
)
from .geometry import HPoint, dist, exp_map, geo, gerp, log_map, transport, HVector
from .scenarios import (
    BUILTIN_SCENARIOS,
    ScenarioError,
    Scenario,
    default_filter_config,
    load_filter_config,
    load_scenario,
)
from .trajectory import (
    Trajectory,
    TrajectoryFormatError,
    read_trajectory_csv,
    write_trajectory_csv,
)

DEFAULT_SPEED = 1.0
DEFAULT_EASING_DURATION = 2.5
DEFAULT_THRESHOLD = 0.2
COMPARE_TECHNIQUES = (
    "constant-speed",
    "easing",
    "cascaded-one-pole",
    "clipped-cascaded-one-pole",
)
TECHNIQUES = COMPARE_TECHNIQUES + ("two-pole", "clipped-two-pole")


def _technique_config(name: str, period: float) -> FilterConfig:
    if name == "cascaded-one-pole":
        return FilterConfig((OnePole(6.0),) * 4, period)
    if name == "clipped-cascaded-one-pole":
        return default_filter_config(1.0 / period)
    if name == "two-pole":
        return FilterConfig((TwoPole(6.0, 1.0),), period)
    if name == "clipped-two-pole":
        return FilterConfig((ClippedOnePole(6.0, 1.0), TwoPole(6.0, 1.0)), period)
    raise ScenarioError(
        f"unknown technique {name!r}; valid: {', '.join(TECHNIQUES)}"
    )


def run_technique(name: str, scenario: Scenario):
    """Run one named technique on a scenario.

    Returns (trajectory, filter config or None, stage trajectories or None).
    """
    signal = scenario.signal
    period = scenario.period
    if name == "constant-speed":
        return run_constant_speed(signal, DEFAULT_SPEED, period, scenario.duration), None, None
    if name == "easing":
        cfg = EasingConfig(DEFAULT_EASING_DURATION)
        return run_easing(signal, cfg, period, scenario.duration), None, None
    cfg = _technique_config(name, period)
    traj, stages = run_filter_stages(signal, cfg, scenario.duration)
    return traj, cfg, stages


def max_clipped_step(cfg: FilterConfig, stage_trajs) -> float | None:
    """Largest per-step hyperbolic displacement over all clipped stages."""
    best = None
    for stage, st in zip(cfg.stages, stage_trajs):
        if not isinstance(stage, ClippedOnePole):
            continue
        worst = 0.0
        for i in range(1, len(st)):
            worst = max(worst, dist(st.point(i - 1), st.point(i)))
        best = worst if best is None else max(best, worst)
    return best


def _diagram_config(args, scenario: Scenario | None = None) -> DiagramConfig:
    if getattr(args, "theta", None) is not None:
        theta = math.radians(args.theta)
    elif scenario is not None:
        theta = scenario.viewport.theta[0]
    else:
        theta = math.pi / 2.0
    if not 0.0 < theta < math.pi:
        raise ScenarioError(f"--theta: must be in (0, 180) degrees, got {args.theta}")
    r_half = math.tan(theta / 2.0)
    return DiagramConfig(
        alpha_iso=args.alpha_iso, r_lo=-r_half, r_hi=r_half, r_half=r_half
    )


def _metrics_payload(traj: Trajectory, dcfg: DiagramConfig, threshold: float) -> dict:
    rms = rms_flow_series(traj, dcfg)
    disc = discontinuity_scan(traj, threshold)
    return {
        "samples": len(traj),
        "duration": traj.duration,
        "rms_flow": {"mean": float(np.mean(rms)), "max": float(np.max(rms))},
        "discontinuity_count": len(disc),
        "discontinuities": [[t, mag] for t, mag in disc],
    }


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _write(path, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _apply_overrides(scenario: Scenario, args) -> Scenario:
    rate = getattr(args, "rate", None)
    duration = getattr(args, "duration", None)
    if rate is None and duration is None:
        return scenario
    try:
        return Scenario(
            scenario.name,
            scenario.viewport,
            rate if rate is not None else scenario.rate,
            duration if duration is not None else scenario.duration,
            scenario.signal,
        )
    except ValueError as exc:
        raise ScenarioError(f"override: {exc}") from None


def cmd_run(args) -> int:
    scenario = _apply_overrides(load_scenario(args.scenario), args)
    if args.filter is None:
        cfg = default_filter_config(scenario.rate)
    else:
        cfg = load_filter_config(args.filter, rate=scenario.rate)
    traj, stages = run_filter_stages(scenario.signal, cfg, scenario.duration)
    csv_path = f"{args.out}.csv"
    write_trajectory_csv(traj, csv_path)
    dcfg = _diagram_config(args, scenario)
    payload = {
        "scenario": scenario.name,
        "rate": scenario.rate,
        "trajectory": csv_path,
        "max_clipped_step": max_clipped_step(cfg, stages),
        **_metrics_payload(traj, dcfg, args.threshold),
    }
    _write(f"{args.out}.report.json", _dump_json(payload))
    return 0


def cmd_compare(args) -> int:
    scenario = _apply_overrides(load_scenario(args.scenario), args)
    names = [t.strip() for t in args.techniques.split(",") if t.strip()]
    if not names:
        raise ScenarioError("--techniques: need at least one technique")
    for name in names:
        if name not in TECHNIQUES:
            raise ScenarioError(
                f"unknown technique {name!r}; valid: {', '.join(TECHNIQUES)}"
            )
    dcfg = _diagram_config(args, scenario)
    report = {"scenario": scenario.name, "threshold": args.threshold, "techniques": {}}
    for name in names:
        traj, cfg, stages = run_technique(name, scenario)
        csv_path = f"{args.out}-{name}.csv"
        svg_path = f"{args.out}-{name}.svg"
        write_trajectory_csv(traj, csv_path)
        _write(svg_path, render_worldscreen_svg(traj, dcfg, target=scenario.signal))
        entry = {
            "csv": csv_path,
            "svg": svg_path,
            "max_clipped_step": max_clipped_step(cfg, stages) if cfg is not None else None,
            **_metrics_payload(traj, dcfg, args.threshold),
        }
        report["techniques"][name] = entry
    _write(f"{args.out}-report.json", _dump_json(report))
    return 0


def cmd_diagram(args) -> int:
    traj = read_trajectory_csv(args.traj)
    dcfg = _diagram_config(args)
    _write(args.out, render_worldscreen_svg(traj, dcfg))
    return 0


def cmd_metrics(args) -> int:
    traj = read_trajectory_csv(args.traj)
    dcfg = _diagram_config(args)
    text = _dump_json(_metrics_payload(traj, dcfg, args.threshold))
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write(args.out, text)
    return 0


def _point_doc(p: HPoint) -> dict:
    return {"u": p.u.tolist(), "v": p.v}


def _vec_doc(X: HVector) -> dict:
    return {"du": X.du.tolist(), "dv": X.dv}


def _rand_point(rng, dim: int) -> HPoint:
    u = rng.uniform(-5.0, 5.0, dim)
    v = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
    return HPoint(u, v)


def _rand_vec(rng, base: HPoint) -> HVector:
    return HVector(base, rng.uniform(-3.0, 3.0, base.u.size), float(rng.uniform(-3.0, 3.0)))


def golden_vectors(seed: int = 0) -> dict:
    """Canonical cross-implementation test vectors.

    Geometry cases pair inputs with this library's outputs; filter entries
    are 120-step constant-target traces at sixty steps per second.  A port
    that reproduces every number within 1e-6 relative per component agrees
    with the reference on everything that matters downstream.
    """
    rng = np.random.default_rng(seed)
    cases = {k: [] for k in ("dist", "geo", "gerp", "exp_map", "log_map", "transport")}

    specials = [
        (HPoint([0.0], 1.0), HPoint([2.0], 1.0)),  # dist = acosh(3)
        (HPoint([0.0], 1.0), HPoint([0.0], math.e)),  # vertical, dist = 1
        (HPoint([1.0, -2.0], 0.5), HPoint([-3.0, 0.5], 2.0)),
    ]
    pairs = specials + [
        (_rand_point(rng, dim), _rand_point(rng, dim)) for dim in (1, 2) for _ in range(10)
    ]
    for x, y in pairs:
        cases["dist"].append({"x": _point_doc(x), "y": _point_doc(y), "out": dist(x, y)})
        s = dist(x, y)
        for frac in (0.5, -0.25, 1.5):
            cases["geo"].append(
                {"x": _point_doc(x), "y": _point_doc(y), "s": frac * s,
                 "out": _point_doc(geo(x, y, frac * s))}
            )
        for a in (0.25, 0.5, 2.0):
            cases["gerp"].append(
                {"x": _point_doc(x), "y": _point_doc(y), "a": a,
                 "out": _point_doc(gerp(x, y, a))}
            )
        lg = log_map(x, y)
        cases["log_map"].append({"x": _point_doc(x), "y": _point_doc(y), "out": _vec_doc(lg)})
        cases["exp_map"].append(
            {"x": _point_doc(x), "vec": _vec_doc(lg), "out": _point_doc(exp_map(lg))}
        )
        X = _rand_vec(rng, x)
        cases["exp_map"].append(
            {"x": _point_doc(x), "vec": _vec_doc(X), "out": _point_doc(exp_map(X))}
        )
        cases["transport"].append(
            {"x": _point_doc(x), "vec": _vec_doc(X), "y": _point_doc(y),
             "out": _vec_doc(transport(X, y))}
        )

    period = 1.0 / 60.0
    steps = 120
    runs = [
        ("one-pole-b0.1", [{"type": "one-pole", "alpha": 6.0}],
         HPoint([0.0], 1.0), HPoint([2.0], 1.0)),
        ("cascade-4", [{"type": "one-pole", "alpha": 6.0}] * 4,
         HPoint([0.0], 1.0), HPoint([2.0], 1.0)),
        ("clipped-cascade", [{"type": "clipped-one-pole", "alpha": 6.0, "c": 1.0}]
         + [{"type": "one-pole", "alpha": 6.0}] * 3,
         HPoint([0.0], 1.0), HPoint([30.0], 1.0)),
        ("two-pole", [{"type": "two-pole", "omega0": 6.0, "zeta": 1.0}],
         HPoint([0.0], 1.0), HPoint([2.0], 1.0)),
        ("clipped-two-pole", [{"type": "clipped-one-pole", "alpha": 6.0, "c": 1.0},
                              {"type": "two-pole", "omega0": 6.0, "zeta": 1.0}],
         HPoint([0.0], 1.0), HPoint([30.0], 1.0)),
        ("cascade-4-2d", [{"type": "one-pole", "alpha": 6.0}] * 4,
         HPoint([0.0, 0.0], 1.0), HPoint([3.0, -2.0], 0.5)),
    ]
    from .scenarios import parse_filter_config  # late import avoids a cycle

    filters = []
    for name, stage_docs, y0, target in runs:
        cfg = parse_filter_config({"period": period, "stages": stage_docs}, source=name)
        signal = StepSignal(((0.0, target),))
        traj = run_filter(signal, cfg, steps * period, y0=y0)
        filters.append(
            {
                "name": name,
                "period": period,
                "stages": stage_docs,
                "y0": _point_doc(y0),
                "target": _point_doc(target),
                "steps": steps,
                "trace": [[*traj.u[i].tolist(), float(traj.v[i])] for i in range(len(traj))],
            }
        )
    return {
        "schema_version": 1,
        "seed": seed,
        "rate": 60.0,
        "geometry": cases,
        "filters": filters,
    }


def cmd_vectors(args) -> int:
    _write(args.out, _dump_json(golden_vectors(args.seed)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercam",
        description="Hyperbolic camera navigation: filters, diagrams, metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_diagram_flags(p):
        p.add_argument("--alpha-iso", type=float, default=0.25,
                       help="pathline spacing parameter (default 0.25)")
        p.add_argument("--theta", type=float, default=None,
                       help="view angle in degrees (default: scenario viewport or 90)")
        p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                       help="relative velocity-jump detection threshold")

    p_run = sub.add_parser("run", help="run a filter config over a scenario")
    p_run.add_argument("--scenario", required=True,
                       help=f"scenario JSON path or built-in name ({', '.join(sorted(BUILTIN_SCENARIOS))})")
    p_run.add_argument("--filter", default=None, help="filter config JSON (default: shipped config)")
    p_run.add_argument("--out", required=True, help="output prefix")
    p_run.add_argument("--rate", type=float, default=None, help="override scenario rate (Hz)")
    p_run.add_argument("--duration", type=float, default=None, help="override scenario duration (s)")
    add_diagram_flags(p_run)
    p_run.set_defaults(func=cmd_run)

    p_cmp = sub.add_parser("compare", help="run several techniques and render diagrams")
    p_cmp.add_argument("--scenario", required=True)
    p_cmp.add_argument("--out", required=True, help="output prefix")
    p_cmp.add_argument("--techniques", default=",".join(COMPARE_TECHNIQUES),
                       help="comma-separated technique names")
    p_cmp.add_argument("--rate", type=float, default=None)
    p_cmp.add_argument("--duration", type=float, default=None)
    add_diagram_flags(p_cmp)
    p_cmp.set_defaults(func=cmd_compare)

    p_dia = sub.add_parser("diagram", help="render a world/screen SVG from a trajectory CSV")
    p_dia.add_argument("--traj", required=True, help="trajectory CSV path")
    p_dia.add_argument("--out", required=True, help="SVG output path")
    add_diagram_flags(p_dia)
    p_dia.set_defaults(func=cmd_diagram)

    p_met = sub.add_parser("metrics", help="report rms flow and velocity jumps for a CSV")
    p_met.add_argument("--traj", required=True)
    p_met.add_argument("--out", default=None, help="JSON output path (default stdout)")
    add_diagram_flags(p_met)
    p_met.set_defaults(func=cmd_metrics)

    p_vec = sub.add_parser("vectors", help="emit golden test vectors as JSON")
    p_vec.add_argument("--out", required=True)
    p_vec.add_argument("--seed", type=int, default=0)
    p_vec.set_defaults(func=cmd_vectors)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        code = args.func(args)
    except (ScenarioError, TrajectoryFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # numeric/runtime failures
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    print(f"[hypercam] {args.command} finished in {time.perf_counter() - started:.3f}s",
          file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
