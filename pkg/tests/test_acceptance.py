"""Release gate: one test per promised behavior, one printed verdict line each.

Every test prints "[ACCEPTANCE] <name>: PASS/FAIL" on a stream that survives
pytest's capture, so a plain `pytest -v` run shows the full scorecard.
"""

import json
import math
import time

import numpy as np
import pytest

from hypercam import (
    ClippedOnePole,
    DiagramConfig,
    FilterConfig,
    HPoint,
    HVector,
    OnePole,
    StepSignal,
    Trajectory,
    TwoPole,
    default_filter_config,
    discontinuity_scan,
    dist,
    exp_map,
    gerp,
    hnorm,
    log_map,
    covariant_derivative,
    pathline_membership,
    pathlines,
    render_worldscreen_svg,
    rms_flow,
    run_filter,
    run_filter_stages,
    integrate_ct,
    theta_from_rho,
    transport,
    two_interruption_scenario,
    v_to_w,
    velocity_jumps,
)
from hypercam.cli import main as cli_main, run_technique
from oracles import (
    dist_oracle_bulk,
    scalar_cascade,
    scalar_two_pole,
)

T60 = 1.0 / 60.0

_CAPSYS = None


@pytest.fixture(autouse=True)
def _live_scorecard(capsys):
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def _report(name: str, violations: list, detail: str = ""):
    ok = not violations
    line = f"[ACCEPTANCE] {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    if not ok:
        line += " :: " + "; ".join(str(v) for v in violations[:4])
    if _CAPSYS is not None:
        with _CAPSYS.disabled():
            print(line)
    else:
        print(line)
    assert ok, line


def test_distance_oracle():
    rng = np.random.default_rng(20260822)
    n = 100_000
    violations = []
    started = time.perf_counter()
    for dim in (1, 2):
        m = n // 2
        u0 = rng.uniform(-50.0, 50.0, (m, dim))
        u1 = rng.uniform(-50.0, 50.0, (m, dim))
        v0 = np.exp(rng.uniform(math.log(1e-3), math.log(1e3), m))
        v1 = np.exp(rng.uniform(math.log(1e-3), math.log(1e3), m))
        got = np.array(
            [dist(HPoint(u0[i], v0[i]), HPoint(u1[i], v1[i])) for i in range(m)]
        )
        expect = dist_oracle_bulk(u0, v0, u1, v1)
        err = np.abs(got - expect)
        tol = 1e-9 * (1.0 + expect)
        bad = int(np.sum(err > tol))
        if bad:
            worst = int(np.argmax(err - tol))
            violations.append(
                f"dim {dim}: {bad} pairs over tolerance, worst err {err[worst]:.3g}"
            )
    elapsed = time.perf_counter() - started
    if elapsed >= 5.0:
        violations.append(f"runtime {elapsed:.2f}s >= 5s")
    _report("distance-oracle", violations, f"{n} pairs in {elapsed:.2f}s")


def test_worked_values():
    violations = []
    d = dist(HPoint([0.0], 1.0), HPoint([2.0], 1.0))
    if abs(d - math.acosh(3.0)) > 1e-12 or abs(d - 1.7627471740) > 1e-9:
        violations.append(f"dist((0,1),(2,1)) = {d!r}")
    mid = gerp(HPoint([0.0], 1.0), HPoint([2.0], 1.0), 0.5)
    if abs(mid.u[0] - 1.0) > 1e-9 or abs(mid.v - math.sqrt(2.0)) > 1e-9:
        violations.append(f"midpoint = ({mid.u[0]!r}, {mid.v!r})")
    dv = dist(HPoint([0.0], 1.0), HPoint([0.0], math.e))
    if abs(dv - 1.0) > 4e-16:
        violations.append(f"vertical dist = {dv!r}")
    _report("worked-values", violations)


def test_inverse_identity_suite():
    rng = np.random.default_rng(7)
    cases = 10_000
    violations = []

    def rand_point():
        u = rng.uniform(-50.0, 50.0, 1)
        v = math.exp(rng.uniform(math.log(1e-2), math.log(1e2)))
        return HPoint(u, v)

    worst_inv = worst_gerp = worst_iso = 0.0
    for _ in range(cases):
        x, y = rand_point(), rand_point()
        S = dist(x, y)
        worst_inv = max(worst_inv, dist(exp_map(log_map(x, y)), y) / (1.0 + S))
        t = rng.uniform(0.0, 1.0)
        worst_gerp = max(
            worst_gerp,
            dist(exp_map(t * log_map(x, y)), gerp(x, y, t)) / (1.0 + S),
        )
        X = HVector(x, rng.uniform(-3.0, 3.0, 1), float(rng.uniform(-3.0, 3.0)))
        nx = hnorm(X)
        worst_iso = max(worst_iso, abs(hnorm(transport(X, y)) - nx) / (nx + 1e-300))
    if worst_inv > 1e-12:
        violations.append(f"exp(log) error {worst_inv:.3g} > 1e-12")
    if worst_gerp > 1e-12:
        violations.append(f"exp(t*log) vs gerp error {worst_gerp:.3g} > 1e-12")
    if worst_iso > 1e-12:
        violations.append(f"transport isometry error {worst_iso:.3g} > 1e-12")
    _report(
        "inverse-identity",
        violations,
        f"{cases} cases each, worst {max(worst_inv, worst_gerp, worst_iso):.2g}",
    )


def test_geodesic_equation():
    rng = np.random.default_rng(11)
    h = 1e-5
    violations = []
    worst = 0.0
    for _ in range(50):
        x = HPoint(rng.uniform(-5.0, 5.0, 2), math.exp(rng.uniform(-1.5, 1.5)))
        y = HPoint(rng.uniform(-5.0, 5.0, 2), math.exp(rng.uniform(-1.5, 1.5)))
        if dist(x, y) < 1e-3:
            continue
        for t0 in (0.25, 0.5, 0.75):
            p0 = gerp(x, y, t0)
            pm = gerp(x, y, t0 - h)
            pp = gerp(x, y, t0 + h)
            udot = (pp.u - pm.u) / (2 * h)
            vdot = (pp.v - pm.v) / (2 * h)
            uddot = (pp.u - 2 * p0.u + pm.u) / h**2
            vddot = (pp.v - 2 * p0.v + pm.v) / h**2
            vel = HVector(p0, udot, vdot)
            acc = covariant_derivative(p0, (udot, vdot), vel, (uddot, vddot))
            ratio = hnorm(acc) / hnorm(vel)
            worst = max(worst, ratio)
            if ratio > 1e-3:
                violations.append(f"accel/vel = {ratio:.3g} at t0={t0}")
    _report("geodesic-equation", violations, f"worst accel/vel {worst:.2g}")


def test_uw_equivalence():
    violations = []
    err = abs(theta_from_rho(math.sqrt(2.0)) - math.pi / 2.0)
    if err > 1e-12:
        violations.append(f"theta(sqrt 2) off pi/2 by {err:.3g}")
    for v in (1e-3, 0.37, 1.0, 42.0, 1e3):
        if v_to_w(v, 1.0) != v:
            violations.append(f"rho=1: w({v}) = {v_to_w(v, 1.0)} != v")
    _report("uw-equivalence", violations)


def test_one_pole_decay_law():
    violations = []
    x = HPoint([3.0], 0.5)
    for b in (0.1, 0.5, 0.9):
        y = HPoint([0.0], 1.0)
        S = dist(y, x)
        for i in range(1, 120):
            y = gerp(y, x, b)
            expect = (1.0 - b) ** i * S
            if abs(dist(y, x) - expect) > 1e-9 * (1.0 + expect):
                violations.append(f"b={b} step {i}")
                break
    default_b = [s.alpha * default_filter_config().period for s in default_filter_config().stages]
    if any(abs(b - 0.1) > 1e-15 for b in default_b):
        violations.append(f"default stage gains {default_b} != 0.1")
    _report("one-pole-decay", violations)


def test_stability_boundary():
    violations = []
    x = HPoint([2.0], 1.0)

    # b = 1.5: converges, alternating sides
    y = HPoint([0.0], 1.0)
    gaps, sides = [dist(y, x)], []
    for _ in range(12):
        y = gerp(y, x, 1.5)
        gaps.append(dist(y, x))
        sides.append(1.0 if y.u[0] > x.u[0] else -1.0)
    if not all(b < a for a, b in zip(gaps, gaps[1:])):
        violations.append("b=1.5 did not contract monotonically")
    if any(a == b for a, b in zip(sides, sides[1:])):
        violations.append("b=1.5 did not alternate sides")

    # b = 2.5: distance strictly increases for >= 10 consecutive steps
    y = HPoint([1.9], 1.0)
    gaps = [dist(y, x)]
    for _ in range(11):
        y = gerp(y, x, 2.5)
        gaps.append(dist(y, x))
    increases = sum(b > a for a, b in zip(gaps, gaps[1:]))
    if increases < 10:
        violations.append(f"b=2.5 grew only {increases} consecutive steps")
    _report("stability-boundary", violations)


def test_scalar_reduction_oracle():
    violations = []
    steps = 600
    q_target = 3.0
    sig = StepSignal(((0.0, HPoint([0.0], math.exp(q_target))),))
    y0 = HPoint([0.0], 1.0)
    duration = steps * T60

    b = 0.1
    for stages in (1, 2, 4):
        cfg = FilterConfig((OnePole(b / T60),) * stages, T60)
        traj = run_filter(sig, cfg, duration, y0=y0)
        expect = scalar_cascade(0.0, q_target, b, stages, steps)
        err = np.max(np.abs(np.log(traj.v) - expect))
        if np.any(traj.u != 0.0):
            violations.append(f"{stages}-stage cascade left the vertical line")
        if err > 1e-6:
            violations.append(f"{stages}-stage cascade err {err:.3g} > 1e-6")

    overshoots = {}
    for zeta in (0.5, 1.0, 2.0):
        cfg = FilterConfig((TwoPole(6.0, zeta),), T60)
        traj = run_filter(sig, cfg, duration, y0=y0)
        expect = scalar_two_pole(0.0, q_target, 6.0, zeta, T60, steps)
        err = np.max(np.abs(np.log(traj.v) - expect))
        if err > 1e-6:
            violations.append(f"two-pole zeta={zeta} err {err:.3g} > 1e-6")
        overshoots[zeta] = float(np.max(np.log(traj.v))) - q_target
    if overshoots[0.5] < 1e-3:
        violations.append(f"zeta=0.5 should overshoot, got {overshoots[0.5]:.3g}")
    for zeta in (1.0, 2.0):
        if overshoots[zeta] > 1e-9:
            violations.append(f"zeta={zeta} overshoots by {overshoots[zeta]:.3g}")
    _report("scalar-reduction", violations, f"600 steps, overshoot(0.5)={overshoots[0.5]:.3f}")


def test_speed_limit():
    violations = []
    origin1 = HPoint([0.0], 1.0)
    origin2 = HPoint([0.0, 0.0], 1.0)
    scenarios = [
        ("far-pan", origin1, HPoint([2000.0], 1.0), 1.0, 25.0),
        ("far-pan-fast", origin1, HPoint([2000.0], 1.0), 2.5, 12.0),
        ("zoom-out", origin1, HPoint([0.0], 1.0e3), 1.0, 10.0),
        ("zoom-in", origin1, HPoint([0.0], 1.0e-3), 1.0, 10.0),
        ("diagonal-2d", origin2, HPoint([1200.0, -1600.0], 0.5), 1.0, 22.0),
    ]
    worst_overall = 0.0
    for name, y0, target, c, duration in scenarios:
        sig = StepSignal(((0.0, y0), (5 * T60, target)))
        cfg = FilterConfig((ClippedOnePole(6.0, c),), T60)
        traj = run_filter(sig, cfg, duration)
        steps = [dist(traj.point(i - 1), traj.point(i)) for i in range(1, len(traj))]
        worst = max(steps)
        excess = worst - T60 * c
        worst_overall = max(worst_overall, excess)
        if excess > 1e-12:
            violations.append(f"{name}: step exceeds T*c by {excess:.3g}")

    # interruption storm through the full default cascade
    ev = [(0.0, origin1)]
    flip = [HPoint([1500.0], 1.0), HPoint([0.0], 1.0e-2), HPoint([-1500.0], 1.0)]
    for k in range(1, 6):
        ev.append((float(k), flip[k % 3]))
    sig = StepSignal(tuple(ev))
    traj, stages = run_filter_stages(sig, default_filter_config(), 8.0)
    clipped = stages[0]
    steps = [dist(clipped.point(i - 1), clipped.point(i)) for i in range(1, len(clipped))]
    excess = max(steps) - T60 * 1.0
    worst_overall = max(worst_overall, excess)
    if excess > 1e-12:
        violations.append(f"interruption storm: step exceeds T*c by {excess:.3g}")
    _report("speed-limit", violations, f"worst excess {worst_overall:.2g}")


def test_interruption_smoothness():
    violations = []
    sc = two_interruption_scenario()
    filt, _, _ = run_technique("clipped-cascaded-one-pole", sc)
    base, _, _ = run_technique("constant-speed", sc)
    jumps_f, _ = velocity_jumps(filt)
    jumps_b, _ = velocity_jumps(base)
    ratios = []
    for e in (60, 180):  # event samples at t = 1 s and t = 3 s
        window = slice(e - 2, e + 1)
        jf = float(np.max(jumps_f[window]))
        jb = float(np.max(jumps_b[window]))
        ratios.append(jf / jb)
        if jf >= 0.02 * jb:
            violations.append(f"event at sample {e}: jump ratio {jf / jb:.4f} >= 2%")
    easing, _, _ = run_technique("easing", sc)
    found = discontinuity_scan(easing, 0.2)
    if not any(abs(t - 3.0) < 1e-9 for t, _ in found):
        violations.append(f"easing jump at t=3 not detected, scan = {found}")
    _report(
        "interruption-smoothness",
        violations,
        f"jump ratios {ratios[0]:.4f}, {ratios[1]:.4f}",
    )


def test_ct_dt_convergence():
    violations = []
    sig = StepSignal(((0.0, HPoint([0.0], 1.0)), (1.0, HPoint([2.0], 1.0))))
    stage = OnePole(6.0)
    duration = 3.0

    def deviations(T):
        dt = run_filter(sig, FilterConfig((stage,), T), duration)
        ct = integrate_ct(stage, sig, T / 100.0, duration)
        per_sample = np.array(
            [dist(dt.point(i), ct.point(100 * i)) for i in range(len(dt))]
        )
        smooth = per_sample[dt.times >= 1.2]
        return float(np.max(per_sample)), float(np.max(smooth))

    full, smooth = zip(*(deviations(T) for T in (1.0 / 30, 1.0 / 60, 1.0 / 120)))
    ratios = [full[0] / full[1], full[1] / full[2]]
    smooth_ratios = [smooth[0] / smooth[1], smooth[1] / smooth[2]]
    for r in ratios:
        if not 1.6 <= r <= 2.4:
            violations.append(f"full-trajectory halving ratio {r:.3f} outside 2 +/- 20%")
    for r in smooth_ratios:
        if not 1.6 <= r <= 2.4:
            violations.append(f"smooth-phase halving ratio {r:.3f} outside 2 +/- 20%")
    _report(
        "ct-dt-convergence",
        violations,
        f"ratios {ratios[0]:.2f}/{ratios[1]:.2f}, smooth {smooth_ratios[0]:.2f}/{smooth_ratios[1]:.2f}",
    )


def test_perceptual_metrics():
    violations = []
    cfg = DiagramConfig()  # r in [-1, 1]

    m = 5
    pan = Trajectory(
        0.1, 0.1 * np.arange(m), np.ones(m),
        du=np.ones((m, 1)), dv=np.zeros(m),
    )
    err = abs(rms_flow(pan, 2, cfg) - 1.0)
    if err > 1e-12:
        violations.append(f"unit pan rms off 1 by {err:.3g}")

    t = 0.1 * np.arange(m)
    v = np.exp(t)
    zoom = Trajectory(0.1, np.zeros(m), v, du=np.zeros((m, 1)), dv=v.copy())
    for i in range(m):
        err = abs(rms_flow(zoom, i, cfg) - 1.0 / math.sqrt(3.0))
        if err > 1e-9:
            violations.append(f"exp zoom rms off 1/sqrt(3) by {err:.3g}")
            break

    # unit-speed geodesic traversal, 90 degree view: rms stays near constant
    n = 200
    sigma = np.linspace(-0.35, 0.35, n + 1)
    period = float(sigma[1] - sigma[0])
    vg = 1.0 / np.cosh(sigma)
    geo_traj = Trajectory(
        period,
        np.tanh(sigma),
        vg,
        du=(vg**2)[:, None],
        dv=-vg * np.tanh(sigma),
    )
    series = np.array([rms_flow(geo_traj, i, cfg) for i in range(n + 1)])
    spread = float(np.max(series) / np.min(series))
    if spread > 1.05:
        violations.append(f"geodesic rms max/min {spread:.4f} > 1.05")
    _report("perceptual-metrics", violations, f"geodesic rms spread {spread:.4f}")


def test_pathline_algorithm():
    violations = []
    sc = two_interruption_scenario()
    traj, _, _ = run_technique("clipped-cascaded-one-pole", sc)
    cfg = DiagramConfig()
    lines = pathlines(traj, cfg)
    du, dv = traj.derivatives()
    vertices = 0
    for pl in lines.pathlines:
        for idx, r in zip(pl.indices, pl.r):
            vertices += 1
            if not pathline_membership(
                pl.value, float(r), float(traj.v[idx]), float(dv[idx]),
                float(du[idx, 0]), cfg.alpha_iso,
            ):
                violations.append(f"vertex (p={pl.value}, i={idx}) fails membership")
                break

    m = 5
    static = Trajectory(
        0.1, np.zeros(m), np.ones(m), du=np.zeros((m, 1)), dv=np.zeros(m)
    )
    values = [pl.value for pl in pathlines(static, cfg).pathlines]
    if values != [0.25 * k for k in range(-4, 5)]:
        violations.append(f"static pathlines at {values}")

    again = pathlines(traj, cfg)
    same = len(again) == len(lines) and all(
        a.value == b.value
        and np.array_equal(a.indices, b.indices)
        and np.array_equal(a.r, b.r)
        for a, b in zip(lines.pathlines, again.pathlines)
    )
    if not same:
        violations.append("pathline extraction not deterministic")
    if render_worldscreen_svg(traj, cfg) != render_worldscreen_svg(traj, cfg):
        violations.append("SVG render not deterministic")
    _report("pathline-algorithm", violations, f"{vertices} vertices checked")


def test_end_to_end_compare(tmp_path):
    violations = []
    out = tmp_path / "cmp"
    started = time.perf_counter()
    code = cli_main(["compare", "--scenario", "two-interruption", "--out", str(out)])
    elapsed = time.perf_counter() - started
    if code != 0:
        violations.append(f"exit code {code}")
    else:
        svgs = sorted(p.name for p in tmp_path.glob("*.svg"))
        if len(svgs) != 4:
            violations.append(f"expected 4 SVGs, got {svgs}")
        report = json.loads((tmp_path / "cmp-report.json").read_text())
        counts = {
            name: entry["discontinuity_count"]
            for name, entry in report["techniques"].items()
        }
        if counts.get("constant-speed", 0) < 1:
            violations.append(f"constant-speed count {counts.get('constant-speed')}")
        if counts.get("easing", 0) < 1:
            violations.append(f"easing count {counts.get('easing')}")
        if counts.get("cascaded-one-pole") != 0:
            violations.append(f"cascaded count {counts.get('cascaded-one-pole')}")
        if counts.get("clipped-cascaded-one-pole") != 0:
            violations.append(f"clipped count {counts.get('clipped-cascaded-one-pole')}")
    if elapsed >= 10.0:
        violations.append(f"runtime {elapsed:.1f}s >= 10s")
    _report("end-to-end-compare", violations, f"{elapsed:.1f}s")
