"""Compare techniques on an interruption-heavy scenario.

Prints the screen-velocity jump at each scripted event for every technique,
plus what the discontinuity scan flags end to end. The filters should absorb
interruptions the baselines cannot.
"""

import argparse

import numpy as np

from hypercam import discontinuity_scan, load_scenario, velocity_jumps
from hypercam.cli import TECHNIQUES, run_technique


def event_samples(scenario):
    return [round(t * scenario.rate) for t, _ in scenario.signal.events[1:]]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scenario", default="two-interruption", help="built-in name or JSON path")
    parser.add_argument("--threshold", type=float, default=0.2)
    args = parser.parse_args(argv)

    scenario = load_scenario(args.scenario)
    events = event_samples(scenario)
    if not events:
        parser.error("scenario has no interruptions to study")

    print(f"scenario: {args.scenario}, events at samples {events}")
    header = "technique".ljust(28) + "".join(f"{'jump@' + str(e):>14}" for e in events)
    print(header + f"{'scan hits':>12}")
    rows = {}
    for name in TECHNIQUES:
        traj, _, _ = run_technique(name, scenario)
        jumps, _ = velocity_jumps(traj)
        per_event = [float(np.max(jumps[max(e - 2, 0):e + 1])) for e in events]
        hits = discontinuity_scan(traj, args.threshold)
        rows[name] = per_event
        cells = "".join(f"{j:14.5g}" for j in per_event)
        print(name.ljust(28) + cells + f"{len(hits):>12}")

    base = rows.get("constant-speed")
    if base:
        print("\nratio to constant-speed baseline:")
        for name, per_event in rows.items():
            if name == "constant-speed":
                continue
            cells = "".join(f"{j / b:14.4%}" for j, b in zip(per_event, base))
            print(name.ljust(28) + cells)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
