"""Sweep sample rates and measure how far the discrete filter sits from the
continuous-time limit.

For each rate the discrete one-pole run is compared against a reference
integration at 100x the rate, on a step-target scenario with one event.
First-order behavior shows up as the max deviation halving when the rate
doubles.
"""

import argparse
import math

import numpy as np

from hypercam import FilterConfig, HPoint, OnePole, StepSignal, dist, integrate_ct, run_filter


def deviation_profile(rate: float, alpha: float, duration: float):
    period = 1.0 / rate
    signal = StepSignal(((0.0, HPoint([0.0], 1.0)), (1.0, HPoint([2.0], 1.0))))
    stage = OnePole(alpha)
    discrete = run_filter(signal, FilterConfig((stage,), period), duration)
    reference = integrate_ct(stage, signal, period / 100.0, duration)
    per_sample = np.array(
        [dist(discrete.point(i), reference.point(100 * i)) for i in range(len(discrete))]
    )
    smooth = per_sample[discrete.times >= 1.2]
    return float(np.max(per_sample)), float(np.max(smooth))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rates", type=float, nargs="+", default=[30.0, 60.0, 120.0, 240.0])
    parser.add_argument("--alpha", type=float, default=6.0, help="one-pole rate constant (Hz)")
    parser.add_argument("--duration", type=float, default=3.0)
    args = parser.parse_args(argv)

    rows = [deviation_profile(r, args.alpha, args.duration) for r in args.rates]
    print(f"{'rate':>8} {'b':>8} {'max dev':>12} {'smooth dev':>12}")
    for rate, (full, smooth) in zip(args.rates, rows):
        print(f"{rate:8.1f} {args.alpha / rate:8.3f} {full:12.3e} {smooth:12.3e}")
    print("\nhalving ratios (doubling the rate):")
    for (r0, (f0, s0)), (r1, (f1, s1)) in zip(zip(args.rates, rows), zip(args.rates[1:], rows[1:])):
        if not math.isclose(r1, 2 * r0):
            continue
        print(f"  {r0:.0f} -> {r1:.0f} Hz: full {f0 / f1:.3f}, smooth {s0 / s1:.3f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
