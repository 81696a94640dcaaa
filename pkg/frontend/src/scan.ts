// Offline screen-space kinematics of an exported camera trace: the screen
// track of the first frame's world center, its finite-difference velocity
// jumps, and a scan that flags jumps large relative to the local speed.

export interface CameraTrace {
  period: number;
  u: number[][]; // [sample][axis]
  v: number[];
}

// Screen coordinates over time of the world point at the first frame's
// center: r[i] = (u[0] - u[i]) / v[i].
export function trackedScreenSeries(trace: CameraTrace): number[][] {
  const u0 = trace.u[0];
  return trace.u.map((ui, i) => u0.map((c, a) => (c - ui[a]) / trace.v[i]));
}

// jumps[j] = |w[j+1] - w[j]| lands at sample j+1; speeds[j] = |w[j]|.
export function velocityJumps(trace: CameraTrace): { jumps: number[]; speeds: number[] } {
  if (trace.v.length < 3) throw new Error("need at least 3 samples to compare velocities");
  const r = trackedScreenSeries(trace);
  const w: number[][] = [];
  for (let i = 0; i + 1 < r.length; i++) {
    w.push(r[i + 1].map((c, a) => (c - r[i][a]) / trace.period));
  }
  const jumps: number[] = [];
  for (let j = 0; j + 1 < w.length; j++) {
    jumps.push(Math.hypot(...w[j + 1].map((c, a) => c - w[j][a])));
  }
  const speeds = w.map((wi) => Math.hypot(...wi));
  return { jumps, speeds };
}

// A jump at sample j+1 counts when it exceeds threshold times the largest
// speed within `window` samples (default a quarter second) around the two
// segments compared, floored at speedFloor. Returns [time, magnitude] pairs.
export function discontinuityScan(
  trace: CameraTrace,
  threshold: number,
  speedFloor = 1e-6,
  window?: number,
): Array<[number, number]> {
  if (!(threshold > 0)) throw new Error(`threshold must be positive, got ${threshold}`);
  const { jumps, speeds } = velocityJumps(trace);
  const win = window ?? Math.max(1, Math.round(0.25 / trace.period));
  const found: Array<[number, number]> = [];
  for (let j = 0; j < jumps.length; j++) {
    const lo = Math.max(0, j - win);
    const hi = Math.min(speeds.length, j + 2 + win);
    let scale = speedFloor;
    for (let k = lo; k < hi; k++) scale = Math.max(scale, speeds[k]);
    if (jumps[j] > threshold * scale) {
      found.push([(j + 1) * trace.period, jumps[j]]);
    }
  }
  return found;
}
