// Viewport mapping between camera views and the screen, plus the u,w
// altitude convention (w = rho^2 v) used by scale-throttled UIs. A view
// (u, v) shows the world interval u +/- v * tan(theta/2) per axis.

import type { HPoint } from "./geometry.js";

export function thetaFromRho(rho: number): number {
  if (!(Number.isFinite(rho) && rho > 0)) {
    throw new Error(`rho must be finite and positive, got ${rho}`);
  }
  return 2 * Math.atan((rho * rho) / 2);
}

export function rhoFromTheta(theta: number): number {
  if (!(theta > 0 && theta < Math.PI)) {
    throw new Error(`theta must lie in (0, pi), got ${theta}`);
  }
  return Math.sqrt(2 * Math.tan(theta / 2));
}

export function vToW(v: number, rho: number): number {
  return rho * rho * v;
}

export function wToV(w: number, rho: number): number {
  return w / (rho * rho);
}

export interface Viewport {
  theta: number[]; // one angle for 1 world axis, two for 2
}

export function rHalf(viewport: Viewport): number[] {
  return viewport.theta.map((a) => Math.tan(a / 2));
}

export function worldPoint(x: HPoint, r: number[]): number[] {
  return r.map((ri, i) => x.v * ri + x.u[i]);
}

export function screenPoint(x: HPoint, p: number[]): number[] {
  return p.map((pi, i) => (pi - x.u[i]) / x.v);
}

// Smallest camera view whose screen covers the world box [lo, hi]:
// footprint at the box midpoint, altitude = max half-span / r_half.
export function cameraFromSpan(lo: number[], hi: number[], viewport: Viewport): HPoint {
  const half = rHalf(viewport);
  if (lo.length !== half.length || hi.length !== half.length) {
    throw new Error(`span has ${lo.length}/${hi.length} components, viewport has ${half.length}`);
  }
  for (let i = 0; i < lo.length; i++) {
    if (!(lo[i] < hi[i])) {
      throw new Error(`span must satisfy lo < hi per axis, got ${lo} .. ${hi}`);
    }
  }
  const u = lo.map((l, i) => 0.5 * (l + hi[i]));
  let v = 0;
  for (let i = 0; i < lo.length; i++) {
    v = Math.max(v, (0.5 * (hi[i] - lo[i])) / half[i]);
  }
  return { u, v };
}
