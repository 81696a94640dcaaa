// Poincare upper half-space kernel: a camera view is a footprint u (1 or 2
// world axes) plus an altitude v > 0, under the metric ds = ||dx|| / v.
// Geodesics (vertical rays and semicircles meeting v = 0 at right angles)
// are parameterized by arc length through the signed coordinates
//   r_i = asinh((v1^2 - v0^2 +/- ||u1-u0||^2) / (-2 v_i ||u1-u0||)),
// which stay well conditioned when the endpoints nearly share a footprint.

export interface HPoint {
  u: number[];
  v: number;
}

export interface HVec {
  du: number[];
  dv: number;
}

// Relative footprint tolerance below which the vertical-geodesic formulas
// take over; scaled by altitude so the switch is isometry invariant.
export const VERTICAL_EPS = 1e-12;

export function point(u: number[] | number, v: number): HPoint {
  const uu = typeof u === "number" ? [u] : u.slice();
  if (uu.length < 1 || uu.length > 2) {
    throw new Error(`footprint must have 1 or 2 components, got ${uu.length}`);
  }
  if (!uu.every(Number.isFinite) || !Number.isFinite(v) || v <= 0) {
    throw new Error(`invalid view (${uu}, ${v})`);
  }
  return { u: uu, v };
}

export function clonePoint(x: HPoint): HPoint {
  return { u: x.u.slice(), v: x.v };
}

function sub(a: number[], b: number[]): number[] {
  return a.map((ai, i) => ai - b[i]);
}

function norm(a: number[]): number {
  return Math.hypot(...a);
}

function checkPair(x: HPoint, y: HPoint): void {
  if (x.u.length !== y.u.length) {
    throw new Error("points live in spaces of different dimension");
  }
}

function isVertical(delta: number, x: HPoint, y: HPoint): boolean {
  return delta <= VERTICAL_EPS * Math.max(x.v, y.v);
}

// Signed arc-length coordinates (r0, r1) of x and y on their geodesic.
function arcCoords(x: HPoint, y: HPoint, delta: number): [number, number] {
  const gap = y.v * y.v - x.v * x.v;
  const r0 = Math.asinh((gap + delta * delta) / (-2 * x.v * delta));
  const r1 = Math.asinh((gap - delta * delta) / (-2 * y.v * delta));
  return [r0, r1];
}

export function dist(x: HPoint, y: HPoint): number {
  checkPair(x, y);
  const du = sub(y.u, x.u);
  const delta = norm(du);
  if (isVertical(delta, x, y)) {
    return Math.abs(Math.log(y.v / x.v));
  }
  const [r0, r1] = arcCoords(x, y, delta);
  return Math.max(r1 - r0, 0); // clamp shields ulp-level cancellation
}

// Point at arc length s from x along the geodesic toward y; s may exceed
// dist(x, y) or be negative (the parameterization covers the whole line).
export function geo(x: HPoint, y: HPoint, s: number): HPoint {
  checkPair(x, y);
  const du = sub(y.u, x.u);
  const delta = norm(du);
  if (isVertical(delta, x, y)) {
    if (x.v === y.v) {
      if (s === 0) return clonePoint(x);
      throw new Error("geodesic direction undefined for coincident endpoints");
    }
    const k = y.v > x.v ? 1 : -1;
    return { u: x.u.slice(), v: x.v * Math.exp(s * k) };
  }
  const [r0] = arcCoords(x, y, delta);
  const denom = Math.cosh(s + r0);
  const f = (x.v * Math.sinh(s)) / denom / delta;
  return {
    u: x.u.map((ui, i) => ui + f * du[i]),
    v: (x.v * Math.cosh(r0)) / denom,
  };
}

// Geodesic interpolation: gerp(x, y, 0) = x, gerp(x, y, 1) = y, values
// outside [0, 1] extrapolate; gerp(x, x, a) = x for any a.
export function gerp(x: HPoint, y: HPoint, a: number): HPoint {
  checkPair(x, y);
  const S = dist(x, y);
  if (S === 0) return clonePoint(x);
  return geo(x, y, a * S);
}

export function zeroVec(dim: number): HVec {
  return { du: new Array(dim).fill(0), dv: 0 };
}

export function hnorm(base: HPoint, X: HVec): number {
  return Math.hypot(...X.du, X.dv) / base.v;
}

export function scaleVec(X: HVec, f: number): HVec {
  return { du: X.du.map((d) => f * d), dv: f * X.dv };
}

export function addVec(A: HVec, B: HVec): HVec {
  return { du: A.du.map((d, i) => d + B.du[i]), dv: A.dv + B.dv };
}

// Endpoint of the unit-time geodesic leaving x with initial velocity X.
export function expMap(x: HPoint, X: HVec): HPoint {
  const mag = hnorm(x, X);
  if (mag === 0) return clonePoint(x);
  const delta = norm(X.du);
  if (delta <= VERTICAL_EPS * Math.abs(X.dv)) {
    return { u: x.u.slice(), v: x.v * Math.exp(X.dv / x.v) };
  }
  const r0 = -Math.asinh(X.dv / delta);
  const denom = Math.cosh(mag + r0);
  const f = (x.v * Math.sinh(mag)) / denom / delta;
  return {
    u: x.u.map((ui, i) => ui + f * X.du[i]),
    v: (x.v * Math.cosh(r0)) / denom,
  };
}

// Initial velocity at x of the unit-time geodesic reaching y; inverse of
// expMap, with hnorm(logMap(x, y)) = dist(x, y).
export function logMap(x: HPoint, y: HPoint): HVec {
  checkPair(x, y);
  const du = sub(y.u, x.u);
  const delta = norm(du);
  if (isVertical(delta, x, y)) {
    return { du: new Array(x.u.length).fill(0), dv: x.v * Math.log(y.v / x.v) };
  }
  const [r0, r1] = arcCoords(x, y, delta);
  const S = r1 - r0;
  const f = (x.v * S) / Math.cosh(r0) / delta;
  return { du: du.map((d) => f * d), dv: -x.v * S * Math.tanh(r0) };
}

// Parallel transport along the geodesic from x to y. The component in the
// vertical plane of the connecting arc rotates with the arc tangent, whose
// in-plane frame at arc coordinate r is tanh(r) + i sech(r): one complex
// multiply. Linear isometry: norms and angles are preserved.
export function transport(x: HPoint, X: HVec, y: HPoint): HVec {
  checkPair(x, y);
  const du = sub(y.u, x.u);
  const delta = norm(du);
  const scale = y.v / x.v;
  if (isVertical(delta, x, y)) {
    return { du: X.du.map((d) => scale * d), dv: scale * X.dv };
  }
  const dir = du.map((d) => d / delta);
  const along = X.du.reduce((acc, d, i) => acc + d * dir[i], 0);
  const across = X.du.map((d, i) => d - along * dir[i]);
  const [r0, r1] = arcCoords(x, y, delta);
  // (f1re + i f1im) * conj(f0re + i f0im) * (along + i dv)
  const f0re = Math.tanh(r0);
  const f0im = 1 / Math.cosh(r0);
  const f1re = Math.tanh(r1);
  const f1im = 1 / Math.cosh(r1);
  const rotRe = f1re * f0re + f1im * f0im;
  const rotIm = f1im * f0re - f1re * f0im;
  const outRe = rotRe * along - rotIm * X.dv;
  const outIm = rotRe * X.dv + rotIm * along;
  return {
    du: across.map((d, i) => scale * (d + outRe * dir[i])),
    dv: scale * outIm,
  };
}

// Rescale X to hyperbolic length at most c, preserving direction.
export function clipVec(base: HPoint, X: HVec, c: number): HVec {
  if (!(Number.isFinite(c) && c >= 0)) {
    throw new Error(`clip length must be finite and >= 0, got ${c}`);
  }
  const mag = hnorm(base, X);
  if (mag <= c || mag === 0) return X;
  return scaleVec(X, c / mag);
}
