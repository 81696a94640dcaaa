// Discrete geodesic filters: a one-pole stage steps a fraction b = alpha*T
// of the way to its target each sample, a clipped stage caps the step arc
// length at T*c, and a two-pole stage integrates an explicit spring-damper
// whose velocity state rides along by parallel transport. Stages cascade:
// each output feeds the next stage. None of them looks ahead, so a target
// change mid-flight is just the next input sample.

import {
  HPoint,
  HVec,
  addVec,
  clonePoint,
  dist,
  expMap,
  geo,
  gerp,
  logMap,
  scaleVec,
  transport,
  zeroVec,
} from "./geometry.js";

export type StageConfig =
  | { type: "one-pole"; alpha: number }
  | { type: "clipped-one-pole"; alpha: number; c: number }
  | { type: "two-pole"; omega0: number; zeta: number };

export interface StageState {
  y: HPoint;
  ydot: HVec | null; // based at y; two-pole stages only
}

export function validateStages(stages: StageConfig[], period: number): void {
  if (stages.length === 0) throw new Error("cascade needs at least one stage");
  if (!(Number.isFinite(period) && period > 0)) {
    throw new Error(`period must be finite and positive, got ${period}`);
  }
  stages.forEach((stage, k) => {
    if (stage.type === "one-pole" || stage.type === "clipped-one-pole") {
      const b = stage.alpha * period;
      if (!(b < 2)) {
        throw new Error(`stage ${k}: b = alpha*T = ${b} is unstable (requires b < 2)`);
      }
    }
  });
}

export function initStates(stages: StageConfig[], y0: HPoint): StageState[] {
  return stages.map((stage) => ({
    y: clonePoint(y0),
    ydot: stage.type === "two-pole" ? zeroVec(y0.u.length) : null,
  }));
}

export function onePoleStep(state: StageState, x: HPoint, b: number): HPoint {
  state.y = gerp(state.y, x, b);
  return state.y;
}

// One-pole behavior near the target, constant hyperbolic speed c when far:
// step arc length is T * min(c, alpha * dist).
export function clippedOnePoleStep(
  state: StageState,
  x: HPoint,
  alpha: number,
  c: number,
  period: number,
): HPoint {
  const S = dist(state.y, x);
  const s = period * Math.min(c, alpha * S);
  if (s !== 0) state.y = geo(state.y, x, s);
  return state.y;
}

// Explicit spring-damper with transported velocity:
//   ydot[i] = (1 - 2*T*zeta*omega0) * ydot[i-1] + T*omega0^2 * log(y[i-1], x[i])
//   y[i]    = exp(T * ydot[i])
export function twoPoleStep(
  state: StageState,
  x: HPoint,
  omega0: number,
  zeta: number,
  period: number,
): HPoint {
  const yPrev = state.y;
  const vel = addVec(
    scaleVec(state.ydot!, 1 - 2 * period * zeta * omega0),
    scaleVec(logMap(yPrev, x), period * omega0 * omega0),
  );
  const y = expMap(yPrev, scaleVec(vel, period));
  state.y = y;
  state.ydot = transport(yPrev, vel, y);
  return y;
}

export function stageStep(
  stage: StageConfig,
  state: StageState,
  x: HPoint,
  period: number,
): HPoint {
  switch (stage.type) {
    case "one-pole":
      return onePoleStep(state, x, stage.alpha * period);
    case "clipped-one-pole":
      return clippedOnePoleStep(state, x, stage.alpha, stage.c, period);
    case "two-pole":
      return twoPoleStep(state, x, stage.omega0, stage.zeta, period);
  }
}

export function cascadeStep(
  stages: StageConfig[],
  states: StageState[],
  x: HPoint,
  period: number,
): HPoint {
  let signal = x;
  for (let k = 0; k < stages.length; k++) {
    signal = stageStep(stages[k], states[k], signal, period);
  }
  return signal;
}

// The shipped default: clipped one-pole ahead of three plain one-poles.
export function defaultStages(): StageConfig[] {
  return [
    { type: "clipped-one-pole", alpha: 6, c: 1 },
    { type: "one-pole", alpha: 6 },
    { type: "one-pole", alpha: 6 },
    { type: "one-pole", alpha: 6 },
  ];
}

// Run a constant-target cascade for `steps` samples; returns all outputs
// including the start. Mirrors the golden-vector trace format.
export function runTrace(
  stages: StageConfig[],
  period: number,
  y0: HPoint,
  target: HPoint,
  steps: number,
): HPoint[] {
  validateStages(stages, period);
  const states = initStates(stages, y0);
  const out: HPoint[] = [clonePoint(y0)];
  for (let i = 0; i < steps; i++) {
    out.push(cascadeStep(stages, states, target, period));
  }
  return out;
}
