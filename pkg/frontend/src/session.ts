// Live filter session: fixed-step simulation decoupled from render timing.
//
// The discrete filters assume one fixed period T, so wall-clock frame time
// feeds an accumulator and the filter advances by whole steps only; a
// dropped frame advances state by several fixed steps, never by one larger
// step. Retargeting mutates the input signal and nothing else (that IS the
// interruption semantics), and parameter edits re-seed the stages at the
// current output so the camera never jumps.

import { HPoint, clonePoint } from "./geometry.js";
import {
  StageConfig,
  StageState,
  cascadeStep,
  initStates,
  validateStages,
} from "./filters.js";
import { CameraTrace } from "./scan.js";
import { Viewport, cameraFromSpan } from "./viewspace.js";

export interface SessionOptions {
  period?: number; // fixed simulation step, default 1/60 s
  record?: boolean; // keep the per-step output trace for export
  maxStepsPerTick?: number; // catch-up bound after a long stall
}

export class FilterSession {
  readonly period: number;
  private stages: StageConfig[];
  private states: StageState[];
  private target: HPoint;
  private output: HPoint;
  private residual = 0;
  private stepsTaken = 0;
  private readonly maxStepsPerTick: number;
  private readonly recorded: HPoint[] | null;

  constructor(start: HPoint, stages: StageConfig[], opts: SessionOptions = {}) {
    this.period = opts.period ?? 1 / 60;
    validateStages(stages, this.period);
    this.stages = stages.map((s) => ({ ...s }));
    this.states = initStates(this.stages, start);
    this.target = clonePoint(start);
    this.output = clonePoint(start);
    this.maxStepsPerTick = opts.maxStepsPerTick ?? 240;
    this.recorded = opts.record ? [clonePoint(start)] : null;
  }

  get camera(): HPoint {
    return clonePoint(this.output);
  }

  get currentTarget(): HPoint {
    return clonePoint(this.target);
  }

  get totalSteps(): number {
    return this.stepsTaken;
  }

  // Interruption semantics: replace the target immediately, touch no state.
  setTarget(t: HPoint): void {
    if (t.u.length !== this.target.u.length) {
      throw new Error("target dimension cannot change mid-session");
    }
    this.target = clonePoint(t);
  }

  // Feed the dependent-axis camera from the visible data range; an empty
  // or degenerate range holds the previous target.
  autofit(lo: number[], hi: number[], viewport: Viewport): void {
    for (let i = 0; i < lo.length; i++) {
      if (!(lo[i] < hi[i])) return;
    }
    this.setTarget(cameraFromSpan(lo, hi, viewport));
  }

  // Re-seed every stage at the current output, carrying velocity state
  // over where the stage kinds line up, so editing alpha, c, zeta, omega0,
  // or the stage count never moves the camera.
  reconfigure(stages: StageConfig[]): void {
    validateStages(stages, this.period);
    const fresh = initStates(stages, this.output);
    for (let k = 0; k < fresh.length; k++) {
      const old = this.states[k];
      if (fresh[k].ydot !== null && old && old.ydot !== null) {
        fresh[k].ydot = { du: old.ydot.du.slice(), dv: old.ydot.dv };
        fresh[k].y = clonePoint(old.y);
      }
    }
    this.stages = stages.map((s) => ({ ...s }));
    this.states = fresh;
  }

  // Advance exactly one fixed step against the current target.
  step(): HPoint {
    this.output = cascadeStep(this.stages, this.states, this.target, this.period);
    this.stepsTaken += 1;
    if (this.recorded) this.recorded.push(clonePoint(this.output));
    return this.camera;
  }

  // Advance by elapsed wall-clock seconds; returns the fixed steps taken.
  tick(elapsedSeconds: number): number {
    if (!(elapsedSeconds >= 0)) return 0;
    this.residual += elapsedSeconds;
    let n = Math.floor(this.residual / this.period + 1e-9);
    if (n > this.maxStepsPerTick) {
      // after a long stall, drop the backlog instead of freezing the tab
      this.residual = 0;
      n = this.maxStepsPerTick;
    } else {
      this.residual -= n * this.period;
    }
    for (let i = 0; i < n; i++) this.step();
    return n;
  }

  // Exported camera trace of every fixed step since construction.
  trace(): CameraTrace {
    if (!this.recorded) throw new Error("session was not constructed with record: true");
    return {
      period: this.period,
      u: this.recorded.map((p) => p.u.slice()),
      v: this.recorded.map((p) => p.v),
    };
  }
}
