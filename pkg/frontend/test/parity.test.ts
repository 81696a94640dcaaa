// Numerical parity with the reference implementation: every golden-vector
// case must reproduce within 1e-6 relative per component. The vectors are
// generated by the reference CLI (see tools/embed-vectors.mjs) and the
// port is only trusted while this suite stays green.

import { describe, expect, it } from "vitest";

import { GOLDEN } from "../src/golden.js";
import { dist, expMap, geo, gerp, logMap, transport } from "../src/geometry.js";
import { StageConfig, runTrace } from "../src/filters.js";
import { thetaFromRho, vToW, wToV } from "../src/viewspace.js";
import type { JsonStage } from "../src/vectortypes.js";

const TOL = 1e-6;

function near(got: number, want: number): void {
  expect(Math.abs(got - want)).toBeLessThanOrEqual(TOL * (1 + Math.abs(want)));
}

function nearArray(got: number[], want: number[]): void {
  expect(got.length).toBe(want.length);
  for (let i = 0; i < want.length; i++) near(got[i], want[i]);
}

function toStage(doc: JsonStage): StageConfig {
  switch (doc.type) {
    case "one-pole":
      return { type: "one-pole", alpha: doc.alpha! };
    case "clipped-one-pole":
      return { type: "clipped-one-pole", alpha: doc.alpha!, c: doc.c! };
    case "two-pole":
      return { type: "two-pole", omega0: doc.omega0!, zeta: doc.zeta! };
  }
}

describe("geometry golden vectors", () => {
  it("dist cases", () => {
    for (const c of GOLDEN.geometry.dist) {
      near(dist(c.x, c.y), c.out);
    }
  });

  it("geo cases", () => {
    for (const c of GOLDEN.geometry.geo) {
      const got = geo(c.x, c.y, c.s);
      nearArray(got.u, c.out.u);
      near(got.v, c.out.v);
    }
  });

  it("gerp cases", () => {
    for (const c of GOLDEN.geometry.gerp) {
      const got = gerp(c.x, c.y, c.a);
      nearArray(got.u, c.out.u);
      near(got.v, c.out.v);
    }
  });

  it("log map cases", () => {
    for (const c of GOLDEN.geometry.log_map) {
      const got = logMap(c.x, c.y);
      nearArray(got.du, c.out.du);
      near(got.dv, c.out.dv);
    }
  });

  it("exp map cases", () => {
    for (const c of GOLDEN.geometry.exp_map) {
      const got = expMap(c.x, c.vec);
      nearArray(got.u, c.out.u);
      near(got.v, c.out.v);
    }
  });

  it("transport cases", () => {
    for (const c of GOLDEN.geometry.transport) {
      const got = transport(c.x, c.vec, c.y);
      nearArray(got.du, c.out.du);
      near(got.dv, c.out.dv);
    }
  });
});

describe("filter golden traces", () => {
  for (const f of GOLDEN.filters) {
    it(f.name, () => {
      const dim = f.target.u.length;
      const got = runTrace(f.stages.map(toStage), f.period, f.y0, f.target, f.steps);
      expect(got.length).toBe(f.trace.length);
      for (let i = 0; i < got.length; i++) {
        nearArray(got[i].u, f.trace[i].slice(0, dim));
        near(got[i].v, f.trace[i][dim]);
      }
    });
  }
});

describe("view-space constants", () => {
  it("theta(sqrt 2) is a right angle", () => {
    expect(Math.abs(thetaFromRho(Math.SQRT2) - Math.PI / 2)).toBeLessThanOrEqual(1e-12);
  });

  it("w and v coincide at rho = 1 and invert at any rho", () => {
    for (const v of [1e-3, 0.37, 1, 42]) {
      expect(vToW(v, 1)).toBe(v);
      expect(wToV(vToW(v, 1.42), 1.42)).toBeCloseTo(v, 12);
    }
  });
});
