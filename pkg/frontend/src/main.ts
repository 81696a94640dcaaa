// App wiring: one render loop drives both demos. Each frame handles the
// queued input (already applied via event handlers), advances the fixed-
// step filters by the elapsed wall time, and renders, in that order.

import { MapDemo } from "./mapdemo.js";
import { ChartDemo } from "./chartdemo.js";
import { defaultStages, StageConfig } from "./filters.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const map = new MapDemo(el<HTMLCanvasElement>("map-canvas"), el("map-list"));
const chart = new ChartDemo(el<HTMLCanvasElement>("chart-canvas"));

// Parameter editing re-seeds the filters at the current output: adjusting
// sliders mid-flight must never make the camera jump.
const alphaInput = el<HTMLInputElement>("alpha");
const capInput = el<HTMLInputElement>("cap");
const stagesInput = el<HTMLInputElement>("stages");
const readout = el("param-readout");

function applyParams(): void {
  const alpha = Number(alphaInput.value);
  const c = Number(capInput.value);
  const n = Number(stagesInput.value);
  const stages: StageConfig[] = [{ type: "clipped-one-pole", alpha, c }];
  for (let k = 1; k < n; k++) stages.push({ type: "one-pole", alpha });
  map.session.reconfigure(stages);
  chart.session.reconfigure(stages);
  readout.textContent = `alpha ${alpha.toFixed(1)} /s, cap ${c.toFixed(1)} /s, ${n} stages`;
}

for (const input of [alphaInput, capInput, stagesInput]) {
  input.addEventListener("input", applyParams);
}
map.session.reconfigure(defaultStages());
chart.session.reconfigure(defaultStages());
readout.textContent = "alpha 6.0 /s, cap 1.0 /s, 4 stages";

let last = performance.now();
function frame(now: number): void {
  const elapsed = Math.max(0, (now - last) / 1000);
  last = now;
  chart.feedTarget();
  map.session.tick(elapsed);
  chart.session.tick(elapsed);
  map.render();
  chart.render();
  requestAnimationFrame(frame);
}
requestAnimationFrame(frame);
