// 1-D chart demo: the user pans and zooms the time axis by hand (wheel and
// drag); the price axis is a filtered camera that continuously autofits
// the visible value range. Scrolling fast makes the fit target jump
// around; the camera follows smoothly anyway.

import { FilterSession } from "./session.js";
import { defaultStages } from "./filters.js";
import { Viewport, cameraFromSpan, rHalf, screenPoint } from "./viewspace.js";

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function syntheticPrices(n: number, seed: number): number[] {
  const rand = mulberry32(seed);
  const out: number[] = [];
  let p = 120;
  let drift = 0.02;
  for (let i = 0; i < n; i++) {
    if (rand() < 0.01) drift = 0.25 * (rand() - 0.5);
    p = Math.max(4, p * (1 + drift * 0.02 + 0.012 * (rand() - 0.5)));
    out.push(p);
  }
  return out;
}

export class ChartDemo {
  readonly session: FilterSession;
  viewport: Viewport = { theta: [Math.PI / 2] };
  private readonly prices: number[];
  private lo = 0; // visible index window, fractional
  private hi = 400;
  private dragX: number | null = null;

  constructor(private readonly canvas: HTMLCanvasElement) {
    this.prices = syntheticPrices(2400, 0xcafe);
    const [a, b] = this.valueRange();
    this.session = new FilterSession(cameraFromSpan([a], [b], this.viewport), defaultStages());
    canvas.addEventListener("wheel", (ev) => this.onWheel(ev), { passive: false });
    canvas.addEventListener("pointerdown", (ev) => {
      this.dragX = ev.clientX;
      canvas.setPointerCapture(ev.pointerId);
    });
    canvas.addEventListener("pointermove", (ev) => this.onDrag(ev));
    canvas.addEventListener("pointerup", () => (this.dragX = null));
  }

  private valueRange(): [number, number] {
    const i0 = Math.max(0, Math.floor(this.lo));
    const i1 = Math.min(this.prices.length, Math.ceil(this.hi));
    let a = Infinity;
    let b = -Infinity;
    for (let i = i0; i < i1; i++) {
      a = Math.min(a, this.prices[i]);
      b = Math.max(b, this.prices[i]);
    }
    const pad = 0.05 * (b - a || 1);
    return [a - pad, b + pad];
  }

  private clampWindow(): void {
    const span = this.hi - this.lo;
    if (this.lo < 0) {
      this.lo = 0;
      this.hi = span;
    }
    if (this.hi > this.prices.length) {
      this.hi = this.prices.length;
      this.lo = this.hi - span;
    }
  }

  private onWheel(ev: WheelEvent): void {
    ev.preventDefault();
    const rect = this.canvas.getBoundingClientRect();
    const frac = (ev.clientX - rect.left) / rect.width;
    const pivot = this.lo + frac * (this.hi - this.lo);
    const factor = Math.exp(0.0012 * ev.deltaY);
    const span = Math.min(
      this.prices.length,
      Math.max(24, (this.hi - this.lo) * factor),
    );
    this.lo = pivot - frac * span;
    this.hi = this.lo + span;
    this.clampWindow();
  }

  private onDrag(ev: PointerEvent): void {
    if (this.dragX === null) return;
    const rect = this.canvas.getBoundingClientRect();
    const perPx = (this.hi - this.lo) / rect.width;
    const dx = (ev.clientX - this.dragX) * perPx;
    this.dragX = ev.clientX;
    this.lo -= dx;
    this.hi -= dx;
    this.clampWindow();
  }

  // Called once per frame before the session ticks.
  feedTarget(): void {
    const [a, b] = this.valueRange();
    this.session.autofit([a], [b], this.viewport);
  }

  render(): void {
    const ctx = this.canvas.getContext("2d")!;
    const W = this.canvas.width;
    const H = this.canvas.height;
    const cam = this.session.camera;
    const half = rHalf(this.viewport)[0];
    ctx.fillStyle = "#10141a";
    ctx.fillRect(0, 0, W, H);

    const toPy = (value: number) => {
      const r = screenPoint(cam, [value])[0];
      return (0.5 - r / half / 2) * H;
    };

    // horizontal price gridlines at round steps near the camera scale
    const step = Math.pow(10, Math.floor(Math.log10(cam.v * half)));
    ctx.strokeStyle = "#283040";
    ctx.fillStyle = "#9aa7b8";
    ctx.font = "11px monospace";
    ctx.lineWidth = 1;
    const vLo = cam.u[0] - cam.v * half;
    const vHi = cam.u[0] + cam.v * half;
    for (let g = Math.ceil(vLo / step) * step; g <= vHi; g += step) {
      const py = toPy(g);
      ctx.beginPath();
      ctx.moveTo(0, py);
      ctx.lineTo(W, py);
      ctx.stroke();
      ctx.fillText(g.toFixed(step < 1 ? 1 : 0), 6, py - 3);
    }

    ctx.strokeStyle = "#3fb950";
    ctx.lineWidth = 1.6;
    ctx.beginPath();
    const i0 = Math.max(0, Math.floor(this.lo));
    const i1 = Math.min(this.prices.length, Math.ceil(this.hi));
    for (let i = i0; i < i1; i++) {
      const px = ((i - this.lo) / (this.hi - this.lo)) * W;
      const py = toPy(this.prices[i]);
      if (i === i0) ctx.moveTo(px, py);
      else ctx.lineTo(px, py);
    }
    ctx.stroke();
  }
}
