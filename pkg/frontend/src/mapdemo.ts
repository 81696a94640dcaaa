// 2-D map demo: hover a result in the list and the camera flies to frame
// it; hover something else mid-flight and the trajectory bends without a
// jump. Points are procedurally generated so the demo runs fully offline.

import { HPoint, point } from "./geometry.js";
import { FilterSession } from "./session.js";
import { defaultStages } from "./filters.js";
import { Viewport, cameraFromSpan, rHalf, screenPoint, worldPoint } from "./viewspace.js";

interface Home {
  x: number;
  y: number;
  price: number;
  label: string;
}

// Small deterministic PRNG so every load shows the same city.
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

function generateHomes(count: number, seed: number): Home[] {
  const rand = mulberry32(seed);
  const homes: Home[] = [];
  for (let i = 0; i < count; i++) {
    // clustered around a few town centers
    const cx = 15 + 70 * rand();
    const cy = 15 + 70 * rand();
    const price = Math.round(180 + 650 * rand());
    homes.push({
      x: cx,
      y: cy,
      price,
      label: `#${i + 1} · $${price}k`,
    });
  }
  return homes;
}

export class MapDemo {
  readonly session: FilterSession;
  viewport: Viewport = { theta: [Math.PI / 2, Math.PI / 2] };
  private readonly homes: Home[];
  private selected = -1;

  constructor(
    private readonly canvas: HTMLCanvasElement,
    private readonly list: HTMLElement,
  ) {
    this.homes = generateHomes(48, 0x5eed);
    const start = cameraFromSpan([0, 0], [100, 100], this.viewport);
    this.session = new FilterSession(start, defaultStages());
    this.buildList();
    canvas.addEventListener("click", (ev) => this.onCanvasClick(ev));
  }

  private frameTarget(h: Home, margin: number): HPoint {
    return cameraFromSpan(
      [h.x - margin, h.y - margin],
      [h.x + margin, h.y + margin],
      this.viewport,
    );
  }

  private buildList(): void {
    const shown = this.homes.slice(0, 14);
    shown.forEach((h, i) => {
      const li = document.createElement("li");
      li.textContent = h.label;
      li.addEventListener("mouseenter", () => {
        this.session.setTarget(this.frameTarget(h, 8));
      });
      li.addEventListener("click", () => {
        this.selected = i;
        this.session.setTarget(this.frameTarget(h, 3));
        this.highlight();
      });
      this.list.appendChild(li);
    });
    const back = document.createElement("li");
    back.textContent = "show all";
    back.className = "showall";
    back.addEventListener("click", () => {
      this.selected = -1;
      this.session.setTarget(cameraFromSpan([0, 0], [100, 100], this.viewport));
      this.highlight();
    });
    this.list.appendChild(back);
  }

  private highlight(): void {
    Array.from(this.list.children).forEach((el, i) => {
      (el as HTMLElement).classList.toggle("selected", i === this.selected);
    });
  }

  private onCanvasClick(ev: MouseEvent): void {
    const rect = this.canvas.getBoundingClientRect();
    const half = rHalf(this.viewport);
    const rx = ((ev.clientX - rect.left) / rect.width - 0.5) * 2 * half[0];
    const ry = (0.5 - (ev.clientY - rect.top) / rect.height) * 2 * half[1];
    const cam = this.session.camera;
    const [wx, wy] = worldPoint(cam, [rx, ry]);
    this.session.setTarget(point([wx, wy], Math.min(cam.v, 8)));
  }

  render(): void {
    const ctx = this.canvas.getContext("2d")!;
    const W = this.canvas.width;
    const H = this.canvas.height;
    const cam = this.session.camera;
    const half = rHalf(this.viewport);
    ctx.fillStyle = "#10141a";
    ctx.fillRect(0, 0, W, H);

    // world grid every 10 units
    ctx.strokeStyle = "#283040";
    ctx.lineWidth = 1;
    for (let g = 0; g <= 100; g += 10) {
      const [rx] = screenPoint(cam, [g, cam.u[1]]);
      const px = (rx / half[0] / 2 + 0.5) * W;
      ctx.beginPath();
      ctx.moveTo(px, 0);
      ctx.lineTo(px, H);
      ctx.stroke();
      const ry = screenPoint(cam, [cam.u[0], g])[1];
      const py = (0.5 - ry / half[1] / 2) * H;
      ctx.beginPath();
      ctx.moveTo(0, py);
      ctx.lineTo(W, py);
      ctx.stroke();
    }

    ctx.font = "11px monospace";
    this.homes.forEach((h, i) => {
      const [rx, ry] = screenPoint(cam, [h.x, h.y]);
      const px = (rx / half[0] / 2 + 0.5) * W;
      const py = (0.5 - ry / half[1] / 2) * H;
      if (px < -20 || px > W + 20 || py < -20 || py > H + 20) return;
      ctx.fillStyle = i === this.selected ? "#ff5533" : "#58a6ff";
      ctx.beginPath();
      ctx.arc(px, py, i === this.selected ? 6 : 4, 0, 2 * Math.PI);
      ctx.fill();
      if (cam.v < 25) {
        ctx.fillStyle = "#9aa7b8";
        ctx.fillText(h.label, px + 8, py - 6);
      }
    });
  }
}
