/** Canvas drawing of a scene draw list (browser only). */

import type { Scene } from "./scene.js";

export function drawScene(
  canvas: HTMLCanvasElement,
  scene: Scene,
  viewUnits = 2.8,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const w = canvas.width;
  const h = canvas.height;
  const scale = Math.min(w, h) / viewUnits;
  ctx.clearRect(0, 0, w, h);
  ctx.lineCap = "round";
  ctx.lineJoin = "round";
  for (const stroke of scene.strokes) {
    if (stroke.points.length < 2) continue;
    ctx.strokeStyle = stroke.color;
    ctx.lineWidth = stroke.width;
    ctx.beginPath();
    stroke.points.forEach(([x, y], i) => {
      const px = w / 2 + x * scale;
      const py = h / 2 + y * scale;
      if (i === 0) ctx.moveTo(px, py);
      else ctx.lineTo(px, py);
    });
    if (stroke.closed) ctx.closePath();
    ctx.stroke();
  }
  if (scene.notices.length) {
    ctx.fillStyle = "#a04040";
    ctx.font = "13px system-ui, sans-serif";
    scene.notices.forEach((msg, i) => ctx.fillText(msg, 12, 20 + 18 * i));
  }
}
