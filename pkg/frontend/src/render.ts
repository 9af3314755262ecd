/**
 * Immediate-mode canvas drawing of a Scene.
 *
 * Scales comfortably to the hundreds-of-dots range the data ships at; no
 * virtualization or retained scene graph. Drawing goes through the small
 * `Canvas2D` surface below rather than the full DOM type so the module
 * stays testable and lib-independent.
 */

import type { Scene, SceneDot, SceneViewport } from "./scene.js";

/** the subset of CanvasRenderingContext2D the renderer touches */
export interface Canvas2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  globalAlpha: number;
  font: string;
  textAlign: CanvasTextAlign;
  textBaseline: CanvasTextBaseline;
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  ellipse(
    x: number,
    y: number,
    rx: number,
    ry: number,
    rotation: number,
    a0: number,
    a1: number,
  ): void;
  fill(): void;
  stroke(): void;
  fillText(text: string, x: number, y: number): void;
}

export interface RenderOptions {
  width: number;
  height: number;
  dotRadius?: number;
}

export interface Projection {
  toPx(x: number, y: number): [number, number];
  /** pixels per data unit (uniform; aspect preserved) */
  scale: number;
}

/**
 * Map data coordinates to pixels, preserving aspect ratio and flipping y
 * so larger data y draws higher on screen. The viewport is centered in
 * whichever pixel dimension has slack.
 */
export function project(
  viewport: SceneViewport,
  width: number,
  height: number,
): Projection {
  const spanX = viewport.xMax - viewport.xMin;
  const spanY = viewport.yMax - viewport.yMin;
  const scale = Math.min(width / spanX, height / spanY);
  const offX = (width - spanX * scale) / 2;
  const offY = (height - spanY * scale) / 2;
  return {
    toPx(x: number, y: number): [number, number] {
      return [
        offX + (x - viewport.xMin) * scale,
        height - offY - (y - viewport.yMin) * scale,
      ];
    },
    scale,
  };
}

const DOT_RADIUS = 5;
const HIT_RADIUS = 8;

/**
 * The dot under a pixel position, or null. Later dots win ties so the
 * dot drawn on top is the one picked.
 */
export function hitTest(
  scene: Scene,
  projection: Projection,
  px: number,
  py: number,
): SceneDot | null {
  let hit: SceneDot | null = null;
  for (const dot of scene.dots) {
    const [dx, dy] = projection.toPx(dot.x, dot.y);
    if ((dx - px) ** 2 + (dy - py) ** 2 <= HIT_RADIUS ** 2) {
      hit = dot;
    }
  }
  return hit;
}

export function drawScene(
  ctx: Canvas2D,
  scene: Scene,
  options: RenderOptions,
): void {
  const { width, height } = options;
  const radius = options.dotRadius ?? DOT_RADIUS;
  const projection = project(scene.viewport, width, height);

  ctx.clearRect(0, 0, width, height);

  // distribution layer first so dots stay legible on top
  for (const ellipse of scene.ellipses) {
    const [cx, cy] = projection.toPx(ellipse.cx, ellipse.cy);
    ctx.beginPath();
    // canvas y grows downward, so the rotation flips sign
    ctx.ellipse(
      cx,
      cy,
      ellipse.rx * projection.scale,
      ellipse.ry * projection.scale,
      -ellipse.angle,
      0,
      2 * Math.PI,
    );
    ctx.globalAlpha = 0.12;
    ctx.fillStyle = ellipse.color;
    ctx.fill();
    ctx.globalAlpha = 0.8;
    ctx.strokeStyle = ellipse.color;
    ctx.lineWidth = 1.5;
    ctx.stroke();
    ctx.globalAlpha = 1;
  }

  for (const dot of scene.dots) {
    const [x, y] = projection.toPx(dot.x, dot.y);
    ctx.beginPath();
    ctx.arc(x, y, radius, 0, 2 * Math.PI);
    ctx.fillStyle = dot.color;
    ctx.fill();
    if (dot.id === scene.selectedId || dot.id === scene.hoveredId) {
      ctx.beginPath();
      ctx.arc(x, y, radius + 2.5, 0, 2 * Math.PI);
      ctx.strokeStyle = dot.id === scene.selectedId ? "#1a1a1a" : "#555555";
      ctx.lineWidth = dot.id === scene.selectedId ? 2 : 1.5;
      ctx.stroke();
    }
  }

  if (scene.showNames) {
    ctx.font = "11px system-ui, sans-serif";
    ctx.textAlign = "left";
    ctx.textBaseline = "middle";
    ctx.fillStyle = "#333333";
    for (const dot of scene.dots) {
      const [x, y] = projection.toPx(dot.x, dot.y);
      ctx.fillText(dot.name, x + radius + 3, y);
    }
  }
}
