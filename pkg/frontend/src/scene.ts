/**
 * Pure scene construction: turn backend pose/contrail data into 2D draw
 * lists.  Only presentation geometry happens here (projection, glyph
 * proportions, the axis arc); all rotation data arrives precomputed.
 */

import type { ContrailDoc, FramePose, LandmarkName, Vec3 } from "./types.js";
import { REST_LANDMARKS, LANDMARK_NAMES } from "./types.js";

export interface Stroke {
  points: Array<[number, number]>; // projected, in [-1.2, 1.2] view units
  color: string;
  width: number;
  closed?: boolean;
}

export interface Scene {
  strokes: Stroke[];
  notices: string[];
}

/**
 * Orthographic projection.  The frame convention puts +x toward the viewer,
 * +y to the right, and +z up; the camera tilts slightly so all three axes
 * stay visible.  Screen y grows downward.
 */
const TILT_Y = 0.42; // radians of yaw around the vertical axis
const TILT_X = 0.30; // radians of pitch toward the viewer

export function project(p: Vec3): [number, number] {
  const cy = Math.cos(TILT_Y), sy = Math.sin(TILT_Y);
  const cx = Math.cos(TILT_X), sx = Math.sin(TILT_X);
  // yaw about z, then pitch about the screen-horizontal axis
  const x1 = cy * p[0] - sy * p[1];
  const y1 = sy * p[0] + cy * p[1];
  const z1 = p[2];
  const screenX = y1;
  const screenY = -(cx * z1 - sx * x1);
  return [screenX, screenY];
}

const GLYPH_COLORS: Record<LandmarkName, string> = {
  fingers: "#d03030",
  thumb: "#3050d0",
  candle: "#e08020",
};

const GLYPH_LENGTHS: Record<LandmarkName, number> = {
  fingers: 1.0,
  thumb: 0.45,
  candle: 0.6,
};

function scaled(v: Vec3, k: number): Vec3 {
  return [v[0] * k, v[1] * k, v[2] * k];
}

function addGlyph(
  scene: Scene,
  landmarks: Record<LandmarkName, Vec3>,
  scale: number,
  offset: [number, number],
  faded: boolean,
): void {
  for (const name of LANDMARK_NAMES) {
    const tip = scaled(landmarks[name], GLYPH_LENGTHS[name] * scale);
    const [x, y] = project(tip);
    scene.strokes.push({
      points: [[offset[0], offset[1]], [offset[0] + x, offset[1] + y]],
      color: faded ? "#bbbbbb" : GLYPH_COLORS[name],
      width: faded ? 1.5 : name === "fingers" ? 4 : 3,
    });
  }
  // connective tissue between fingers and thumb
  const web: Array<[number, number]> = [
    project(scaled(landmarks.fingers, 0.3 * scale)),
    project(scaled(landmarks.thumb, 0.3 * scale)),
  ].map(([x, y]) => [offset[0] + x, offset[1] + y]);
  scene.strokes.push({ points: web, color: faded ? "#cccccc" : "#c09090", width: faded ? 1 : 2 });
  // flame at the candle tip
  const flameBase = scaled(landmarks.candle, GLYPH_LENGTHS.candle * scale);
  const flameTip = scaled(landmarks.candle, (GLYPH_LENGTHS.candle + 0.08) * scale);
  const pts = [project(flameBase), project(flameTip)].map(
    ([x, y]) => [offset[0] + x, offset[1] + y] as [number, number],
  );
  scene.strokes.push({ points: pts, color: faded ? "#dddddd" : "#f0d020", width: faded ? 2 : 4 });
}

function orthonormalTo(axis: Vec3): [Vec3, Vec3] {
  const pick: Vec3 = Math.abs(axis[0]) < 0.9 ? [1, 0, 0] : [0, 1, 0];
  const u: Vec3 = [
    axis[1] * pick[2] - axis[2] * pick[1],
    axis[2] * pick[0] - axis[0] * pick[2],
    axis[0] * pick[1] - axis[1] * pick[0],
  ];
  const nu = Math.hypot(...u);
  const un: Vec3 = [u[0] / nu, u[1] / nu, u[2] / nu];
  const w: Vec3 = [
    axis[1] * un[2] - axis[2] * un[1],
    axis[2] * un[0] - axis[0] * un[2],
    axis[0] * un[1] - axis[1] * un[0],
  ];
  return [un, w];
}

function addAxisAndArc(scene: Scene, pose: FramePose, offset: [number, number]): void {
  if (!pose.axis) return;
  const [x, y] = project(pose.axis);
  scene.strokes.push({
    points: [
      [offset[0] - 1.15 * x, offset[1] - 1.15 * y],
      [offset[0] + 1.15 * x, offset[1] + 1.15 * y],
    ],
    color: "#20a020",
    width: 2,
  });
  // green arc showing the rotation amount, drawn around the axis
  const [u, w] = orthonormalTo(pose.axis);
  const radius = 0.32;
  const steps = Math.max(2, Math.ceil((pose.angle / (2 * Math.PI)) * 48));
  const arc: Array<[number, number]> = [];
  for (let k = 0; k <= steps; k++) {
    const a = (pose.angle * k) / steps;
    const p: Vec3 = [
      radius * (Math.cos(a) * u[0] + Math.sin(a) * w[0]) + 0.9 * pose.axis[0],
      radius * (Math.cos(a) * u[1] + Math.sin(a) * w[1]) + 0.9 * pose.axis[1],
      radius * (Math.cos(a) * u[2] + Math.sin(a) * w[2]) + 0.9 * pose.axis[2],
    ];
    const [px, py] = project(p);
    arc.push([offset[0] + px, offset[1] + py]);
  }
  scene.strokes.push({ points: arc, color: "#20a020", width: 2 });
}

/** The moving hand, the fixed reference hand, and the axis/arc indicators. */
export function buildFrameScene(pose: FramePose, offset: [number, number] = [0, 0]): Scene {
  const scene: Scene = { strokes: [], notices: [] };
  addGlyph(scene, REST_LANDMARKS, 0.5, offset, true); // small unmoving reference
  addAxisAndArc(scene, pose, offset);
  addGlyph(scene, pose.landmarks, 1.0, offset, false);
  return scene;
}

const CONTRAIL_COLORS: Record<LandmarkName, string> = {
  fingers: "#e06060",
  thumb: "#6080e0",
  candle: "#e0a050",
};

/** Sphere outline plus the toggled contrail polylines. */
export function buildContrailScene(
  trails: ContrailDoc[],
  offset: [number, number] = [0, 0],
): Scene {
  const scene: Scene = { strokes: [], notices: [] };
  const outline: Array<[number, number]> = [];
  for (let k = 0; k <= 64; k++) {
    const a = (2 * Math.PI * k) / 64;
    outline.push([offset[0] + Math.cos(a), offset[1] + Math.sin(a)]);
  }
  scene.strokes.push({ points: outline, color: "#e8e8e8", width: 1, closed: true });
  for (const trail of trails) {
    const pts = trail.points.map((p) => {
      const [x, y] = project(p);
      return [offset[0] + x, offset[1] + y] as [number, number];
    });
    scene.strokes.push({ points: pts, color: CONTRAIL_COLORS[trail.landmark], width: 1.5 });
  }
  return scene;
}

export function mergeScenes(...scenes: Scene[]): Scene {
  return {
    strokes: scenes.flatMap((s) => s.strokes),
    notices: scenes.flatMap((s) => s.notices),
  };
}

/**
 * Largest distance between the moving glyph's landmark tips and the
 * reference glyph's, at equal scale.  Zero exactly when the pose is the
 * identity embedding, which is what the t-slider extremes must show.
 */
export function glyphCoincidence(pose: FramePose): number {
  let worst = 0;
  for (const name of LANDMARK_NAMES) {
    const a = pose.landmarks[name];
    const b = REST_LANDMARKS[name];
    worst = Math.max(worst, Math.hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]));
  }
  return worst;
}
