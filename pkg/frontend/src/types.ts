/** Wire formats consumed verbatim from the backend / bundled JSON files. */

export type Kind = "D" | "FK";

export type Vec3 = [number, number, number];

export interface FramePose {
  kind: Kind;
  s: number;
  t: number;
  quaternion: [number, number, number, number];
  matrix: number[]; // 9 entries, row-major
  axis: Vec3 | null;
  angle: number;
  landmarks: {
    fingers: Vec3;
    thumb: Vec3;
    candle: Vec3;
  };
}

export interface MovieGrid {
  kind: Kind;
  ns: number;
  nt: number;
  poses: FramePose[]; // row-major: t down the rows, s across the columns
}

export interface ContrailDoc {
  landmark: LandmarkName;
  s: number;
  points: Vec3[];
}

export type LandmarkName = "fingers" | "thumb" | "candle";

export const LANDMARK_NAMES: LandmarkName[] = ["fingers", "thumb", "candle"];

/** Rest directions of the hand glyph (identity embedding). */
export const REST_LANDMARKS: Record<LandmarkName, Vec3> = {
  fingers: [-1, 0, 0],
  thumb: [0, 1, 0],
  candle: [0, 0, 1],
};
