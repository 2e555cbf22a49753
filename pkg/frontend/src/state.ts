/** Explorer state: parameters, toggles, playback, and the URL fragment codec. */

import type { Kind, LandmarkName } from "./types.js";

export const S_MAX = Math.PI / 2;
export const T_MAX = 2 * Math.PI;

/** Sliders move on a 1/1024 lattice of each parameter range. */
export const SLIDER_STEPS = 1024;

/** Playback completes one loop of t per this many seconds. */
export const PLAYBACK_SECONDS = 8;

export interface ExplorerState {
  kind: Kind;
  s: number;
  t: number;
  playing: boolean;
  contrails: Record<LandmarkName, boolean>;
  compare: boolean;
}

export function defaultState(): ExplorerState {
  return {
    kind: "D",
    s: 0,
    t: 0,
    playing: false,
    contrails: { fingers: false, thumb: false, candle: false },
    compare: false,
  };
}

function clamp(x: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, Number.isFinite(x) ? x : lo));
}

export function clampState(state: ExplorerState): ExplorerState {
  return { ...state, s: clamp(state.s, 0, S_MAX), t: clamp(state.t, 0, T_MAX) };
}

/** Snap a parameter to its slider lattice. */
export function quantize(value: number, max: number): number {
  const step = Math.round(clamp(value, 0, max) / max * SLIDER_STEPS);
  return (step / SLIDER_STEPS) * max;
}

/** Advance the playback clock: t wraps cyclically at a fixed rate. */
export function advance(state: ExplorerState, elapsedMs: number): ExplorerState {
  if (!state.playing) return state;
  const t = (state.t + (elapsedMs / 1000) * (T_MAX / PLAYBACK_SECONDS)) % T_MAX;
  return { ...state, t };
}

/**
 * Fragment codec.  Numbers use JavaScript's default shortest-round-trip
 * string form, so a deep link reproduces s and t exactly.
 */
export function encodeFragment(state: ExplorerState): string {
  const parts = [
    `kind=${state.kind}`,
    `s=${state.s}`,
    `t=${state.t}`,
    `play=${state.playing ? 1 : 0}`,
    `fingers=${state.contrails.fingers ? 1 : 0}`,
    `thumb=${state.contrails.thumb ? 1 : 0}`,
    `candle=${state.contrails.candle ? 1 : 0}`,
    `compare=${state.compare ? 1 : 0}`,
  ];
  return "#" + parts.join("&");
}

export function decodeFragment(fragment: string): ExplorerState {
  const state = defaultState();
  const text = fragment.startsWith("#") ? fragment.slice(1) : fragment;
  if (!text) return state;
  for (const part of text.split("&")) {
    const eq = part.indexOf("=");
    if (eq < 0) continue;
    const key = part.slice(0, eq);
    const value = part.slice(eq + 1);
    switch (key) {
      case "kind":
        if (value === "D" || value === "FK") state.kind = value;
        break;
      case "s":
        state.s = Number(value);
        break;
      case "t":
        state.t = Number(value);
        break;
      case "play":
        state.playing = value === "1";
        break;
      case "fingers":
      case "thumb":
      case "candle":
        state.contrails[key] = value === "1";
        break;
      case "compare":
        state.compare = value === "1";
        break;
    }
  }
  return clampState(state);
}
