/**
 * DOM wiring: sliders and toggles drive the state, the state round-trips
 * through the URL fragment, and an animation loop fetches poses (last
 * response wins) and redraws.
 */

import { BackendSource, BundledSource, FallbackSource, PoseSource } from "./data.js";
import { buildContrailScene, buildFrameScene, mergeScenes, Scene } from "./scene.js";
import { drawScene } from "./render.js";
import {
  ExplorerState,
  SLIDER_STEPS,
  S_MAX,
  T_MAX,
  advance,
  decodeFragment,
  encodeFragment,
  quantize,
} from "./state.js";
import type { ContrailDoc, Kind, LandmarkName, MovieGrid } from "./types.js";
import { LANDMARK_NAMES } from "./types.js";

const BACKEND_URL = (window as unknown as { DOUBLETWIST_BACKEND?: string }).DOUBLETWIST_BACKEND
  ?? "http://127.0.0.1:8787";
const BUNDLED_GRID_URL = "./assets/bundled-grid.json";

async function makeSource(onFallback: (reason: string) => void): Promise<PoseSource> {
  const backend = new BackendSource(BACKEND_URL);
  try {
    const resp = await fetch(BUNDLED_GRID_URL);
    const grid = (await resp.json()) as MovieGrid;
    return new FallbackSource(backend, new BundledSource(grid), onFallback);
  } catch {
    return backend; // no bundled asset present: live backend only
  }
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function boot(): Promise<void> {
  let state: ExplorerState = decodeFragment(window.location.hash);
  let fallbackNotice: string | null = null;
  const source = await makeSource(() => {
    fallbackNotice = "backend unreachable: showing bundled 65x65 grid";
  });

  const canvas = el<HTMLCanvasElement>("view");
  const compareCanvas = el<HTMLCanvasElement>("view-compare");
  const sSlider = el<HTMLInputElement>("s-slider");
  const tSlider = el<HTMLInputElement>("t-slider");
  const sReadout = el<HTMLSpanElement>("s-readout");
  const tReadout = el<HTMLSpanElement>("t-readout");
  const playButton = el<HTMLButtonElement>("play");
  const kindSelect = el<HTMLSelectElement>("kind");
  const compareBox = el<HTMLInputElement>("compare");
  const toggles = Object.fromEntries(
    LANDMARK_NAMES.map((name) => [name, el<HTMLInputElement>(`trail-${name}`)]),
  ) as Record<LandmarkName, HTMLInputElement>;

  sSlider.max = String(SLIDER_STEPS);
  tSlider.max = String(SLIDER_STEPS);

  function syncControls(): void {
    sSlider.value = String(Math.round((state.s / S_MAX) * SLIDER_STEPS));
    tSlider.value = String(Math.round((state.t / T_MAX) * SLIDER_STEPS));
    sReadout.textContent = state.s.toFixed(4);
    tReadout.textContent = state.t.toFixed(4);
    playButton.textContent = state.playing ? "pause" : "play";
    kindSelect.value = state.kind;
    compareBox.checked = state.compare;
    for (const name of LANDMARK_NAMES) toggles[name].checked = state.contrails[name];
    compareCanvas.style.display = state.compare ? "block" : "none";
  }

  function pushFragment(): void {
    history.replaceState(null, "", encodeFragment(state));
  }

  function setState(next: ExplorerState): void {
    state = next;
    syncControls();
    pushFragment();
  }

  sSlider.addEventListener("input", () =>
    setState({ ...state, s: quantize((Number(sSlider.value) / SLIDER_STEPS) * S_MAX, S_MAX) }));
  tSlider.addEventListener("input", () =>
    setState({ ...state, t: quantize((Number(tSlider.value) / SLIDER_STEPS) * T_MAX, T_MAX), playing: false }));
  playButton.addEventListener("click", () => setState({ ...state, playing: !state.playing }));
  kindSelect.addEventListener("change", () => setState({ ...state, kind: kindSelect.value as Kind }));
  compareBox.addEventListener("change", () => setState({ ...state, compare: compareBox.checked }));
  for (const name of LANDMARK_NAMES) {
    toggles[name].addEventListener("change", () =>
      setState({ ...state, contrails: { ...state.contrails, [name]: toggles[name].checked } }));
  }
  window.addEventListener("hashchange", () => {
    state = decodeFragment(window.location.hash);
    syncControls();
  });

  let generation = 0;
  let lastTick = performance.now();

  async function sceneFor(kind: Kind, offset: [number, number]): Promise<Scene> {
    const pose = await source.frame(kind, state.s, state.t);
    const pieces: Scene[] = [];
    const trails: ContrailDoc[] = [];
    if (kind === "D") {
      for (const name of LANDMARK_NAMES) {
        if (state.contrails[name]) trails.push(await source.contrail(name, state.s, 257));
      }
    }
    if (trails.length) pieces.push(buildContrailScene(trails, offset));
    pieces.push(buildFrameScene(pose, offset));
    return mergeScenes(...pieces);
  }

  async function redraw(): Promise<void> {
    const my = ++generation;
    try {
      const scene = await sceneFor(state.kind, [0, 0]);
      if (my !== generation) return; // a newer request superseded this one
      if (fallbackNotice) scene.notices.push(fallbackNotice);
      drawScene(canvas, scene);
      if (state.compare) {
        const other = await sceneFor(state.kind === "D" ? "FK" : "D", [0, 0]);
        if (my !== generation) return;
        drawScene(compareCanvas, other);
      }
    } catch (err) {
      const scene: Scene = { strokes: [], notices: [`data unavailable: ${String(err)}`] };
      drawScene(canvas, scene);
    }
  }

  let lastDrawnKey = "";

  function stateKey(): string {
    return [
      state.kind, state.s, state.t, state.compare,
      LANDMARK_NAMES.map((n) => (state.contrails[n] ? 1 : 0)).join(""),
      fallbackNotice ?? "",
    ].join("|");
  }

  function tick(now: number): void {
    const elapsed = now - lastTick;
    lastTick = now;
    if (state.playing) {
      state = advance(state, elapsed);
      syncControls();
      pushFragment();
    }
    const key = stateKey();
    if (key !== lastDrawnKey) {
      lastDrawnKey = key;
      void redraw();
    }
    requestAnimationFrame(tick);
  }

  syncControls();
  requestAnimationFrame((now) => {
    lastTick = now;
    tick(now);
  });
}

void boot();
