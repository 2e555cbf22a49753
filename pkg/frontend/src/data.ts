/**
 * Data sources.  The explorer never computes poses itself: every quaternion,
 * matrix, landmark, and contrail point comes verbatim from the backend's
 * JSON or from the bundled grid file the backend wrote at build time.
 */

import type { ContrailDoc, FramePose, Kind, LandmarkName, MovieGrid } from "./types.js";
import { S_MAX, T_MAX } from "./state.js";

export interface PoseSource {
  frame(kind: Kind, s: number, t: number): Promise<FramePose>;
  contrail(landmark: LandmarkName, s: number, n: number): Promise<ContrailDoc>;
  /** True when responses come from the bundled fallback rather than the live backend. */
  usingFallback(): boolean;
}

type FetchLike = (url: string) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class BackendSource implements PoseSource {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  private async get<T>(path: string): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path);
    if (!resp.ok) throw new Error(`backend returned ${resp.status} for ${path}`);
    return (await resp.json()) as T;
  }

  frame(kind: Kind, s: number, t: number): Promise<FramePose> {
    return this.get<FramePose>(`/frame?kind=${kind}&s=${s}&t=${t}`);
  }

  contrail(landmark: LandmarkName, s: number, n: number): Promise<ContrailDoc> {
    return this.get<ContrailDoc>(`/contrail?landmark=${landmark}&s=${s}&n=${n}`);
  }

  usingFallback(): boolean {
    return false;
  }
}

/**
 * Offline source backed by a precomputed movie grid: requests snap to the
 * nearest grid cell, so the data shown is always a pose the backend computed.
 */
export class BundledSource implements PoseSource {
  constructor(private readonly grid: MovieGrid) {
    if (grid.poses.length !== grid.ns * grid.nt) {
      throw new Error("bundled grid is inconsistent: ns*nt != poses.length");
    }
  }

  private nearestPose(s: number, t: number): FramePose {
    const col = Math.round((Math.min(Math.max(s, 0), S_MAX) / S_MAX) * (this.grid.ns - 1));
    const row = Math.round((Math.min(Math.max(t, 0), T_MAX) / T_MAX) * (this.grid.nt - 1));
    return this.grid.poses[row * this.grid.ns + col];
  }

  async frame(kind: Kind, s: number, t: number): Promise<FramePose> {
    if (kind !== this.grid.kind) {
      throw new Error(`bundled grid holds kind ${this.grid.kind}, not ${kind}`);
    }
    return this.nearestPose(s, t);
  }

  async contrail(landmark: LandmarkName, s: number): Promise<ContrailDoc> {
    // walk the grid column nearest to s: the landmark entries of its poses
    // are exactly the contrail polyline at grid resolution
    const col = Math.round((Math.min(Math.max(s, 0), S_MAX) / S_MAX) * (this.grid.ns - 1));
    const points = [];
    for (let row = 0; row < this.grid.nt; row++) {
      points.push(this.grid.poses[row * this.grid.ns + col].landmarks[landmark]);
    }
    return { landmark, s: this.grid.poses[col].s, points };
  }

  usingFallback(): boolean {
    return true;
  }
}

/** Tries the backend first and drops to the bundled grid when it is unreachable. */
export class FallbackSource implements PoseSource {
  private degraded = false;

  constructor(
    private readonly primary: PoseSource,
    private readonly bundled: PoseSource,
    private readonly onFallback?: (reason: string) => void,
  ) {}

  private async attempt<T>(run: (src: PoseSource) => Promise<T>): Promise<T> {
    if (!this.degraded) {
      try {
        return await run(this.primary);
      } catch (err) {
        this.degraded = true;
        this.onFallback?.(String(err));
      }
    }
    return run(this.bundled);
  }

  frame(kind: Kind, s: number, t: number): Promise<FramePose> {
    return this.attempt((src) => src.frame(kind, s, t));
  }

  contrail(landmark: LandmarkName, s: number, n: number): Promise<ContrailDoc> {
    return this.attempt((src) => src.contrail(landmark, s, n));
  }

  usingFallback(): boolean {
    return this.degraded;
  }
}
