// Thin typed client for the trilights JSON API.
// Every call is stateless: requests carry the full game state.

import type { BoardInfo } from "./game.js";

export interface SolveReport {
  solvable: boolean;
  kernelDimension: number;
  solutionCount: number | null;
  canonical: number[] | null;
  particular: number[] | null;
}

export interface KernelInfo {
  dimension: number;
  basis: string[];
  elements?: string[];
}

export interface RandomConfig {
  config: string;
  seed: number;
  rng: string;
}

export interface TableRow {
  n: number;
  dimension: number;
}

export interface MatchingsInfo {
  parity: number;
  count?: number;
}

export interface PropagateResult {
  m: number;
  element: string;
  verified: boolean;
}

export interface LayoutBlock {
  band: number;
  slot: number;
  orientation: string;
  symmetry: string;
  cells: number[];
}

export interface LayoutInfo {
  n: number;
  j: number;
  m: number;
  blocks: LayoutBlock[];
  separator: number[];
}

/** Error carrying the HTTP status so callers can branch on 422 vs 400. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.base}${path}`, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = (await response.json()) as { detail?: unknown };
        if (typeof body.detail === "string") {
          detail = body.detail;
        }
      } catch {
        // non-JSON error body: keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  board(n: number): Promise<BoardInfo> {
    return this.request<BoardInfo>(`/api/board/${n}`);
  }

  async press(n: number, config: string, buttons: number[]): Promise<string> {
    const body = await this.post<{ config: string }>("/api/press", { n, config, buttons });
    return body.config;
  }

  solve(n: number, config: string): Promise<SolveReport> {
    return this.post<SolveReport>("/api/solve", { n, config });
  }

  /** Throws ApiError(422) when the config is unsolvable or already solved. */
  async hint(n: number, config: string): Promise<number> {
    const body = await this.post<{ button: number }>("/api/hint", { n, config });
    return body.button;
  }

  kernel(n: number, enumerate = false): Promise<KernelInfo> {
    const suffix = enumerate ? "?enumerate=true" : "";
    return this.request<KernelInfo>(`/api/kernel/${n}${suffix}`);
  }

  random(n: number, seed?: number): Promise<RandomConfig> {
    const suffix = seed === undefined ? "" : `?seed=${seed}`;
    return this.request<RandomConfig>(`/api/random/${n}${suffix}`);
  }

  table(from: number, to: number): Promise<TableRow[]> {
    return this.request<TableRow[]>(`/api/table?from=${from}&to=${to}`);
  }

  matchings(n: number): Promise<MatchingsInfo> {
    return this.request<MatchingsInfo>(`/api/matchings/${n}`);
  }

  propagate(n: number, element: string, j: number): Promise<PropagateResult> {
    return this.post<PropagateResult>("/api/propagate", { n, element, j });
  }

  layout(n: number, j: number): Promise<LayoutInfo> {
    return this.request<LayoutInfo>(`/api/layout/${n}/${j}`);
  }
}
