/** Thin client for the clusterforge service endpoints. */

import type { ClassifyResponse, ContainsResponse, Matrix, StepResponse } from "./types.js";

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const res = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!res.ok) {
      const detail = await res.text().catch(() => "");
      throw new Error(`${path} failed (${res.status}): ${detail}`);
    }
    return res.json() as Promise<T>;
  }

  async health(): Promise<boolean> {
    try {
      const res = await fetch(this.baseUrl + "/api/health");
      return res.ok;
    } catch {
      return false;
    }
  }

  mutate(bMatrix: Matrix, k: number): Promise<{ b_matrix: Matrix }> {
    return this.post("/api/quiver/mutate", { b_matrix: bMatrix, k: String(k) });
  }

  step(initial: Matrix, history: number[], k: number | null): Promise<StepResponse> {
    return this.post("/api/cluster/step", {
      b_matrix: initial,
      history,
      k: k === null ? null : String(k),
    });
  }

  classify(bMatrix: Matrix, budget = 2000): Promise<ClassifyResponse> {
    return this.post("/api/classify", { b_matrix: bMatrix, budget: String(budget) });
  }

  contains(bMatrix: Matrix, v: string[], depth = 50): Promise<ContainsResponse> {
    return this.post("/api/gfan/contains", { b_matrix: bMatrix, v, depth: String(depth) });
  }
}
