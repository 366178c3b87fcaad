/** Thin typed client for the decision service. Every number shown in the
 * UI originates from one of these calls; nothing is recomputed locally. */

import {
  ApiError,
  ConsistencyPayload,
  ModelPayload,
  RankingPayload,
  SensitivityPayload,
  WeightsPayload,
} from "./types.js";

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      throw new ApiError(response.status, body ? (body as any).detail : null);
    }
    return body as T;
  }

  getModel(): Promise<ModelPayload> {
    return this.request<ModelPayload>("/model");
  }

  putJudgments(nodeId: string, pairs: [number, number, number][]): Promise<ConsistencyPayload> {
    return this.request<ConsistencyPayload>(`/judgments/${encodeURIComponent(nodeId)}`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ pairs }),
    });
  }

  getWeights(override = false): Promise<WeightsPayload> {
    return this.request<WeightsPayload>(`/weights${override ? "?override=true" : ""}`);
  }

  getRanking(override = false): Promise<RankingPayload> {
    return this.request<RankingPayload>(`/ranking${override ? "?override=true" : ""}`);
  }

  postSensitivity(factor: number, override = false): Promise<SensitivityPayload> {
    return this.request<SensitivityPayload>(`/sensitivity${override ? "?override=true" : ""}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ factor }),
    });
  }

  save(): Promise<{ saved: boolean; path: string }> {
    return this.request("/save", { method: "POST" });
  }
}
