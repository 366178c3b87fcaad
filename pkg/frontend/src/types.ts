/** Payload shapes of the decision service API. */

export interface ScaleEntry {
  score: number;
  term: string;
  tfn: [number, number, number];
  reciprocal: [number, number, number];
}

export interface CriterionNode {
  id: string;
  label: string;
  sdg: string[];
  children: CriterionNode[];
}

export interface ModelPayload {
  goal: string;
  criteria: CriterionNode[];
  alternatives: { id: string; label: string }[];
  scale: ScaleEntry[];
  settings: {
    defuzz: string;
    method: string;
    cr_threshold: number;
    sensitivity_factor: number;
  };
  judged_nodes: string[];
  direct_weight_nodes: string[];
  dirty: boolean;
}

export interface WorstEntry {
  i: number;
  j: number;
  magnitude: number;
}

export interface Suggestion {
  i: number;
  j: number;
  score: number;
}

export interface ConsistencyPayload {
  node: string;
  lambda_max: number;
  ci: number;
  ri: number;
  cr: number;
  acceptable: boolean;
  threshold: number;
  worst_entries: WorstEntry[];
  suggestions: Suggestion[];
  weights: Record<string, number>;
}

export interface WeightsPayload {
  [nodeId: string]: {
    node: string;
    method: string;
    items: string[];
    weights: Record<string, number>;
  };
}

export interface RankingPayload {
  global_scores: Record<string, number>;
  per_criterion: Record<string, Record<string, number>>;
  ranking: string[];
  ties: string[][];
}

export interface ScenarioPayload {
  name: string;
  boosted_node: string | null;
  weights: Record<string, number>;
  scores: Record<string, number>;
  ranking: string[];
}

export interface SensitivityPayload {
  factor: number;
  scenarios: ScenarioPayload[];
  stability: Record<string, number[]>;
  flips: { scenario: string; pair: [string, string] }[];
}

export interface MissingPairsDetail {
  message: string;
  missing_pairs: [number, number][];
}

/** Error carrying the HTTP status and the service's detail payload. */
export class ApiError extends Error {
  status: number;
  detail: unknown;

  constructor(status: number, detail: unknown) {
    super(typeof detail === "string" ? detail : `request failed with ${status}`);
    this.status = status;
    this.detail = detail;
  }
}
