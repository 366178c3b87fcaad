/** Pure state logic for the pairwise judgment form.
 *
 * A form covers all C(n,2) upper-triangle pairs of one node's children.
 * Each pair takes a scale term (score 1..9) plus, for any score above 1,
 * the dominance direction. The signed-score payload for the service uses
 * negative values when the second item dominates.
 */

import { ScaleEntry } from "./types.js";

export type Direction = "first" | "second";

export interface PairChoice {
  score: number;
  direction: Direction;
}

export interface JudgmentFormState {
  nodeId: string;
  items: string[];
  pairs: [number, number][];
  cursor: number;
  choices: Map<string, PairChoice>;
}

export function pairKey(i: number, j: number): string {
  return `${i}:${j}`;
}

export function upperTrianglePairs(n: number): [number, number][] {
  const pairs: [number, number][] = [];
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      pairs.push([i, j]);
    }
  }
  return pairs;
}

export function createFormState(nodeId: string, items: string[]): JudgmentFormState {
  return {
    nodeId,
    items,
    pairs: upperTrianglePairs(items.length),
    cursor: 0,
    choices: new Map(),
  };
}

export function choosePair(
  state: JudgmentFormState,
  i: number,
  j: number,
  score: number,
  direction: Direction,
): void {
  if (!Number.isInteger(score) || score < 1 || score > 9) {
    throw new Error(`score must be an integer in 1..9, got ${score}`);
  }
  state.choices.set(pairKey(i, j), { score, direction });
}

export function completionFraction(state: JudgmentFormState): number {
  if (state.pairs.length === 0) return 1;
  return state.choices.size / state.pairs.length;
}

export function missingPairs(state: JudgmentFormState): [number, number][] {
  return state.pairs.filter(([i, j]) => !state.choices.has(pairKey(i, j)));
}

export function isComplete(state: JudgmentFormState): boolean {
  return missingPairs(state).length === 0;
}

/** Signed-score payload for PUT /judgments/{node}; requires a complete form. */
export function buildPayload(state: JudgmentFormState): [number, number, number][] {
  const missing = missingPairs(state);
  if (missing.length > 0) {
    const names = missing.map(([i, j]) => `(${state.items[i]}, ${state.items[j]})`);
    throw new Error(`missing pairs: ${names.join(", ")}`);
  }
  return state.pairs.map(([i, j]) => {
    const choice = state.choices.get(pairKey(i, j))!;
    const signed =
      choice.score === 1 ? 1 : choice.direction === "first" ? choice.score : -choice.score;
    return [i, j, signed];
  });
}

export function advance(state: JudgmentFormState): void {
  if (state.cursor < state.pairs.length - 1) state.cursor += 1;
}

export function retreat(state: JudgmentFormState): void {
  if (state.cursor > 0) state.cursor -= 1;
}

/** Human description of a signed score, using the service's scale terms. */
export function describeSignedScore(
  signed: number,
  items: [string, string],
  scale: ScaleEntry[],
): string {
  const entry = scale.find((s) => s.score === Math.abs(signed));
  const term = entry ? entry.term : `score ${Math.abs(signed)}`;
  if (Math.abs(signed) === 1) return `${term} (1)`;
  const [first, second] = items;
  const dominant = signed > 0 ? first : second;
  return `${dominant}: ${term} (${Math.abs(signed)})`;
}
