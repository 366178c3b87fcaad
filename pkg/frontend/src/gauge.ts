/** Consistency gauge: green below the CR threshold, red at or above it,
 * with the worst-offending pairs and suggested revision terms. */

import { describeSignedScore } from "./judgment.js";
import { ConsistencyPayload, ScaleEntry } from "./types.js";

export function renderGauge(
  root: HTMLElement,
  report: ConsistencyPayload,
  items: string[],
  scale: ScaleEntry[],
): void {
  root.innerHTML = "";
  const gauge = document.createElement("div");
  gauge.className = report.acceptable ? "cr-gauge green" : "cr-gauge red";
  gauge.setAttribute("data-cr", report.cr.toFixed(4));

  const value = document.createElement("strong");
  value.textContent = `CR ${report.cr.toFixed(4)}`;
  const verdict = document.createElement("span");
  verdict.textContent = report.acceptable
    ? ` below threshold ${report.threshold}`
    : ` at or above threshold ${report.threshold} - please revise`;
  gauge.appendChild(value);
  gauge.appendChild(verdict);
  root.appendChild(gauge);

  if (!report.acceptable && report.suggestions.length > 0) {
    const list = document.createElement("ul");
    list.className = "worst-entries";
    for (const hint of report.suggestions) {
      const li = document.createElement("li");
      li.className = "worst-entry";
      li.setAttribute("data-pair", `${hint.i}:${hint.j}`);
      const pairName = `${items[hint.i]} vs ${items[hint.j]}`;
      const suggestion = describeSignedScore(
        hint.score,
        [items[hint.i], items[hint.j]],
        scale,
      );
      li.textContent = `${pairName}: try ${suggestion}`;
      list.appendChild(li);
    }
    root.appendChild(list);
  }
}
