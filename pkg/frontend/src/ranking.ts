/** Ranking view: global scores with the per-criterion breakdown. All
 * numbers are rendered verbatim from the ranking payload. */

import { RankingPayload } from "./types.js";

export function renderRanking(
  root: HTMLElement,
  payload: RankingPayload,
  labels: Record<string, string> = {},
): void {
  root.innerHTML = "";
  const name = (id: string) => labels[id] ?? id;

  const list = document.createElement("ol");
  list.className = "ranking-list";
  for (const alt of payload.ranking) {
    const li = document.createElement("li");
    li.setAttribute("data-alt", alt);
    li.textContent = `${name(alt)} - ${payload.global_scores[alt].toFixed(4)}`;
    list.appendChild(li);
  }
  root.appendChild(list);

  const criteria = Object.keys(payload.per_criterion);
  const table = document.createElement("table");
  table.className = "breakdown";
  const header = document.createElement("tr");
  for (const text of ["alternative", ...criteria, "global"]) {
    const th = document.createElement("th");
    th.textContent = text;
    header.appendChild(th);
  }
  table.appendChild(header);
  for (const alt of payload.ranking) {
    const tr = document.createElement("tr");
    const th = document.createElement("th");
    th.textContent = name(alt);
    tr.appendChild(th);
    for (const criterion of criteria) {
      const td = document.createElement("td");
      td.textContent = payload.per_criterion[criterion][alt].toFixed(4);
      tr.appendChild(td);
    }
    const globalTd = document.createElement("td");
    globalTd.className = "global-score";
    globalTd.textContent = payload.global_scores[alt].toFixed(4);
    tr.appendChild(globalTd);
    table.appendChild(tr);
  }
  root.appendChild(table);
}
