/** Sensitivity view: one card per scenario, side by side, with a flip
 * badge on every scenario whose ranking reverses a baseline pair. The
 * flip set comes from the service payload, never from local comparison. */

import { SensitivityPayload } from "./types.js";

export function renderSensitivity(
  root: HTMLElement,
  payload: SensitivityPayload,
  labels: Record<string, string> = {},
): void {
  root.innerHTML = "";
  const name = (id: string) => labels[id] ?? id;
  const flipsByScenario = new Map<string, [string, string][]>();
  for (const flip of payload.flips) {
    const list = flipsByScenario.get(flip.scenario) ?? [];
    list.push(flip.pair);
    flipsByScenario.set(flip.scenario, list);
  }

  const factor = document.createElement("div");
  factor.className = "factor-label";
  factor.textContent = `Boost factor ${payload.factor}`;
  root.appendChild(factor);

  const cards = document.createElement("div");
  cards.className = "scenario-cards";
  for (const scenario of payload.scenarios) {
    const card = document.createElement("div");
    card.className = "scenario-card";
    card.setAttribute("data-scenario", scenario.name);
    if (scenario.boosted_node) card.setAttribute("data-boosted", scenario.boosted_node);

    const title = document.createElement("h4");
    title.textContent = scenario.boosted_node
      ? `${name(scenario.boosted_node)} boosted`
      : "Baseline";
    card.appendChild(title);

    const flips = flipsByScenario.get(scenario.name) ?? [];
    for (const [riser, faller] of flips) {
      const badge = document.createElement("span");
      badge.className = "flip-badge";
      badge.textContent = `${name(riser)} overtakes ${name(faller)}`;
      card.appendChild(badge);
    }

    const order = document.createElement("ol");
    for (const alt of scenario.ranking) {
      const li = document.createElement("li");
      li.setAttribute("data-alt", alt);
      li.textContent = `${name(alt)} - ${scenario.scores[alt].toFixed(4)}`;
      order.appendChild(li);
    }
    card.appendChild(order);
    cards.appendChild(card);
  }
  root.appendChild(cards);
}

export function renderSensitivityError(root: HTMLElement, message: string): void {
  root.innerHTML = "";
  const note = document.createElement("div");
  note.className = "sensitivity-error";
  note.textContent = message;
  root.appendChild(note);
}
