/** App bootstrap: load the model, offer a node picker for the judgment
 * wizard, and keep the ranking and sensitivity views in sync with every
 * accepted edit. */

import { ApiClient } from "./api.js";
import { renderRanking } from "./ranking.js";
import { renderSensitivity, renderSensitivityError } from "./sensitivity.js";
import { ApiError, ModelPayload } from "./types.js";
import { JudgmentWizard } from "./wizard.js";

function collectLabels(model: ModelPayload): Record<string, string> {
  const labels: Record<string, string> = { goal: model.goal };
  const walk = (nodes: ModelPayload["criteria"]) => {
    for (const node of nodes) {
      labels[node.id] = node.label;
      walk(node.children);
    }
  };
  walk(model.criteria);
  for (const alt of model.alternatives) labels[alt.id] = alt.label;
  return labels;
}

function judgeableNodes(model: ModelPayload): { id: string; items: string[] }[] {
  const altIds = model.alternatives.map((a) => a.id);
  const out: { id: string; items: string[] }[] = [];
  if (model.criteria.length >= 2) {
    out.push({ id: "goal", items: model.criteria.map((c) => c.id) });
  }
  const walk = (nodes: ModelPayload["criteria"]) => {
    for (const node of nodes) {
      if (node.children.length >= 2) {
        out.push({ id: node.id, items: node.children.map((c) => c.id) });
      } else if (node.children.length === 0) {
        out.push({ id: node.id, items: altIds });
      }
      walk(node.children);
    }
  };
  walk(model.criteria);
  return out;
}

export async function bootstrap(root: HTMLElement, api: ApiClient): Promise<void> {
  const model = await api.getModel();
  const labels = collectLabels(model);

  root.innerHTML = `
    <h1>${model.goal}</h1>
    <section id="wizard-section">
      <h2>Pairwise judgments</h2>
      <label>Node <select id="node-picker"></select></label>
      <div id="wizard-host"></div>
    </section>
    <section id="ranking-section">
      <h2>Ranking</h2>
      <div id="ranking-host"></div>
    </section>
    <section id="sensitivity-section">
      <h2>Sensitivity</h2>
      <label>Boost factor
        <input id="factor-input" type="range" min="1" max="3" step="0.1"
               value="${model.settings.sensitivity_factor}">
        <span id="factor-value">${model.settings.sensitivity_factor}</span>
      </label>
      <div id="sensitivity-host"></div>
    </section>
  `;

  const rankingHost = root.querySelector("#ranking-host") as HTMLElement;
  const sensitivityHost = root.querySelector("#sensitivity-host") as HTMLElement;
  const wizardHost = root.querySelector("#wizard-host") as HTMLElement;
  const picker = root.querySelector("#node-picker") as HTMLSelectElement;
  const factorInput = root.querySelector("#factor-input") as HTMLInputElement;
  const factorValue = root.querySelector("#factor-value") as HTMLElement;

  async function refreshResults(): Promise<void> {
    try {
      const ranking = await api.getRanking();
      renderRanking(rankingHost, ranking, labels);
    } catch (err) {
      rankingHost.textContent =
        err instanceof ApiError && err.status === 422
          ? "Some judgment matrices are above the consistency threshold; revise them to see the ranking."
          : `ranking unavailable: ${(err as Error).message}`;
    }
    await refreshSensitivity();
  }

  async function refreshSensitivity(): Promise<void> {
    const factor = Number(factorInput.value);
    factorValue.textContent = factor.toFixed(1);
    try {
      const payload = await api.postSensitivity(factor);
      renderSensitivity(sensitivityHost, payload, labels);
    } catch (err) {
      if (err instanceof ApiError) {
        const detail =
          typeof err.detail === "string" ? err.detail : JSON.stringify(err.detail);
        renderSensitivityError(sensitivityHost, detail);
      } else {
        renderSensitivityError(sensitivityHost, (err as Error).message);
      }
    }
  }

  const nodes = judgeableNodes(model);
  for (const node of nodes) {
    const option = document.createElement("option");
    option.value = node.id;
    option.textContent = `${labels[node.id] ?? node.id} (${node.id})`;
    picker.appendChild(option);
  }

  function mountWizard(): void {
    const node = nodes.find((n) => n.id === picker.value) ?? nodes[0];
    new JudgmentWizard(wizardHost, {
      nodeId: node.id,
      items: node.items,
      itemLabels: labels,
      scale: model.scale,
      api,
      onSubmitted: () => void refreshResults(),
    });
  }

  picker.addEventListener("change", mountWizard);
  factorInput.addEventListener("change", () => void refreshSensitivity());

  mountWizard();
  await refreshResults();
}

declare global {
  interface Window {
    FAHP_API_BASE?: string;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const base =
    window.FAHP_API_BASE ??
    new URLSearchParams(window.location.search).get("api") ??
    "http://127.0.0.1:8341";
  void bootstrap(document.getElementById("app")!, new ApiClient(base));
}
