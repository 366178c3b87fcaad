/** Pairwise judgment wizard: one pair at a time with a matrix overview
 * toggle. Submit stays disabled until every pair has a choice; the
 * service's consistency report is rendered as a gauge after each submit. */

import { ApiClient } from "./api.js";
import { renderGauge } from "./gauge.js";
import {
  JudgmentFormState,
  advance,
  buildPayload,
  choosePair,
  completionFraction,
  createFormState,
  isComplete,
  missingPairs,
  pairKey,
  retreat,
} from "./judgment.js";
import { ApiError, MissingPairsDetail, ScaleEntry } from "./types.js";

export interface WizardOptions {
  nodeId: string;
  items: string[];
  itemLabels?: Record<string, string>;
  scale: ScaleEntry[];
  api: ApiClient;
  onSubmitted?: () => void;
}

export class JudgmentWizard {
  readonly state: JudgmentFormState;
  private overview = false;

  constructor(private root: HTMLElement, private options: WizardOptions) {
    this.state = createFormState(options.nodeId, options.items);
    this.render();
  }

  private label(itemId: string): string {
    return this.options.itemLabels?.[itemId] ?? itemId;
  }

  private currentSelection(): { score: number; direction: "first" | "second" } | undefined {
    const [i, j] = this.state.pairs[this.state.cursor];
    const choice = this.state.choices.get(pairKey(i, j));
    return choice && { score: choice.score, direction: choice.direction };
  }

  render(): void {
    const { state } = this;
    this.root.innerHTML = "";
    const container = document.createElement("div");
    container.className = "wizard";

    const progress = document.createElement("div");
    progress.className = "wizard-progress";
    const fraction = completionFraction(state);
    progress.setAttribute("data-fraction", fraction.toFixed(4));
    progress.textContent = `${state.choices.size} of ${state.pairs.length} pairs (${Math.round(fraction * 100)}%)`;
    container.appendChild(progress);

    const toggle = document.createElement("button");
    toggle.className = "overview-toggle";
    toggle.textContent = this.overview ? "Back to pair entry" : "Matrix overview";
    toggle.addEventListener("click", () => {
      this.overview = !this.overview;
      this.render();
    });
    container.appendChild(toggle);

    if (this.overview) {
      container.appendChild(this.renderOverview());
    } else {
      container.appendChild(this.renderPairForm());
    }

    const submit = document.createElement("button");
    submit.className = "wizard-submit";
    submit.textContent = "Submit judgments";
    submit.disabled = !isComplete(state);
    submit.addEventListener("click", () => void this.submit());
    container.appendChild(submit);

    const prompt = document.createElement("div");
    prompt.className = "missing-pairs";
    const missing = missingPairs(state);
    if (missing.length > 0) {
      prompt.textContent =
        `Missing ${missing.length} pair${missing.length > 1 ? "s" : ""}: ` +
        missing.map(([i, j]) => `${this.label(state.items[i])} vs ${this.label(state.items[j])}`).join(", ");
    }
    container.appendChild(prompt);

    const gaugeHost = document.createElement("div");
    gaugeHost.className = "gauge-host";
    container.appendChild(gaugeHost);

    this.root.appendChild(container);
  }

  private renderPairForm(): HTMLElement {
    const { state, options } = this;
    const [i, j] = state.pairs[state.cursor];
    const form = document.createElement("div");
    form.className = "pair-form";
    form.setAttribute("data-pair", pairKey(i, j));

    const heading = document.createElement("h3");
    heading.textContent = `Compare ${this.label(state.items[i])} with ${this.label(state.items[j])}`;
    form.appendChild(heading);

    const selection = this.currentSelection();

    const termSelect = document.createElement("select");
    termSelect.className = "term-select";
    for (const entry of options.scale) {
      const option = document.createElement("option");
      option.value = String(entry.score);
      option.textContent = `${entry.term} (${entry.score})`;
      if (selection && selection.score === entry.score) option.selected = true;
      termSelect.appendChild(option);
    }
    if (!selection) termSelect.value = "1";
    form.appendChild(termSelect);

    const direction = document.createElement("div");
    direction.className = "direction";
    const mkRadio = (value: "first" | "second", text: string) => {
      const label = document.createElement("label");
      const radio = document.createElement("input");
      radio.type = "radio";
      radio.name = `direction-${pairKey(i, j)}`;
      radio.value = value;
      radio.checked = selection ? selection.direction === value : value === "first";
      label.appendChild(radio);
      label.appendChild(document.createTextNode(text));
      return label;
    };
    direction.appendChild(mkRadio("first", `${this.label(state.items[i])} dominates`));
    direction.appendChild(mkRadio("second", `${this.label(state.items[j])} dominates`));
    form.appendChild(direction);

    const syncDirectionVisibility = () => {
      // direction is meaningless for "equally important"
      direction.style.display = termSelect.value === "1" ? "none" : "";
    };
    termSelect.addEventListener("change", syncDirectionVisibility);
    syncDirectionVisibility();

    const record = document.createElement("button");
    record.className = "record-pair";
    record.textContent = "Record choice";
    record.addEventListener("click", () => {
      const score = Number(termSelect.value);
      const dir =
        (form.querySelector(`input[name="direction-${pairKey(i, j)}"]:checked`) as HTMLInputElement)
          ?.value === "second"
          ? "second"
          : "first";
      choosePair(state, i, j, score, dir);
      advance(state);
      this.render();
    });
    form.appendChild(record);

    const nav = document.createElement("div");
    nav.className = "pair-nav";
    const back = document.createElement("button");
    back.textContent = "Previous pair";
    back.disabled = state.cursor === 0;
    back.addEventListener("click", () => {
      retreat(state);
      this.render();
    });
    const fwd = document.createElement("button");
    fwd.textContent = "Next pair";
    fwd.disabled = state.cursor >= state.pairs.length - 1;
    fwd.addEventListener("click", () => {
      advance(state);
      this.render();
    });
    nav.appendChild(back);
    nav.appendChild(fwd);
    form.appendChild(nav);
    return form;
  }

  private renderOverview(): HTMLElement {
    const { state } = this;
    const table = document.createElement("table");
    table.className = "matrix-overview";
    const header = document.createElement("tr");
    header.appendChild(document.createElement("th"));
    for (const item of state.items) {
      const th = document.createElement("th");
      th.textContent = this.label(item);
      header.appendChild(th);
    }
    table.appendChild(header);
    state.items.forEach((rowItem, i) => {
      const tr = document.createElement("tr");
      const th = document.createElement("th");
      th.textContent = this.label(rowItem);
      tr.appendChild(th);
      state.items.forEach((_colItem, j) => {
        const td = document.createElement("td");
        if (i === j) {
          td.textContent = "1";
        } else {
          const key = i < j ? pairKey(i, j) : pairKey(j, i);
          const choice = state.choices.get(key);
          if (!choice) {
            td.textContent = "-";
            td.className = "pending";
          } else {
            const signed =
              choice.score === 1 ? 1 : choice.direction === "first" ? choice.score : -choice.score;
            const mine = i < j ? signed : -signed;
            td.textContent = Math.abs(choice.score) === 1 ? "1" : mine > 0 ? `${mine}` : `1/${-mine}`;
          }
        }
        tr.appendChild(td);
      });
      table.appendChild(tr);
    });
    return table;
  }

  async submit(): Promise<void> {
    const gaugeHost = this.root.querySelector(".gauge-host") as HTMLElement;
    const prompt = this.root.querySelector(".missing-pairs") as HTMLElement;
    let payload: [number, number, number][];
    try {
      payload = buildPayload(this.state);
    } catch (err) {
      prompt.textContent = (err as Error).message;
      return;
    }
    try {
      const report = await this.options.api.putJudgments(this.state.nodeId, payload);
      renderGauge(gaugeHost, report, this.state.items, this.options.scale);
      this.options.onSubmitted?.();
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        const detail = err.detail as MissingPairsDetail;
        const names = detail.missing_pairs
          .map(([i, j]) => `${this.label(this.state.items[i])} vs ${this.label(this.state.items[j])}`)
          .join(", ");
        prompt.textContent = `${detail.message}: ${names}`;
      } else {
        prompt.textContent = `submit failed: ${(err as Error).message}`;
      }
    }
  }
}
