/** Integration acceptance against the real decision service.
 *
 * Spawns `python -m fahp serve` on a free port, drives the wizard DOM,
 * and checks that every number the UI shows equals what the service and
 * CLI report. Requires the Python package to be installed (pip install -e .).
 */

import { ChildProcess, execFile, spawn } from "node:child_process";
import { mkdtempSync, writeFileSync, readFileSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { promisify } from "node:util";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { renderSensitivity } from "../src/sensitivity.js";
import { JudgmentWizard } from "../src/wizard.js";

const execFileAsync = promisify(execFile);
const REPO_ROOT = resolve(__dirname, "..", "..");
const FIXTURE = join(REPO_ROOT, "fixtures", "turkiye.json");
const PYTHON = process.env.FAHP_PYTHON ?? "python3";

// upper-triangle signed scores of the bundled main-criteria matrix
const MAIN_JUDGMENTS: [number, number, number][] = [
  [0, 1, -5], [0, 2, -3], [0, 3, 3], [0, 4, 3], [1, 2, 1],
  [1, 3, 7], [1, 4, 7], [2, 3, 6], [2, 4, 6], [3, 4, -2],
];

function freePort(): Promise<number> {
  return new Promise((resolvePort, reject) => {
    const server = createServer();
    server.once("error", reject);
    server.listen(0, "127.0.0.1", () => {
      const port = (server.address() as { port: number }).port;
      server.close(() => resolvePort(port));
    });
  });
}

async function startService(projectPath: string): Promise<{ proc: ChildProcess; base: string }> {
  const port = await freePort();
  const proc = spawn(PYTHON, ["-m", "fahp", "serve", projectPath, "--port", String(port)], {
    cwd: REPO_ROOT,
    stdio: ["ignore", "pipe", "pipe"],
  });
  let log = "";
  proc.stdout?.on("data", (d) => (log += d));
  proc.stderr?.on("data", (d) => (log += d));
  const base = `http://127.0.0.1:${port}`;
  const deadline = Date.now() + 20000;
  for (;;) {
    try {
      const response = await fetch(`${base}/model`);
      if (response.ok) break;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) {
      proc.kill();
      throw new Error(`service did not come up:\n${log}`);
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  return { proc, base };
}

function enterThroughWizard(
  root: HTMLElement,
  wizard: JudgmentWizard,
  judgments: [number, number, number][],
): void {
  for (const [, , signed] of judgments) {
    const select = root.querySelector(".term-select") as HTMLSelectElement;
    select.value = String(Math.abs(signed));
    select.dispatchEvent(new Event("change"));
    if (Math.abs(signed) !== 1) {
      const want = signed > 0 ? "first" : "second";
      const radios = root.querySelectorAll(
        ".direction input[type=radio]",
      ) as NodeListOf<HTMLInputElement>;
      for (const radio of radios) radio.checked = radio.value === want;
    }
    (root.querySelector(".record-pair") as HTMLButtonElement).click();
  }
}

describe("wizard against the live service", () => {
  let proc: ChildProcess;
  let api: ApiClient;
  let projectPath: string;

  beforeAll(async () => {
    const dir = mkdtempSync(join(tmpdir(), "fahp-ui-"));
    projectPath = join(dir, "project.json");
    writeFileSync(projectPath, readFileSync(FIXTURE));
    const started = await startService(projectPath);
    proc = started.proc;
    api = new ApiClient(started.base);
  });

  afterAll(() => {
    proc?.kill();
  });

  it("produces the same main-criteria weights as the CLI", async () => {
    const model = await api.getModel();
    document.body.innerHTML = "<div id='root'></div>";
    const root = document.getElementById("root")!;
    const wizard = new JudgmentWizard(root, {
      nodeId: "goal",
      items: model.criteria.map((c) => c.id),
      scale: model.scale,
      api,
    });
    enterThroughWizard(root, wizard, MAIN_JUDGMENTS);
    const submit = root.querySelector(".wizard-submit") as HTMLButtonElement;
    expect(submit.disabled).toBe(false);
    await wizard.submit();

    const gauge = root.querySelector(".cr-gauge")!;
    expect(gauge.classList.contains("green")).toBe(true);

    const apiWeights = (await api.getWeights()).goal.weights;
    const { stdout } = await execFileAsync(
      PYTHON,
      ["-m", "fahp", "weights", projectPath, "--node", "goal", "--format", "json"],
      { cwd: REPO_ROOT },
    );
    const cliWeights = JSON.parse(stdout).goal.weights as Record<string, number>;
    expect(Object.keys(apiWeights).sort()).toEqual(Object.keys(cliWeights).sort());
    for (const [item, weight] of Object.entries(cliWeights)) {
      expect(Math.abs(apiWeights[item] - weight)).toBeLessThanOrEqual(1e-9);
    }
  });

  it("shows exactly one flip badge at factor 1.5, on the boosted-C3 card", async () => {
    const payload = await api.postSensitivity(1.5);
    document.body.innerHTML = "<div id='root'></div>";
    const root = document.getElementById("root")!;
    renderSensitivity(root, payload);
    const badges = root.querySelectorAll(".flip-badge");
    expect(badges).toHaveLength(1);
    expect(badges[0].closest(".scenario-card")!.getAttribute("data-boosted")).toBe("C3");
    expect(badges[0].textContent).toContain("A1 overtakes A2");
  });
});

describe("cyclic judgments against the live service", () => {
  let proc: ChildProcess;
  let api: ApiClient;

  beforeAll(async () => {
    const dir = mkdtempSync(join(tmpdir(), "fahp-ui-cyclic-"));
    const projectPath = join(dir, "triangle.json");
    writeFileSync(
      projectPath,
      JSON.stringify({
        schema_version: 1,
        goal: "cyclic test",
        criteria: [
          { id: "K1", label: "one" },
          { id: "K2", label: "two" },
          { id: "K3", label: "three" },
        ],
        alternatives: [
          { id: "A1", label: "left" },
          { id: "A2", label: "right" },
        ],
        judgments: [
          { node: "goal", scores: [[0, 1, 1], [0, 2, 1], [1, 2, 1]] },
        ],
        direct_weights: {
          K1: { A1: 0.5, A2: 0.5 },
          K2: { A1: 0.5, A2: 0.5 },
          K3: { A1: 0.5, A2: 0.5 },
        },
      }),
    );
    const started = await startService(projectPath);
    proc = started.proc;
    api = new ApiClient(started.base);
  });

  afterAll(() => {
    proc?.kill();
  });

  it("shows a red gauge with a worst-entry suggestion", async () => {
    const model = await api.getModel();
    document.body.innerHTML = "<div id='root'></div>";
    const root = document.getElementById("root")!;
    const wizard = new JudgmentWizard(root, {
      nodeId: "goal",
      items: ["K1", "K2", "K3"],
      scale: model.scale,
      api,
    });
    // K1 >> K2, K2 >> K3, K3 >> K1, all at "absolutely important"
    enterThroughWizard(root, wizard, [
      [0, 1, 9],
      [0, 2, -9],
      [1, 2, 9],
    ]);
    await wizard.submit();

    const gauge = root.querySelector(".cr-gauge")!;
    expect(gauge.classList.contains("red")).toBe(true);
    const entries = root.querySelectorAll(".worst-entry");
    expect(entries.length).toBeGreaterThan(0);
    expect(entries[0].getAttribute("data-pair")).toBe("0:1");
    // ranking is now gated behind an override
    await expect(api.getRanking()).rejects.toMatchObject({ status: 422 });
  });
});
