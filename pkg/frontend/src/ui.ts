import { ServiceClient } from "./api.js";
import { enrollFlow, loginFlow, resubmit, type LoginResult } from "./flows.js";
import { generatePracticeDiagram } from "./localgrid.js";
import { derivePassword } from "./derive.js";
import { TraceState } from "./trace.js";
import type { Coord, DiagramData, GridParamsData, Mode } from "./types.js";

/** DOM wiring: renders grids, collects click traces, drives the flows. */

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const statusEl = () => $("status");

function setStatus(text: string, tone: "info" | "ok" | "warn" | "error" = "info") {
  const el = statusEl();
  el.textContent = text;
  el.dataset.tone = tone;
}

interface ActiveTrace {
  state: TraceState;
  finish: (steps: Coord[]) => void;
}

let active: ActiveTrace | null = null;

function blankDiagram(rows: number, cols: number): DiagramData {
  return {
    alphabet: { letters: ["·"] },
    rows,
    cols,
    cells: Array.from({ length: rows }, () => Array.from({ length: cols }, () => "·")),
  };
}

function renderGrid(diagram: DiagramData, showLetters: boolean): void {
  const table = $("grid");
  table.innerHTML = "";
  for (let r = 1; r <= diagram.rows; r++) {
    const tr = document.createElement("tr");
    for (let c = 1; c <= diagram.cols; c++) {
      const td = document.createElement("td");
      const letter = document.createElement("span");
      letter.className = "letter";
      letter.textContent = showLetters ? diagram.cells[r - 1]![c - 1]! : "";
      const badge = document.createElement("sup");
      badge.className = "badge";
      td.append(letter, badge);
      td.addEventListener("click", () => onCellClick({ row: r, col: c }, td, badge));
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  $("trace-controls").hidden = false;
}

function onCellClick(coord: Coord, td: HTMLTableCellElement, badge: HTMLElement): void {
  if (!active) return;
  const result = active.state.click(coord);
  if (result.kind === "added") {
    td.classList.add("visited");
    badge.textContent = String(result.ordinal);
  } else if (result.kind === "already-visited") {
    // Injectivity guard: flash the cell instead of re-adding it.
    td.classList.add("rejected");
    setTimeout(() => td.classList.remove("rejected"), 350);
  }
}

function beginTrace(diagram: DiagramData, showLetters: boolean): Promise<Coord[]> {
  return new Promise((resolve) => {
    const state = new TraceState(diagram, currentMode());
    active = { state, finish: resolve };
    renderGrid(diagram, showLetters);
  });
}

function currentMode(): Mode {
  const checked = document.querySelector<HTMLInputElement>("input[name=mode]:checked");
  return (checked?.value as Mode) ?? "login";
}

function gridParams(): GridParamsData {
  const rows = Number($<HTMLInputElement>("rows").value);
  const cols = Number($<HTMLInputElement>("cols").value);
  return { alphabet: { name: "digit-pairs" }, rows, cols };
}

function client(): ServiceClient {
  return new ServiceClient($<HTMLInputElement>("server").value);
}

function identity(): { user: string; label: string } {
  return {
    user: $<HTMLInputElement>("user").value,
    label: $<HTMLInputElement>("label").value,
  };
}

let lastLogin: LoginResult | null = null;

async function startEnroll(): Promise<void> {
  const params = gridParams();
  const { user, label } = identity();
  setStatus("click cells in order, then press Done");
  const result = await enrollFlow(client(), user, label, params, () =>
    beginTrace(blankDiagram(params.rows, params.cols), false),
  );
  if (!result.ok) {
    setStatus(`enrollment failed: ${result.error}`, "error");
    return;
  }
  setStatus(
    result.warning ? `enrolled with warning: ${result.warning}` : "enrolled",
    result.warning ? "warn" : "ok",
  );
  offerPractice();
}

function offerPractice(): void {
  $("practice-offer").hidden = false;
}

async function startLogin(): Promise<void> {
  const { user, label } = identity();
  setStatus("fetching challenge...");
  try {
    lastLogin = await loginFlow(client(), user, label, (diagram) => {
      setStatus("trace your path on the challenge grid, then press Done");
      return beginTrace(diagram!, true);
    });
  } catch (err) {
    setStatus(`login failed: ${(err as Error).message}`, "error");
    return;
  }
  showOutcome(lastLogin.outcome);
}

function showOutcome(outcome: string): void {
  const tone = outcome === "accepted" ? "ok" : "error";
  setStatus(`outcome: ${outcome}`, tone);
  $("reveal").hidden = false;
  $("password").textContent = "";
  if (outcome === "expired" || outcome === "rejected") {
    $("again-offer").hidden = false;
  }
}

async function startPractice(): Promise<void> {
  const params = gridParams();
  const seed = `practice-${Date.now()}`;
  const diagram = generatePracticeDiagram(params.alphabet, params.rows, params.cols, seed);
  setStatus("practice grid (offline): trace your path, then press Done");
  const steps = await beginTrace(diagram, true);
  const text = derivePassword(diagram, steps);
  setStatus(`you would have typed: ${text}`, "info");
}

export function wire(): void {
  $("start").addEventListener("click", () => {
    $("practice-offer").hidden = true;
    $("again-offer").hidden = true;
    $("reveal").hidden = true;
    const mode = currentMode();
    if (mode === "enroll") void startEnroll();
    else if (mode === "login") void startLogin();
    else void startPractice();
  });

  $("done").addEventListener("click", () => {
    if (!active) return;
    const { state, finish } = active;
    active = null;
    $("trace-controls").hidden = true;
    finish(state.sequence);
  });

  $("undo").addEventListener("click", () => {
    if (!active) return;
    const removed = active.state.undo();
    if (removed) {
      const table = $("grid");
      const td = table.querySelectorAll("tr")[removed.row - 1]
        ?.querySelectorAll("td")[removed.col - 1];
      td?.classList.remove("visited");
      const badge = td?.querySelector(".badge");
      if (badge) badge.textContent = "";
    }
  });

  $("reveal").addEventListener("click", () => {
    // Hidden by default; the user explicitly opts into seeing the password.
    $("password").textContent = lastLogin ? lastLogin.password : "";
  });

  $("practice-offer").addEventListener("click", () => {
    $("practice-offer").hidden = true;
    void startPractice();
  });

  $("again-offer").addEventListener("click", async () => {
    $("again-offer").hidden = true;
    if (lastLogin) {
      // Demonstrates single use: resubmitting the same challenge replays.
      const outcome = await resubmit(client(), lastLogin);
      setStatus(`resubmission outcome: ${outcome}`, "warn");
    }
  });
}

if (typeof document !== "undefined" && document.getElementById("start")) {
  wire();
}
