/** Wiring: one LabApp owns the toolbar, the board, and at most one live
 * session. All server work funnels through `schedule`, a single promise
 * chain, so clicks never interleave and `whenIdle()` is a true barrier
 * (tests lean on that).
 */

import { candidateActions, parseActionKey } from "./actions.js";
import {
  ApiError,
  LabClient,
  type ActionJson,
  type MachineInfo,
  type SessionPayload,
} from "./api.js";
import { actionButtons, historyView, stateView, statusView } from "./view.js";

interface LiveSession {
  id: string;
  machine: MachineInfo;
  candidates: ActionJson[];
}

function div(className: string): HTMLElement {
  const node = document.createElement("div");
  node.className = className;
  return node;
}

function button(id: string, label: string): HTMLButtonElement {
  const node = document.createElement("button");
  node.type = "button";
  node.id = id;
  node.textContent = label;
  return node;
}

export class LabApp {
  private live: LiveSession | null = null;
  private machines: MachineInfo[] = [];
  private pending: Promise<void> = Promise.resolve();

  private readonly select: HTMLSelectElement;
  private readonly input: HTMLInputElement;
  private readonly message: HTMLElement;
  private readonly board: HTMLElement;
  private readonly log: HTMLElement;

  constructor(
    root: HTMLElement,
    private readonly client: LabClient,
  ) {
    root.innerHTML = "";
    const bar = div("toolbar");
    this.select = document.createElement("select");
    this.select.id = "machine";
    this.input = document.createElement("input");
    this.input.id = "array";
    this.input.value = "8,6,7,4";
    const create = button("create", "new session");
    const undo = button("undo", "undo");
    const run = button("run", "run");
    bar.append(this.select, this.input, create, undo, run);

    this.message = div("message");
    this.board = div("board");
    this.log = div("log");
    root.append(bar, this.message, this.board, this.log);

    create.addEventListener("click", () => this.schedule(() => this.create()));
    undo.addEventListener("click", () => this.schedule(() => this.undo()));
    run.addEventListener("click", () => this.schedule(() => this.runToEnd()));
    this.board.addEventListener("click", (ev) => {
      const btn = (ev.target as HTMLElement).closest(
        "button[data-action]",
      ) as HTMLButtonElement | null;
      if (!btn || btn.disabled) return;
      const action = parseActionKey(btn.dataset.action ?? "");
      this.schedule(() => this.act(action));
    });
  }

  get sessionId(): string | null {
    return this.live?.id ?? null;
  }

  /** Resolves once every scheduled server round trip has settled. */
  whenIdle(): Promise<void> {
    return this.pending;
  }

  private schedule(op: () => Promise<void>): void {
    this.pending = this.pending.then(op).catch((err) => this.showError(err));
  }

  async init(): Promise<void> {
    this.machines = await this.client.machines();
    for (const m of this.machines) {
      const opt = document.createElement("option");
      opt.value = m.id;
      opt.textContent = m.id;
      this.select.append(opt);
    }
  }

  private async create(): Promise<void> {
    const id = this.select.value || "B5";
    const machine = this.machines.find((m) => m.id === id);
    if (!machine) throw new Error(`unknown machine ${id}`);
    const array = this.input.value.split(",").map((t) => Number(t.trim()));
    if (array.length === 0 || array.some((v) => !Number.isInteger(v)))
      throw new Error("array must be comma-separated integers");
    const created = await this.client.createSession(id, array, true);
    this.live = {
      id: created.session_id,
      machine,
      candidates: candidateActions(machine.actions, array.length),
    };
    this.message.textContent = "";
    await this.render(created);
  }

  private async act(action: ActionJson): Promise<void> {
    if (!this.live) return;
    await this.render(await this.client.act(this.live.id, action, true));
  }

  private async undo(): Promise<void> {
    if (!this.live) return;
    await this.render(await this.client.undo(this.live.id, true));
  }

  /** Step an automated machine until it reports terminal. */
  private async runToEnd(): Promise<void> {
    if (!this.live || !this.live.machine.automated) return;
    let payload: SessionPayload = await this.client.history(this.live.id);
    let fuel = 1000; // even B5 on n=44 fits
    while (!payload.terminal && payload.enabled.length === 1 && fuel-- > 0) {
      payload = await this.client.act(this.live.id, payload.enabled[0]!, true);
    }
    await this.render(payload);
  }

  private async render(payload: SessionPayload): Promise<void> {
    if (!this.live) return;
    this.board.innerHTML = "";
    this.board.append(
      statusView(payload.step_index, payload.terminal, payload.checks),
      stateView(payload.state),
      actionButtons(this.live.candidates, payload.enabled),
    );
    const hist = await this.client.history(this.live.id);
    this.log.innerHTML = "";
    this.log.append(historyView(hist.initial, hist.steps));
  }

  private showError(err: unknown): void {
    this.message.textContent =
      err instanceof ApiError ? `error: ${err.code}` : `error: ${String(err)}`;
  }
}
