/** DOM rendering, kept pure: payloads in, elements out, no fetching. */

import { actionKey, actionLabel } from "./actions.js";
import type { ActionJson, Checks, StateJson, StepJson } from "./api.js";

function el(
  tag: string,
  className: string,
  text?: string,
): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function stateView(state: StateJson): HTMLElement {
  const root = el("div", "state");
  const grid = el("div", "grid");
  state.array.forEach((value, idx) => {
    const cell = el("span", "cell", String(value));
    if (state.i === idx) cell.classList.add("cursor");
    if (state.b !== undefined && idx >= state.b) cell.classList.add("settled");
    grid.append(cell);
  });
  root.append(grid);

  const fields = el("div", "fields");
  if (state.i !== undefined) fields.append(el("span", "field", `i = ${state.i}`));
  if (state.b !== undefined) fields.append(el("span", "field", `b = ${state.b}`));
  if (state.dirty !== undefined)
    fields.append(el("span", "field", `dirty = ${state.dirty ? "y" : "n"}`));
  root.append(fields);
  return root;
}

/** Read the rendered array back out — used by tests to compare the DOM
 * against the service's idea of the state. */
export function gridValues(scope: ParentNode): number[] {
  return Array.from(scope.querySelectorAll(".grid .cell"), (c) =>
    Number(c.textContent),
  );
}

export function actionButtons(
  candidates: ActionJson[],
  enabled: ActionJson[],
): HTMLElement {
  const enabledKeys = new Set(enabled.map(actionKey));
  const root = el("div", "actions");
  for (const a of candidates) {
    const key = actionKey(a);
    const btn = el("button", "action", actionLabel(a)) as HTMLButtonElement;
    btn.type = "button";
    btn.dataset.action = key;
    btn.disabled = !enabledKeys.has(key);
    root.append(btn);
  }
  return root;
}

export function statusView(
  stepIndex: number,
  terminal: boolean,
  checks?: Checks,
): HTMLElement {
  const root = el("div", "status");
  root.append(el("span", "step-index", `step ${stepIndex}`));
  if (terminal) root.append(el("span", "terminal", "terminal"));
  if (checks) {
    for (const [name, value] of Object.entries(checks)) {
      if (Array.isArray(value)) {
        root.append(el("span", "check", `${name} (${value.join(", ")})`));
      } else {
        const badge = el("span", "check", `${name} ${value ? "✓" : "✗"}`);
        badge.classList.add(value ? "ok" : "bad");
        root.append(badge);
      }
    }
  }
  return root;
}

export function historyView(initial: number[], steps: StepJson[]): HTMLElement {
  const root = el("ol", "history");
  const first = el("li", "entry", `[${initial.join(", ")}]`);
  root.append(first);
  for (const step of steps) {
    root.append(
      el(
        "li",
        "entry",
        `${actionLabel(step.action)} → [${step.state.array.join(", ")}]`,
      ),
    );
  }
  return root;
}
