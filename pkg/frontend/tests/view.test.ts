import { describe, expect, test } from "vitest";

import {
  actionKey,
  actionLabel,
  candidateActions,
  parseActionKey,
} from "../src/actions.js";
import {
  actionButtons,
  gridValues,
  historyView,
  stateView,
  statusView,
} from "../src/view.js";

describe("action identity", () => {
  test("key syntax round trips", () => {
    for (const a of [
      { kind: "swap", i: 0, j: 3 },
      { kind: "adj", i: 1 },
      { kind: "next" },
    ]) {
      expect(parseActionKey(actionKey(a))).toEqual(a);
    }
  });

  test("labels", () => {
    expect(actionLabel({ kind: "order", i: 1, j: 2 })).toBe("order(1,2)");
    expect(actionLabel({ kind: "adj", i: 0 })).toBe("adj(0)");
    expect(actionLabel({ kind: "inc" })).toBe("inc");
  });

  test("candidates follow the parameter shape", () => {
    expect(candidateActions([{ kind: "order", params: ["i", "j"] }], 4)).toHaveLength(6);
    expect(candidateActions([{ kind: "adj", params: ["i"] }], 4)).toEqual([
      { kind: "adj", i: 0 },
      { kind: "adj", i: 1 },
      { kind: "adj", i: 2 },
    ]);
    expect(
      candidateActions(
        [
          { kind: "inc", params: [] },
          { kind: "reset", params: [] },
        ],
        4,
      ),
    ).toEqual([{ kind: "inc" }, { kind: "reset" }]);
  });
});

describe("state rendering", () => {
  test("cells, cursor, settled suffix", () => {
    const view = stateView({ array: [6, 4, 7, 8], i: 2, b: 3 });
    const cells = Array.from(view.querySelectorAll(".cell"));
    expect(cells.map((c) => c.textContent)).toEqual(["6", "4", "7", "8"]);
    expect(cells.map((c) => c.classList.contains("cursor"))).toEqual([
      false, false, true, false,
    ]);
    expect(cells.map((c) => c.classList.contains("settled"))).toEqual([
      false, false, false, true,
    ]);
    expect(gridValues(view)).toEqual([6, 4, 7, 8]);
  });

  test("fields only for what the state has", () => {
    const bare = stateView({ array: [1, 2] });
    expect(bare.querySelectorAll(".field")).toHaveLength(0);
    const full = stateView({ array: [1, 2], i: 0, b: 1, dirty: true });
    expect(
      Array.from(full.querySelectorAll(".field"), (f) => f.textContent),
    ).toEqual(["i = 0", "b = 1", "dirty = y"]);
  });
});

describe("action buttons", () => {
  test("disabled exactly when the server did not list the action", () => {
    const candidates = candidateActions([{ kind: "order", params: ["i", "j"] }], 3);
    const enabled = [
      { kind: "order", i: 0, j: 1 },
      { kind: "order", i: 0, j: 2 },
    ];
    const root = actionButtons(candidates, enabled);
    const byKey = new Map(
      Array.from(root.querySelectorAll<HTMLButtonElement>("button"), (b) => [
        b.dataset.action,
        b.disabled,
      ]),
    );
    expect(byKey).toEqual(
      new Map([
        ["order:0,1", false],
        ["order:0,2", false],
        ["order:1,2", true],
      ]),
    );
  });
});

describe("status and history", () => {
  test("terminal badge and check badges", () => {
    const root = statusView(9, true, {
      permutation: true,
      inv2: false,
      measure: [1, 1],
    });
    expect(root.querySelector(".step-index")?.textContent).toBe("step 9");
    expect(root.querySelector(".terminal")).not.toBeNull();
    const checks = Array.from(root.querySelectorAll(".check"), (c) => c.textContent);
    expect(checks).toEqual(["permutation ✓", "inv2 ✗", "measure (1, 1)"]);
    expect(root.querySelector(".check.bad")?.textContent).toBe("inv2 ✗");
  });

  test("history lists the initial array then one entry per step", () => {
    const root = historyView(
      [2, 1],
      [{ action: { kind: "next" }, state: { array: [1, 2], i: 1, b: 2 } }],
    );
    expect(
      Array.from(root.querySelectorAll(".entry"), (e) => e.textContent),
    ).toEqual(["[2, 1]", "next → [1, 2]"]);
  });
});
