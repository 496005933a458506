import { describe, expect, inject, test } from "vitest";

import { ApiError, LabClient } from "../src/api.js";

const client = new LabClient(inject("serverUrl"));

describe("catalog", () => {
  test("lists every machine and its input-enabled twins", async () => {
    const machines = await client.machines();
    expect(machines.map((m) => m.id)).toEqual([
      "B1", "B2", "B3", "B4", "B5", "B5D", "B1!", "B2!", "B3!",
    ]);
  });

  test("shapes: B5 is automated, B1! accepts everything", async () => {
    const machines = await client.machines();
    const b5 = machines.find((m) => m.id === "B5")!;
    expect(b5.automated).toBe(true);
    expect(b5.actions).toEqual([{ kind: "next", params: [] }]);
    expect(b5.state_fields).toEqual(["array", "i", "b"]);
    const b1x = machines.find((m) => m.id === "B1!")!;
    expect(b1x.input_enabled).toBe(true);
    expect(b1x.automated).toBe(false);
  });
});

describe("session lifecycle", () => {
  test("create / act / undo / history round trip", async () => {
    const s = await client.createSession("B4", [3, 1, 2]);
    expect(s.step_index).toBe(0);
    expect(s.state).toEqual({ array: [3, 1, 2], i: 0 });
    expect(s.terminal).toBe(false);

    const after = await client.act(s.session_id, { kind: "inc" });
    expect(after.step_index).toBe(1);
    expect(after.state).toEqual({ array: [1, 3, 2], i: 1 });

    const undone = await client.undo(s.session_id);
    expect(undone.step_index).toBe(0);
    expect(undone.state.array).toEqual([3, 1, 2]);

    // undo at the start is a clamp, not an error
    expect((await client.undo(s.session_id)).step_index).toBe(0);

    const hist = await client.history(s.session_id);
    expect(hist.machine).toBe("B4");
    expect(hist.initial).toEqual([3, 1, 2]);
    expect(hist.steps).toEqual([]);
  });

  test("checks arrive when asked for", async () => {
    const s = await client.createSession("B5", [2, 1], true);
    expect(s.checks).toEqual({
      permutation: true,
      inv1: true,
      inv2: true,
      inv3: true,
      measure: [2, 2],
    });
    const after = await client.act(s.session_id, { kind: "next" }, true);
    expect(after.checks?.measure).toEqual([2, 1]);
  });
});

describe("errors", () => {
  test("refused guard is a 409", async () => {
    const s = await client.createSession("B2", [1, 2]);
    const err = await client
      .act(s.session_id, { kind: "order", i: 0, j: 1 })
      .then(() => null, (e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(409);
    expect((err as ApiError).code).toBe("guard_failed");
  });

  test("nonsense action is a 400", async () => {
    const s = await client.createSession("B2", [2, 1]);
    const err = await client
      .act(s.session_id, { kind: "bogus" })
      .then(() => null, (e: unknown) => e);
    expect((err as ApiError).status).toBe(400);
    expect((err as ApiError).code).toBe("malformed_action");
  });

  test("unknown session and machine", async () => {
    const gone = await client.history("s999999").then(() => null, (e: unknown) => e);
    expect((gone as ApiError).status).toBe(404);
    const nope = await client
      .createSession("B9", [1, 2])
      .then(() => null, (e: unknown) => e);
    expect((nope as ApiError).status).toBe(400);
  });
});
