/** Concrete actions for the UI.
 *
 * The catalog gives action shapes (kind + parameter names); a session
 * needs the concrete instances that are well-formed for its array
 * length. Whether an instance currently fires is the server's call
 * (the `enabled` list) — the UI only decides which buttons exist.
 */

import type { ActionJson, ActionSpec } from "./api.js";

export function candidateActions(
  specs: ActionSpec[],
  n: number,
): ActionJson[] {
  const out: ActionJson[] = [];
  for (const spec of specs) {
    if (spec.params.length === 2) {
      // pair actions: all i < j < n
      for (let i = 0; i < n; i++)
        for (let j = i + 1; j < n; j++) out.push({ kind: spec.kind, i, j });
    } else if (spec.params.length === 1) {
      // adjacent-position actions: i with a right neighbour
      for (let i = 0; i + 1 < n; i++) out.push({ kind: spec.kind, i });
    } else {
      out.push({ kind: spec.kind });
    }
  }
  return out;
}

/** Stable text key, same syntax the CLI accepts ("swap:0,3", "inc"). */
export function actionKey(a: ActionJson): string {
  if (a.j !== undefined) return `${a.kind}:${a.i},${a.j}`;
  if (a.i !== undefined) return `${a.kind}:${a.i}`;
  return a.kind;
}

export function parseActionKey(key: string): ActionJson {
  const sep = key.indexOf(":");
  if (sep < 0) return { kind: key };
  const kind = key.slice(0, sep);
  const nums = key
    .slice(sep + 1)
    .split(",")
    .map(Number);
  return nums.length === 2
    ? { kind, i: nums[0], j: nums[1] }
    : { kind, i: nums[0] };
}

export function actionLabel(a: ActionJson): string {
  if (a.j !== undefined) return `${a.kind}(${a.i},${a.j})`;
  if (a.i !== undefined) return `${a.kind}(${a.i})`;
  return a.kind;
}
