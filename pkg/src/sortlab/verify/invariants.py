"""State invariants for the cursor machines (B5, B5D).

``inv1``: the cursor sits on the running maximum of the scanned prefix.
``inv2``: the tail beyond the boundary is already sorted.
``inv3``: everything left of the boundary is bounded by the tail.
"""

from __future__ import annotations

from ..kernel import Run
from ..machines import get_machine, is_sorted
from ..wire import action_to_json
from .report import CheckReport

INVARIANT_NAMES = ("inv1", "inv2", "inv3", "permutation")


def inv1(state) -> bool:
    a, i = state.array, state.i
    return a[i] == max(a[: i + 1])


def inv2(state) -> bool:
    return is_sorted(state.array[state.b :])


def inv3(state) -> bool:
    a, b = state.array, state.b
    if b >= len(a):
        return True  # empty tail, nothing to bound
    lo = min(a[b:])
    return all(a[j] <= lo for j in range(b))


def inv(state) -> bool:
    return inv1(state) and inv2(state) and inv3(state)


def failed_invariants(state) -> list[str]:
    return [f.__name__ for f in (inv1, inv2, inv3) if not f(state)]


def check_invariant(run: Run) -> CheckReport:
    """Replay ``run`` and check inv1-inv3 plus permutation preservation
    at every visited state.

    Runs must belong to a machine whose states carry ``array``, ``i`` and
    ``b`` fields (B5, B5D and their input-enabled variants).
    """
    get_machine(run.machine_id)  # validate the id before reporting on it
    start = sorted(run.initial.array)
    inc_steps = reset_steps = 0
    prev = run.initial
    instance = {"machine": run.machine_id, "array": list(run.initial.array)}

    for index, state in enumerate(run.trajectory()):
        failed = failed_invariants(state)
        if sorted(state.array) != start:
            failed.append("permutation")
        if failed:
            return CheckReport(
                prop="invariant",
                instance=instance,
                passed=False,
                counterexample={
                    "machine": run.machine_id,
                    "initial": list(run.initial.array),
                    "actions": [action_to_json(s.action) for s in run.steps],
                    "index": index,
                    "failed": failed,
                },
            )
        if index > 0:
            if state.b < prev.b:
                reset_steps += 1
            else:
                inc_steps += 1
        prev = state

    return CheckReport(
        prop="invariant",
        instance=instance,
        passed=True,
        stats={
            "states": len(run) + 1,
            "inc_steps": inc_steps,
            "reset_steps": reset_steps,
        },
    )
