"""Termination measure for the cursor machines.

``measure(s) = (b, b - i)`` decreases strictly in lexicographic order on
every step: inc-case steps keep ``b`` and shrink ``b - i``, reset-case
steps shrink ``b`` itself.  Well-foundedness then bounds every run.
"""

from __future__ import annotations

from ..kernel import Run
from ..machines import get_machine
from ..wire import action_to_json
from .report import CheckReport


def measure(state) -> tuple[int, int]:
    return (state.b, state.b - state.i)


def check_measure(run: Run) -> CheckReport:
    """Replay ``run`` and confirm the measure drops on every step."""
    get_machine(run.machine_id)
    instance = {"machine": run.machine_id, "array": list(run.initial.array)}
    trajectory = run.trajectory()
    values = [measure(s) for s in trajectory]

    for k in range(len(run)):
        if not values[k + 1] < values[k]:  # tuple compare = lexicographic
            return CheckReport(
                prop="measure",
                instance=instance,
                passed=False,
                counterexample={
                    "machine": run.machine_id,
                    "initial": list(run.initial.array),
                    "actions": [action_to_json(s.action) for s in run.steps],
                    "index": k,
                    "before": list(values[k]),
                    "after": list(values[k + 1]),
                },
            )

    return CheckReport(
        prop="measure",
        instance=instance,
        passed=True,
        stats={"steps": len(run), "measures": [list(v) for v in values]},
    )
