"""Action refinement between adjacent machines in the chain
B5 -> B4 -> B3! -> B2! -> B1!.

Each :class:`RefinementMap` translates one lower-machine step into an
upper-machine action, or into :data:`STUTTER` when the upper machine
should sit still.  Behaviour inclusion is then checked per run: replay
the translated actions in the upper machine and compare view traces
after collapsing consecutive duplicates (``reset`` moves no array cell,
and input-enabled self-loops move nothing at all, so stuttering must not
count against inclusion).
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from ..errors import StepFailed, UnmappedAction
from ..kernel import Machine, Run, apply_run, trace_of
from ..machines import Adj, INC, Inc, Next, Order, RESET, Reset, Swap, get_machine
from ..wire import action_to_json, base_machine_id
from .report import CheckReport


class Stutter:
    """Translation result meaning: the upper run takes no step here."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "STUTTER"


STUTTER = Stutter()


@dataclass(frozen=True)
class RefinementMap:
    """Per-level step translation.

    ``rule`` sees only the lower step (source state and action, no
    lookahead).  :meth:`translate` additionally short-circuits lower
    self-loops — a step that moved nothing below maps to nothing above,
    which is what keeps the chain composable across input-enabled levels.
    """

    lower_id: str
    upper_id: str
    rule: Callable[[Any, Any], Any] = field(repr=False)

    def translate(self, state: Any, action: Any, successor: Any) -> Any:
        if state == successor:
            return STUTTER
        return self.rule(state, action)


def _b5_rule(state, action):
    if isinstance(action, Next):
        return INC if state.i < state.b - 1 else RESET
    raise UnmappedAction(f"B5 -> B4 has no rule for {action!r}")


def _b4_rule(state, action):
    if isinstance(action, Inc):
        return Adj(state.i)
    if isinstance(action, Reset):
        return STUTTER
    raise UnmappedAction(f"B4 -> B3! has no rule for {action!r}")


def _b3_rule(state, action):
    if isinstance(action, Adj):
        return Order(action.i, action.i + 1)
    raise UnmappedAction(f"B3 -> B2! has no rule for {action!r}")


def _b2_rule(state, action):
    if isinstance(action, Order):
        return Swap(action.i, action.j)
    raise UnmappedAction(f"B2 -> B1! has no rule for {action!r}")


def refinement_chain() -> tuple[RefinementMap, ...]:
    """The four adjacent maps, ordered from the automated end down."""
    return (
        cursor_to_sweep_map("B5"),
        RefinementMap("B4", "B3!", _b4_rule),
        RefinementMap("B3", "B2!", _b3_rule),
        RefinementMap("B2", "B1!", _b2_rule),
    )


def cursor_to_sweep_map(lower_id: str = "B5") -> RefinementMap:
    """Next becomes inc below the boundary, reset at it.  The rule reads
    only i and b, so it fits the early-exit variant too (its clean-sweep
    jump moves the index to 0, which is exactly a reset)."""
    return RefinementMap(lower_id, "B4", _b5_rule)


def refine_step(rmap: RefinementMap, state: Any, action: Any, successor: Any) -> Any:
    """Translate one lower step; returns an upper action or STUTTER."""
    return rmap.translate(state, action, successor)


def refine_actions(rmap: RefinementMap, run: Run) -> tuple:
    """Translate every step of ``run``; result has one entry per step."""
    states = run.trajectory()
    return tuple(
        rmap.translate(states[k], step.action, step.state)
        for k, step in enumerate(run.steps)
    )


def _collapse(views) -> tuple:
    out = [views[0]]
    for v in views[1:]:
        if v != out[-1]:
            out.append(v)
    return tuple(out)


def check_inclusion(
    run: Run, rmap: RefinementMap, upper: Machine | None = None
) -> CheckReport:
    """Does the upper machine reproduce this lower run, up to stuttering?

    Replays the translated action sequence in the upper machine from the
    same starting array and compares the two view traces after collapsing
    consecutive duplicates.  The lower run may belong to ``rmap.lower_id``
    or to its input-enabled extension.
    """
    if base_machine_id(run.machine_id) != base_machine_id(rmap.lower_id):
        raise UnmappedAction(
            f"map {rmap.lower_id} -> {rmap.upper_id} cannot refine "
            f"a {run.machine_id} run"
        )
    lower = get_machine(run.machine_id)
    if upper is None:
        upper = get_machine(rmap.upper_id)

    translated = refine_actions(rmap, run)
    upper_actions = [a for a in translated if a is not STUTTER]
    instance = {
        "lower": run.machine_id,
        "upper": upper.machine_id,
        "array": list(lower.view_of(run.initial)),
    }

    def failure(extra: dict) -> CheckReport:
        return CheckReport(
            prop="inclusion",
            instance=instance,
            passed=False,
            counterexample={
                "lower_machine": run.machine_id,
                "upper_machine": upper.machine_id,
                "initial": list(lower.view_of(run.initial)),
                "actions": [action_to_json(s.action) for s in run.steps],
                **extra,
            },
        )

    try:
        upper_run = apply_run(
            upper, upper.initial_of(lower.view_of(run.initial)), upper_actions
        )
    except StepFailed as exc:
        return failure(
            {"failed_at": exc.step_index, "reason": str(exc.reason)}
        )

    lower_trace = _collapse(trace_of(run, lower))
    upper_trace = _collapse(trace_of(upper_run, upper))
    if lower_trace != upper_trace:
        return failure(
            {
                "lower_trace": [list(v) for v in lower_trace],
                "upper_trace": [list(v) for v in upper_trace],
            }
        )

    return CheckReport(
        prop="inclusion",
        instance=instance,
        passed=True,
        stats={
            "lower_steps": len(run),
            "upper_steps": len(upper_run),
            "stutters": len(translated) - len(upper_actions),
        },
    )
