"""Generic interactive transition-system kernel.

A :class:`Machine` bundles an initial-state constructor, an enumerator of
well-formed actions, a guarded deterministic step function, and a view map
from states to observations.  States and actions are immutable values, and
every operation in this module is a pure function, so the kernel is safe
to call from any thread.

Terminology: a *run* is an initial state plus a sequence of linked
(action, state) steps; its *trajectory* is the state sequence and its
*trace* the view sequence.  A state is *terminal* when no action is
enabled, and a machine is *automated* when exactly one action is ever on
offer, leaving the user no choice.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, replace
from typing import Any

from .errors import BudgetExceeded, GuardFailed, MachineError, StepFailed

View = tuple[int, ...]
Trace = tuple[View, ...]


@dataclass(frozen=True)
class Machine:
    """A deterministic, guarded transition system.

    ``step_fn`` is partial: it raises :class:`GuardFailed` where the guard
    is false and :class:`MalformedAction` for actions outside the
    machine's action syntax.  ``actions_of`` enumerates every well-formed
    action in a fixed, deterministic order; the guard decides which of
    them are enabled.  ``view_of`` projects a state to its observation.
    """

    machine_id: str
    initial_of: Callable[[Sequence[int]], Any]
    actions_of: Callable[[Any], tuple]
    step_fn: Callable[[Any, Any], Any]
    view_of: Callable[[Any], View]
    input_enabled: bool = False


@dataclass(frozen=True)
class Step:
    """One transition of a run: the action taken and the state it produced."""

    action: Any
    state: Any


@dataclass(frozen=True)
class Run:
    """An initial state plus linked steps.

    Linkage invariant: each step's state is ``step_fn`` of the previous
    state and the step's action (or the previous state itself when the
    machine is input-enabled and the guard failed).
    """

    machine_id: str
    initial: Any
    steps: tuple[Step, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def final(self) -> Any:
        return self.steps[-1].state if self.steps else self.initial

    def trajectory(self) -> tuple:
        return (self.initial,) + tuple(s.state for s in self.steps)

    def actions(self) -> tuple:
        return tuple(s.action for s in self.steps)

    def extended(self, action: Any, state: Any) -> "Run":
        return replace(self, steps=self.steps + (Step(action, state),))


@dataclass(frozen=True)
class ProblemSpec:
    """A computation problem over views: initial views, final views, and
    the map sending each initial view to the final view that solves it."""

    is_initial: Callable[[View], bool]
    is_final: Callable[[View], bool]
    spec_map: Callable[[View], View]


def sorting_problem() -> ProblemSpec:
    """The sorting problem: any integer array in, its sorted permutation out."""
    return ProblemSpec(
        is_initial=lambda v: True,
        is_final=lambda v: all(v[k] <= v[k + 1] for k in range(len(v) - 1)),
        spec_map=lambda v: tuple(sorted(v)),
    )


def step(machine: Machine, s: Any, a: Any) -> Any:
    """Apply action ``a`` in state ``s``, returning the unique successor.

    Raises MalformedAction for out-of-syntax actions and GuardFailed when
    the guard is false (never for input-enabled machines, which stutter).
    """
    return machine.step_fn(s, a)


def enabled(machine: Machine, s: Any) -> tuple:
    """The well-formed actions whose guard holds in ``s``.

    Empty exactly when ``s`` is terminal.  Order is the deterministic
    order of ``actions_of``.
    """
    out = []
    for a in machine.actions_of(s):
        try:
            machine.step_fn(s, a)
        except GuardFailed:
            continue
        out.append(a)
    return tuple(out)


def is_terminal(machine: Machine, s: Any) -> bool:
    return not enabled(machine, s)


def is_automated(machine: Machine, s: Any) -> bool:
    """True when the user has no choice left: at most one well-formed action."""
    return len(machine.actions_of(s)) <= 1


def apply_run(machine: Machine, s0: Any, actions: Iterable[Any]) -> Run:
    """Fold a sequence of actions into a Run starting at ``s0``.

    Stops at the first failing step and raises :class:`StepFailed` with
    the zero-based position of the failure.
    """
    run = Run(machine.machine_id, s0)
    s = s0
    for k, a in enumerate(actions):
        try:
            s = machine.step_fn(s, a)
        except MachineError as exc:
            raise StepFailed(k, a, exc) from exc
        run = run.extended(a, s)
    return run


def trace_of(run: Run, machine: Machine) -> Trace:
    """The view sequence of a run; always one longer than the step list."""
    return tuple(machine.view_of(s) for s in run.trajectory())


def input_enabled(machine: Machine) -> Machine:
    """The input-enabled extension: same states and actions, but a failed
    guard becomes a self-loop, so every well-formed action is total.

    Idempotent.  The extension's identifier carries a ``!`` suffix.
    """
    if machine.input_enabled:
        return machine
    base_step = machine.step_fn

    def step_total(s, a):
        try:
            return base_step(s, a)
        except GuardFailed:
            return s

    return replace(
        machine,
        machine_id=machine.machine_id + "!",
        step_fn=step_total,
        input_enabled=True,
    )


def auto_run(machine: Machine, s0: Any, max_steps: int = 100_000) -> Run:
    """Drive an automated machine from ``s0`` to a terminal state.

    Raises MachineError if more than one action is ever enabled (the
    machine is not automated there) and BudgetExceeded past ``max_steps``.
    """
    run = Run(machine.machine_id, s0)
    s = s0
    while True:
        acts = enabled(machine, s)
        if not acts:
            return run
        if len(acts) > 1:
            raise MachineError(
                f"{machine.machine_id} is not automated: {len(acts)} actions enabled"
            )
        if len(run.steps) >= max_steps:
            raise BudgetExceeded(f"auto run exceeded {max_steps} steps")
        s = machine.step_fn(s, acts[0])
        run = run.extended(acts[0], s)


@dataclass(frozen=True)
class ExploreResult:
    """Outcome of a bounded breadth-first exploration.

    ``transitions`` lists every (state, action, successor) edge out of the
    explored states; when ``exhausted`` is true the frontier reached a
    fixpoint and the edge list covers the whole reachable graph.
    """

    states: frozenset
    transitions: tuple[tuple[Any, Any, Any], ...]
    exhausted: bool

    def terminal_states(self) -> frozenset:
        sources = {s for s, _, _ in self.transitions}
        return frozenset(s for s in self.states if s not in sources)


def explore(
    machine: Machine,
    s0: Any,
    depth_bound: int,
    max_states: int = 100_000,
) -> ExploreResult:
    """All states reachable from ``s0`` within ``depth_bound`` enabled steps.

    Raises BudgetExceeded when more than ``max_states`` distinct states
    are visited.
    """
    visited = {s0}
    frontier = [s0]
    transitions: list[tuple[Any, Any, Any]] = []
    for _ in range(depth_bound):
        nxt = []
        for s in frontier:
            for a in enabled(machine, s):
                s2 = machine.step_fn(s, a)
                transitions.append((s, a, s2))
                if s2 not in visited:
                    visited.add(s2)
                    if len(visited) > max_states:
                        raise BudgetExceeded(
                            f"exploration exceeded {max_states} states"
                        )
                    nxt.append(s2)
        frontier = nxt
        if not frontier:
            break

    # The depth bound may cut the search off while the frontier still has
    # unexpanded states.  Probe them: if no probe discovers a new state the
    # state set is complete after all, and the probed edges belong in the
    # transition list.
    exhausted = True
    probed: list[tuple[Any, Any, Any]] = []
    for s in frontier:
        for a in enabled(machine, s):
            s2 = machine.step_fn(s, a)
            if s2 in visited:
                probed.append((s, a, s2))
            else:
                exhausted = False
    if exhausted:
        transitions.extend(probed)
    return ExploreResult(frozenset(visited), tuple(transitions), exhausted)
