"""Exhaustive checkers over small instance spaces.

Every driver sweeps a corpus of initial arrays in lexicographic order and
stops at the first counterexample, so the reported instance is always the
lexicographically smallest failing one.  Budgets raise
:class:`BudgetExceeded` rather than silently truncating: a report that
says "pass" always means the whole advertised space was covered.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import product

from ..errors import BudgetExceeded
from ..kernel import Run, auto_run, enabled, explore, is_terminal, step
from ..machines import (
    Array,
    get_machine,
    inversions,
    is_permutation,
    is_sorted,
)
from .invariants import check_invariant
from .measure import check_measure
from .refinement import check_inclusion, refinement_chain
from .report import CheckReport

PROPERTY_NAMES: tuple[str, ...] = (
    "invariant",
    "measure",
    "b2-terminal-sorted",
    "b5-sorts",
    "inclusion-chain",
    "b2-confluent",
)

MAX_RUNS = 200_000


def arrays_over(domain: Iterable[int], n: int) -> Iterator[Array]:
    """All length-``n`` arrays over ``domain``, lexicographically."""
    return product(tuple(sorted(set(domain))), repeat=n)


def all_runs(
    machine,
    s0,
    depth: int,
    leaves_only: bool = False,
    max_runs: int = MAX_RUNS,
) -> Iterator[Run]:
    """Depth-first enumeration of runs from ``s0`` up to ``depth`` steps.

    Yields every run (including the zero-step one), or with
    ``leaves_only`` just the runs that are maximal or cut off at the
    depth bound — enough to cover every run as a prefix.
    """
    yielded = 0

    def rec(run: Run) -> Iterator[Run]:
        nonlocal yielded
        acts = enabled(machine, run.final) if len(run) < depth else ()
        if not leaves_only or not acts:
            yielded += 1
            if yielded > max_runs:
                raise BudgetExceeded(
                    f"run enumeration for {machine.machine_id} "
                    f"exceeded {max_runs} runs"
                )
            yield run
        for a in acts:
            yield from rec(run.extended(a, step(machine, run.final, a)))

    yield from rec(Run(machine.machine_id, s0))


def _ran(report: CheckReport, prop: str, stats: dict) -> CheckReport:
    report.prop = prop
    report.stats.update(stats)
    return report


def invariant_report(arrays: Iterable[Array], machine_id: str = "B5") -> CheckReport:
    """Inductive invariant over every reachable state of every auto run.

    Stats record how often each proof case fired (inc-case keeps the
    boundary, reset-case shrinks it) and the per-run minima over inputs of
    size >= 2, so coverage of both cases is itself checkable.
    """
    machine = get_machine(machine_id)
    runs = 0
    inc_total = reset_total = 0
    min_inc = min_reset = None
    for a in arrays:
        run = auto_run(machine, machine.initial_of(a))
        rep = check_invariant(run)
        if not rep.passed:
            return _ran(rep, "invariant", {"runs": runs})
        runs += 1
        inc_total += rep.stats["inc_steps"]
        reset_total += rep.stats["reset_steps"]
        if len(a) >= 2:
            min_inc = rep.stats["inc_steps"] if min_inc is None else min(
                min_inc, rep.stats["inc_steps"]
            )
            min_reset = rep.stats["reset_steps"] if min_reset is None else min(
                min_reset, rep.stats["reset_steps"]
            )
    return CheckReport(
        prop="invariant",
        instance={"machine": machine_id, "arrays": runs},
        passed=True,
        stats={
            "runs": runs,
            "inc_case_steps": inc_total,
            "reset_case_steps": reset_total,
            "min_inc_case_per_run": min_inc,
            "min_reset_case_per_run": min_reset,
        },
    )


def measure_report(arrays: Iterable[Array], machine_id: str = "B5") -> CheckReport:
    machine = get_machine(machine_id)
    runs = steps = 0
    for a in arrays:
        run = auto_run(machine, machine.initial_of(a))
        rep = check_measure(run)
        if not rep.passed:
            return _ran(rep, "measure", {"runs": runs})
        runs += 1
        steps += len(run)
    return CheckReport(
        prop="measure",
        instance={"machine": machine_id, "arrays": runs},
        passed=True,
        stats={"runs": runs, "steps": steps},
    )


def b5_sorts_report(arrays: Iterable[Array], machine_id: str = "B5") -> CheckReport:
    """Auto-run terminates sorted, permutation preserved, step count right.

    B5 takes exactly n(n+1)/2 - 1 steps on every input of size n >= 1;
    the early-exit variant may take fewer, so for it the count is only
    bounded above.
    """
    machine = get_machine(machine_id)
    runs = max_steps = 0
    for a in arrays:
        n = len(a)
        run = auto_run(machine, machine.initial_of(a))
        final = machine.view_of(run.final)
        bound = n * (n + 1) // 2 - 1 if n >= 1 else 0
        failed = []
        if not is_terminal(machine, run.final):
            failed.append("not-terminal")
        if not is_sorted(final):
            failed.append("unsorted")
        if not is_permutation(final, a):
            failed.append("not-a-permutation")
        if machine_id == "B5" and len(run) != bound:
            failed.append("step-count")
        if len(run) > bound:
            failed.append("step-bound")
        if failed:
            return CheckReport(
                prop="b5-sorts",
                instance={"machine": machine_id, "arrays": runs},
                passed=False,
                counterexample={
                    "machine": machine_id,
                    "initial": list(a),
                    "final": list(final),
                    "steps": len(run),
                    "expected_steps": bound,
                    "failed": failed,
                },
            )
        runs += 1
        max_steps = max(max_steps, len(run))
    return CheckReport(
        prop="b5-sorts",
        instance={"machine": machine_id, "arrays": runs},
        passed=True,
        stats={"runs": runs, "max_steps": max_steps},
    )


def b2_outcomes_report(
    prop: str, arrays: Iterable[Array], depth: int | None = None
) -> CheckReport:
    """Graph-level check of B2 endgames.

    Explores the full reachable graph per array (every maximal run ends in
    one of its terminal states, and every run step is one of its edges, so
    this covers exhaustive run enumeration).  ``b2-terminal-sorted``:
    terminals are sorted permutations and every edge strictly lowers the
    inversion count.  ``b2-confluent``: exactly one terminal per array.
    """
    machine = get_machine("B2")
    checked = 0
    states = 0
    for a in arrays:
        n = len(a)
        bound = depth if depth is not None else n * (n - 1) // 2
        res = explore(machine, machine.initial_of(a), bound)
        if not res.exhausted:
            raise BudgetExceeded(
                f"depth {bound} does not exhaust the B2 graph from {list(a)}"
            )

        def fail(extra: dict) -> CheckReport:
            return CheckReport(
                prop=prop,
                instance={"machine": "B2", "arrays": checked},
                passed=False,
                counterexample={"machine": "B2", "initial": list(a), **extra},
            )

        terminals = sorted(res.terminal_states())
        if prop == "b2-terminal-sorted":
            for t in terminals:
                if not (is_sorted(t) and is_permutation(t, a)):
                    return fail({"terminal": list(t)})
            for s, act, s2 in res.transitions:
                if inversions(s2) >= inversions(s):
                    return fail(
                        {
                            "state": list(s),
                            "action": f"order({act.i},{act.j})",
                            "successor": list(s2),
                        }
                    )
        elif prop == "b2-confluent":
            if len(terminals) != 1:
                return fail({"terminals": [list(t) for t in terminals]})
        else:
            raise ValueError(f"not a B2 outcome property: {prop!r}")
        checked += 1
        states += len(res.states)
    return CheckReport(
        prop=prop,
        instance={"machine": "B2", "arrays": checked},
        passed=True,
        stats={"arrays": checked, "states": states},
    )


def inclusion_chain_report(
    arrays: Iterable[Array], depth: int = 8, max_runs: int = MAX_RUNS
) -> CheckReport:
    """Stutter-closed trace inclusion along the whole chain.

    For each array and each adjacent pair, enumerates the lower machine's
    runs up to ``depth`` steps (leaf runs only; prefixes are covered) and
    replays each through the refinement map.
    """
    chain = refinement_chain()
    per_level = {f"{m.lower_id}->{m.upper_id}": 0 for m in chain}
    checked = 0
    for a in arrays:
        for rmap in chain:
            lower = get_machine(rmap.lower_id)
            upper = get_machine(rmap.upper_id)
            for run in all_runs(
                lower, lower.initial_of(a), depth, leaves_only=True
            ):
                checked += 1
                if checked > max_runs:
                    raise BudgetExceeded(
                        f"inclusion chain exceeded {max_runs} runs"
                    )
                rep = check_inclusion(run, rmap, upper)
                if not rep.passed:
                    return _ran(rep, "inclusion-chain", {"runs": checked})
                per_level[f"{rmap.lower_id}->{rmap.upper_id}"] += 1
    return CheckReport(
        prop="inclusion-chain",
        instance={"levels": list(per_level), "arrays_depth": depth},
        passed=True,
        stats={"runs": checked, "per_level": per_level},
    )


def exhaustive_property(
    prop: str, n: int, domain: Iterable[int], depth: int | None = None
) -> CheckReport:
    """Run one named property over all arrays in ``domain^n``.

    ``depth`` bounds run enumeration where one applies; left unset it
    defaults to 8 for the inclusion chain and to the B2 graph's natural
    diameter n(n-1)/2 for the B2 properties.  The returned report's
    instance records property, size, domain and effective depth.
    """
    if prop not in PROPERTY_NAMES:
        raise ValueError(f"unknown property {prop!r}; pick from {PROPERTY_NAMES}")
    dom = sorted(set(domain))
    arrays = arrays_over(dom, n)
    if prop == "invariant":
        rep = invariant_report(arrays)
    elif prop == "measure":
        rep = measure_report(arrays)
    elif prop == "b5-sorts":
        rep = b5_sorts_report(arrays)
    elif prop in ("b2-terminal-sorted", "b2-confluent"):
        depth = depth if depth is not None else n * (n - 1) // 2
        rep = b2_outcomes_report(prop, arrays, depth=depth)
    else:
        depth = depth if depth is not None else 8
        rep = inclusion_chain_report(arrays, depth=depth)
    rep.instance = {"property": prop, "n": n, "domain": dom, "depth": depth}
    return rep
