"""Plain-text run tables.

``render_run`` lists one state per row with the action taken from it;
index and boundary variables get their own marker columns.  With
``compare_cells``/``render_compare`` a cursor-machine run is replayed
downward through the refinement chain and shown with one action column
per machine — a cell is blank exactly when that machine's state did not
change on that row (a stutter).
"""

from __future__ import annotations

from .errors import MalformedAction
from .kernel import Machine, Run
from .machines import get_machine
from .verify.refinement import STUTTER, cursor_to_sweep_map, refinement_chain
from .wire import action_label, base_machine_id

COMPARE_COLUMNS = ("B5", "B4", "B3", "B2", "B1")


def _fmt_array(a) -> str:
    return "[" + ", ".join(str(x) for x in a) + "]"


def _state_fields(machine_id: str) -> tuple[str, ...]:
    base = base_machine_id(machine_id)
    if base in ("B1", "B2", "B3"):
        return ()
    if base == "B4":
        return ("i",)
    if base == "B5":
        return ("i", "b")
    return ("i", "b", "dirty")


def _layout(header: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(header[c]), *(len(r[c]) for r in rows)) if rows else len(header[c])
        for c in range(len(header))
    ]
    lines = []
    for cells in [header] + rows:
        line = "  ".join(cells[c].ljust(widths[c]) for c in range(len(cells)))
        lines.append(line.rstrip())
    return "\n".join(lines)


def render_run(run: Run, machine: Machine | None = None) -> str:
    """One row per state: step number, array, marker columns, action taken."""
    machine = machine or get_machine(run.machine_id)
    fields = _state_fields(run.machine_id)
    header = ["step", "array", *fields, "action"]
    states = run.trajectory()
    rows = []
    for k, s in enumerate(states):
        array = machine.view_of(s)
        extras = [_fmt_field(getattr(s, f)) for f in fields]
        action = action_label(run.steps[k].action) if k < len(run.steps) else ""
        rows.append([str(k), _fmt_array(array), *extras, action])
    return _layout(header, rows)


def _fmt_field(v) -> str:
    if isinstance(v, bool):
        return "y" if v else "n"
    return str(v)


def compare_cells(run: Run) -> list[dict[str, str]]:
    """Per-step action cells for every machine column, top to bottom.

    Takes a run of B5 (or the early-exit variant, whose boundary jump is
    still a reset to the eyes of B4) and pushes it through the refinement
    chain, replaying each level.  Cell rule: the action label if that
    level's state changed on that row, blank otherwise.
    """
    base = base_machine_id(run.machine_id)
    if base not in ("B5", "B5D"):
        raise MalformedAction(f"compare starts from B5 or B5D runs, not {base}")

    maps = (cursor_to_sweep_map(base),) + refinement_chain()[1:]
    cells: list[dict[str, str]] = [
        {"B5": action_label(s.action)} for s in run.steps
    ]

    array0 = run.initial.array
    states = list(run.trajectory())
    actions: list = [s.action for s in run.steps]
    for rmap in maps:
        upper = get_machine(rmap.upper_id)
        column = base_machine_id(rmap.upper_id)
        up_states = [upper.initial_of(array0)]
        up_actions: list = []
        for k, a in enumerate(actions):
            ua = (
                STUTTER
                if a is None
                else rmap.translate(states[k], a, states[k + 1])
            )
            if ua is STUTTER:
                s2, shown = up_states[-1], ""
            else:
                s2 = upper.step_fn(up_states[-1], ua)
                shown = action_label(ua) if s2 != up_states[-1] else ""
            cells[k][column] = shown
            up_states.append(s2)
            up_actions.append(None if shown == "" else ua)
        states, actions = up_states, up_actions

    return cells


def render_compare(run: Run) -> str:
    """Table-style comparison: state columns, then one action column per
    machine, with stutters left blank."""
    cells = compare_cells(run)
    fields = _state_fields(run.machine_id)
    header = ["step", "array", *fields, *COMPARE_COLUMNS]
    rows = []
    for k, s in enumerate(run.trajectory()):
        extras = [_fmt_field(getattr(s, f)) for f in fields]
        acts = (
            [cells[k].get(c, "") for c in COMPARE_COLUMNS]
            if k < len(cells)
            else [""] * len(COMPARE_COLUMNS)
        )
        rows.append([str(k), _fmt_array(s.array), *extras, *acts])
    return _layout(header, rows)
