"""Run-log files: persistent, replayable records of runs.

Format (JSON): ``{"version": 1, "machine": "B5", "initial": [8,6,7,4],
"steps": [{"action": {...}, "state": {...}}, ...], "reports": [...]}``.
``reports`` is optional and carries attached CheckReports.  A log is
valid iff applying its action list to the initial array reproduces every
recorded state exactly.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import MachineError, ReplayDivergence, RunLogFormatError
from .kernel import Run
from .machines import get_machine
from .wire import action_from_json, action_to_json, state_from_json, state_to_json

VERSION = 1


def runlog_of(run: Run, reports: list | None = None) -> dict[str, Any]:
    """Serialize a run; ``reports`` are CheckReports to attach."""
    machine = get_machine(run.machine_id)
    log: dict[str, Any] = {
        "version": VERSION,
        "machine": run.machine_id,
        "initial": list(machine.view_of(run.initial)),
        "steps": [
            {
                "action": action_to_json(s.action),
                "state": state_to_json(run.machine_id, s.state),
            }
            for s in run.steps
        ],
    }
    if reports is not None:
        log["reports"] = [r.to_json() for r in reports]
    return log


def validate_runlog(data: Any) -> dict[str, Any]:
    """Structural validation only; raises RunLogFormatError."""
    if not isinstance(data, dict):
        raise RunLogFormatError("run log must be a JSON object")
    if data.get("version") != VERSION:
        raise RunLogFormatError(
            f"unsupported run log version {data.get('version')!r}, "
            f"expected {VERSION}"
        )
    for key in ("machine", "initial", "steps"):
        if key not in data:
            raise RunLogFormatError(f"run log is missing {key!r}")
    if not isinstance(data["steps"], list):
        raise RunLogFormatError("'steps' must be a list")
    for k, entry in enumerate(data["steps"]):
        if not isinstance(entry, dict) or "action" not in entry or "state" not in entry:
            raise RunLogFormatError(f"step {k} needs 'action' and 'state'")
    return data


def save_runlog(log: dict[str, Any], path: str | Path) -> None:
    Path(path).write_text(json.dumps(log, indent=2) + "\n")


def load_runlog(path: str | Path) -> dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise RunLogFormatError(f"cannot read run log {path}: {exc}") from exc
    return validate_runlog(data)


def replay_runlog(log: dict[str, Any]) -> Run:
    """Re-execute a log and compare every recorded state.

    Returns the reconstructed run on an exact match; raises
    :class:`ReplayDivergence` at the first step whose recorded state is
    not the one the machine actually produces (a step whose action cannot
    fire at all counts as diverging at that index).
    """
    machine = get_machine(log["machine"])
    s = machine.initial_of(log["initial"])
    run = Run(machine.machine_id, s)
    for k, entry in enumerate(log["steps"]):
        action = action_from_json(entry["action"])
        recorded = state_from_json(log["machine"], entry["state"])
        try:
            s = machine.step_fn(s, action)
        except MachineError as exc:
            raise ReplayDivergence(k, f"action cannot fire: {exc}") from exc
        if s != recorded:
            raise ReplayDivergence(
                k,
                f"recorded {state_to_json(log['machine'], recorded)}, "
                f"replay gives {state_to_json(log['machine'], s)}",
            )
        run = run.extended(action, s)
    return run
