"""JSON and CLI encodings for actions and states.

Action JSON: ``{"kind": "swap", "i": 0, "j": 3}``; parameterless kinds
carry only ``kind``.  CLI action syntax: ``swap:0,3 | order:0,1 | adj:0 |
inc | reset | next``.  State JSON is keyed by the machine's base
identifier: B1-B3 ``{"array": [...]}``, B4 adds ``"i"``, B5 adds ``"b"``,
B5D adds ``"dirty"``.
"""

from __future__ import annotations

from typing import Any

from .errors import MalformedAction
from .machines import (
    Action,
    Adj,
    B4State,
    B5DState,
    B5State,
    INC,
    Inc,
    NEXT,
    Next,
    Order,
    RESET,
    Reset,
    Swap,
)

ACTION_PARAMS: dict[str, tuple[str, ...]] = {
    "swap": ("i", "j"),
    "order": ("i", "j"),
    "adj": ("i",),
    "inc": (),
    "reset": (),
    "next": (),
}


def action_kind(a: Action) -> str:
    return type(a).__name__.lower()


def action_to_json(a: Action) -> dict[str, Any]:
    kind = action_kind(a)
    out: dict[str, Any] = {"kind": kind}
    for p in ACTION_PARAMS[kind]:
        out[p] = getattr(a, p)
    return out


def action_from_json(data: Any) -> Action:
    if not isinstance(data, dict) or "kind" not in data:
        raise MalformedAction(f"action object needs a 'kind' field: {data!r}")
    kind = data["kind"]
    if kind not in ACTION_PARAMS:
        raise MalformedAction(f"unknown action kind {kind!r}")
    try:
        params = [int(data[p]) for p in ACTION_PARAMS[kind]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedAction(f"bad parameters for {kind!r}: {data!r}") from exc
    return _build(kind, params)


def parse_action(text: str) -> Action:
    """Parse the CLI action syntax, e.g. ``swap:0,3`` or ``inc``."""
    kind, _, rest = text.strip().partition(":")
    kind = kind.lower()
    if kind not in ACTION_PARAMS:
        raise MalformedAction(f"unknown action {text!r}")
    want = ACTION_PARAMS[kind]
    raw = [p for p in rest.split(",") if p.strip()] if rest else []
    if len(raw) != len(want):
        raise MalformedAction(
            f"{kind} takes {len(want)} parameter(s), got {text!r}"
        )
    try:
        params = [int(p) for p in raw]
    except ValueError as exc:
        raise MalformedAction(f"non-integer parameter in {text!r}") from exc
    return _build(kind, params)


def _build(kind: str, params: list[int]) -> Action:
    if kind == "swap":
        return Swap(*params)
    if kind == "order":
        return Order(*params)
    if kind == "adj":
        return Adj(*params)
    return {"inc": INC, "reset": RESET, "next": NEXT}[kind]


def action_label(a: Action) -> str:
    """Human-readable form used in tables: ``swap(0,3)``, ``inc``, ..."""
    kind = action_kind(a)
    params = ACTION_PARAMS[kind]
    if not params:
        return kind
    return f"{kind}({','.join(str(getattr(a, p)) for p in params)})"


def base_machine_id(machine_id: str) -> str:
    return machine_id[:-1] if machine_id.endswith("!") else machine_id


def state_to_json(machine_id: str, state: Any) -> dict[str, Any]:
    base = base_machine_id(machine_id)
    if base in ("B1", "B2", "B3"):
        return {"array": list(state)}
    out = {"array": list(state.array), "i": state.i}
    if base in ("B5", "B5D"):
        out["b"] = state.b
    if base == "B5D":
        out["dirty"] = state.dirty
    return out


def state_from_json(machine_id: str, data: dict[str, Any]) -> Any:
    base = base_machine_id(machine_id)
    try:
        array = tuple(int(x) for x in data["array"])
        if base in ("B1", "B2", "B3"):
            return array
        if base == "B4":
            return B4State(array, int(data["i"]))
        if base == "B5":
            return B5State(array, int(data["i"]), int(data["b"]))
        if base == "B5D":
            return B5DState(
                array, int(data["i"]), int(data["b"]), bool(data["dirty"])
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedAction(f"bad state object for {machine_id}: {data!r}") from exc
    raise MalformedAction(f"unknown machine id {machine_id!r}")
