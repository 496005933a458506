"""In-memory interactive sessions.

A session owns one machine instance and its run history.  All mutation
goes through :meth:`Session.act` / :meth:`Session.undo` under the
session's lock, so requests on the same session serialize while distinct
sessions proceed in parallel.  Undo pops history and never crosses the
initial state.

Session ids are counter-based ("s1", "s2", ...) — the service is fully
deterministic, no randomness anywhere.
"""

from __future__ import annotations

import threading
import time
from typing import Any, Callable

from .errors import UnknownSession
from .kernel import Run, enabled, is_terminal
from .machines import get_machine, is_permutation
from .verify.invariants import inv1, inv2, inv3
from .verify.measure import measure
from .wire import action_to_json, state_to_json

DEFAULT_TTL = 3600.0


class Session:
    def __init__(self, session_id: str, machine_id: str, array) -> None:
        self.id = session_id
        self.machine = get_machine(machine_id)
        self.run = Run(self.machine.machine_id, self.machine.initial_of(array))
        self.lock = threading.Lock()
        self.touched = 0.0

    @property
    def state(self) -> Any:
        return self.run.final

    def act(self, action, with_checks: bool = False) -> dict[str, Any]:
        """Apply one action and return the wire payload.

        GuardFailed/MalformedAction propagate with the state untouched.
        """
        with self.lock:
            s2 = self.machine.step_fn(self.run.final, action)
            self.run = self.run.extended(action, s2)
            return self._respond(with_checks)

    def undo(self, with_checks: bool = False) -> dict[str, Any]:
        """Pop the last step; at the initial state this is a no-op."""
        with self.lock:
            if self.run.steps:
                self.run = Run(
                    self.run.machine_id, self.run.initial, self.run.steps[:-1]
                )
            return self._respond(with_checks)

    def _respond(self, with_checks: bool) -> dict[str, Any]:
        out = self.payload()
        if with_checks:
            out["checks"] = self.checks()
        return out

    def payload(self) -> dict[str, Any]:
        s = self.run.final
        return {
            "state": state_to_json(self.machine.machine_id, s),
            "enabled": [action_to_json(a) for a in enabled(self.machine, s)],
            "terminal": is_terminal(self.machine, s),
            "step_index": len(self.run),
        }

    def checks(self) -> dict[str, Any]:
        """Per-state verdicts for the UI badges; only the fields the
        machine's state actually supports."""
        s = self.run.final
        view = self.machine.view_of(s)
        out: dict[str, Any] = {
            "permutation": is_permutation(
                view, self.machine.view_of(self.run.initial)
            )
        }
        if hasattr(s, "i"):
            out["inv1"] = inv1(s)
        if hasattr(s, "b"):
            out["inv2"] = inv2(s)
            out["inv3"] = inv3(s)
            out["measure"] = list(measure(s))
        return out

    def history(self) -> dict[str, Any]:
        with self.lock:
            return {
                "session_id": self.id,
                "machine": self.machine.machine_id,
                "initial": list(self.machine.view_of(self.run.initial)),
                "steps": [
                    {
                        "action": action_to_json(st.action),
                        "state": state_to_json(self.machine.machine_id, st.state),
                    }
                    for st in self.run.steps
                ],
                **self.payload(),
            }


class SessionStore:
    """Thread-safe id -> Session map with idle expiry."""

    def __init__(
        self,
        ttl: float = DEFAULT_TTL,
        clock: Callable[[], float] = time.monotonic,
    ) -> None:
        self.ttl = ttl
        self.clock = clock
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        self._counter = 0

    def create(self, machine_id: str, array) -> Session:
        with self._lock:
            self._expire(self.clock())
            self._counter += 1
            session = Session(f"s{self._counter}", machine_id, array)
            session.touched = self.clock()
            self._sessions[session.id] = session
            return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            now = self.clock()
            self._expire(now)
            session = self._sessions.get(session_id)
            if session is None:
                raise UnknownSession(session_id)
            session.touched = now
            return session

    def _expire(self, now: float) -> None:
        # caller holds the lock
        dead = [
            sid
            for sid, s in self._sessions.items()
            if now - s.touched > self.ttl
        ]
        for sid in dead:
            del self._sessions[sid]

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)
