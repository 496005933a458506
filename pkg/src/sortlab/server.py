"""JSON-over-HTTP session service.

Routes::

    POST /sessions                {"machine": "B5", "array": [8,6,7,4]}
    POST /sessions/{id}/act       {"action": {"kind": "next"}}   (?checks=1)
    POST /sessions/{id}/undo
    GET  /sessions/{id}           full history
    GET  /machines                catalog with per-machine action schemas

plus optional static assets (``--static`` directory) for the browser lab.
Built on ThreadingHTTPServer: sessions serialize on their own lock,
distinct sessions run in parallel, and all machine code is pure, so
threads share nothing else.
"""

from __future__ import annotations

import json
import mimetypes
import re
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any
from urllib.parse import parse_qs, urlparse

from .errors import (
    GuardFailed,
    MachineError,
    MalformedAction,
    UnknownMachine,
    UnknownSession,
)
from .machines import MACHINE_IDS
from .session import DEFAULT_TTL, SessionStore
from .wire import ACTION_PARAMS, action_from_json, base_machine_id

_SESSION_ROUTE = re.compile(r"^/sessions/([^/]+)(?:/(act|undo))?$")

_MACHINE_ACTIONS = {
    "B1": ("swap",),
    "B2": ("order",),
    "B3": ("adj",),
    "B4": ("inc", "reset"),
    "B5": ("next",),
    "B5D": ("next",),
}

_STATE_FIELDS = {
    "B1": ("array",),
    "B2": ("array",),
    "B3": ("array",),
    "B4": ("array", "i"),
    "B5": ("array", "i", "b"),
    "B5D": ("array", "i", "b", "dirty"),
}

CATALOG_IDS: tuple[str, ...] = MACHINE_IDS + ("B1!", "B2!", "B3!")


def machine_catalog() -> list[dict[str, Any]]:
    out = []
    for mid in CATALOG_IDS:
        base = base_machine_id(mid)
        out.append(
            {
                "id": mid,
                "actions": [
                    {"kind": k, "params": list(ACTION_PARAMS[k])}
                    for k in _MACHINE_ACTIONS[base]
                ],
                "state_fields": list(_STATE_FIELDS[base]),
                "input_enabled": mid.endswith("!"),
                "automated": base in ("B5", "B5D"),
            }
        )
    return out


class LabServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(
        self,
        address: tuple[str, int],
        store: SessionStore | None = None,
        static_dir: str | Path | None = None,
    ) -> None:
        super().__init__(address, RequestHandler)
        self.store = store or SessionStore()
        self.static_dir = Path(static_dir).resolve() if static_dir else None


class RequestHandler(BaseHTTPRequestHandler):
    server: LabServer

    # --- plumbing --------------------------------------------------------

    def log_message(self, fmt: str, *args) -> None:
        pass  # keep stdio quiet; the service is often run under tests

    def _send(self, code: int, body: dict[str, Any] | list) -> None:
        data = json.dumps(body).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def _error(self, code: int, name: str, detail: str = "") -> None:
        body = {"error": name}
        if detail:
            body["detail"] = detail
        self._send(code, body)

    def _body(self) -> dict[str, Any]:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            data = json.loads(raw or b"{}")
        except json.JSONDecodeError as exc:
            raise ValueError(f"request body is not JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ValueError("request body must be a JSON object")
        return data

    def _wants_checks(self) -> bool:
        query = parse_qs(urlparse(self.path).query)
        return query.get("checks", ["0"])[-1] in ("1", "true")

    # --- routes ----------------------------------------------------------

    def do_OPTIONS(self) -> None:  # CORS preflight for dev setups
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_POST(self) -> None:
        path = urlparse(self.path).path
        try:
            if path == "/sessions":
                self._create_session()
                return
            m = _SESSION_ROUTE.match(path)
            if m and m.group(2) == "act":
                self._act(m.group(1))
                return
            if m and m.group(2) == "undo":
                self._undo(m.group(1))
                return
            self._error(404, "not_found", path)
        except ValueError as exc:
            self._error(400, "bad_request", str(exc))
        except UnknownSession as exc:
            self._error(404, "unknown_session", str(exc))
        except UnknownMachine as exc:
            self._error(400, "unknown_machine", str(exc))
        except MalformedAction as exc:
            self._error(400, "malformed_action", str(exc))
        except GuardFailed as exc:
            self._error(409, "guard_failed", str(exc))
        except MachineError as exc:
            self._error(400, "bad_request", str(exc))

    def do_GET(self) -> None:
        path = urlparse(self.path).path
        try:
            if path == "/machines":
                self._send(200, machine_catalog())
                return
            m = _SESSION_ROUTE.match(path)
            if m and m.group(2) is None:
                self._send(200, self.server.store.get(m.group(1)).history())
                return
            if self.server.static_dir is not None:
                self._static(path)
                return
            self._error(404, "not_found", path)
        except UnknownSession as exc:
            self._error(404, "unknown_session", str(exc))

    # --- handlers --------------------------------------------------------

    def _create_session(self) -> None:
        body = self._body()
        machine = body.get("machine")
        array = body.get("array")
        if not isinstance(machine, str) or not isinstance(array, list):
            raise ValueError("need {'machine': str, 'array': [int, ...]}")
        try:
            array = [int(x) for x in array]
        except (TypeError, ValueError) as exc:
            raise ValueError("array elements must be integers") from exc
        session = self.server.store.create(machine, array)
        out = {"session_id": session.id, **session.payload()}
        if self._wants_checks():
            out["checks"] = session.checks()
        self._send(201, out)

    def _act(self, session_id: str) -> None:
        body = self._body()
        if "action" not in body:
            raise ValueError("need {'action': {...}}")
        action = action_from_json(body["action"])
        session = self.server.store.get(session_id)
        self._send(200, session.act(action, with_checks=self._wants_checks()))

    def _undo(self, session_id: str) -> None:
        session = self.server.store.get(session_id)
        self._send(200, session.undo(with_checks=self._wants_checks()))

    # --- static assets ---------------------------------------------------

    def _static(self, path: str) -> None:
        root = self.server.static_dir
        assert root is not None
        rel = path.lstrip("/") or "index.html"
        target = (root / rel).resolve()
        if root not in target.parents and target != root:
            self._error(404, "not_found", path)
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._error(404, "not_found", path)
            return
        ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        data = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


def create_server(
    host: str = "127.0.0.1",
    port: int = 8000,
    static_dir: str | Path | None = None,
    ttl: float = DEFAULT_TTL,
) -> LabServer:
    return LabServer((host, port), SessionStore(ttl=ttl), static_dir)
