"""Command-line front end.

Subcommands: ``run`` (execute a machine on an array, interactively
scripted or auto-driven), ``verify`` (exhaustive property checks),
``replay`` (re-execute a run log and compare states), ``serve`` (the
HTTP session service).

Exit codes: 0 ok/pass, 1 check failed, 2 guard/malformed action (with
step index), 3 unknown machine or parse error, 4 budget exceeded,
5 replay divergence.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    BudgetExceeded,
    GuardFailed,
    MalformedAction,
    ReplayDivergence,
    RunLogFormatError,
    StepFailed,
    UnknownMachine,
)
from .kernel import apply_run, auto_run
from .machines import get_machine
from .runlog import load_runlog, replay_runlog, runlog_of, save_runlog
from .server import create_server
from .session import DEFAULT_TTL
from .table import render_compare, render_run
from .verify import check_invariant, check_measure
from .verify.drivers import PROPERTY_NAMES, exhaustive_property
from .wire import base_machine_id, parse_action

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_STEP_FAILED = 2
EXIT_BAD_INPUT = 3
EXIT_BUDGET = 4
EXIT_DIVERGED = 5


def parse_array(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"--array wants comma-separated integers, got {text!r}") from exc


def parse_domain(text: str) -> list[int]:
    """``0..3`` or ``0,1,2,3``."""
    text = text.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError as exc:
            raise ValueError(f"bad domain {text!r}") from exc
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"bad domain {text!r}") from exc


def cmd_run(args: argparse.Namespace) -> int:
    machine = get_machine(args.machine)
    array = parse_array(args.array)
    base = base_machine_id(machine.machine_id)
    if args.auto:
        if base not in ("B5", "B5D"):
            raise ValueError("--auto drives automated machines only (B5, B5D)")
        if args.act:
            raise ValueError("--auto and --act are mutually exclusive")
        run = auto_run(machine, machine.initial_of(array), max_steps=args.max_steps)
    else:
        actions = []
        for k, text in enumerate(args.act):
            try:
                actions.append(parse_action(text))
            except MalformedAction as exc:
                raise StepFailed(k, text, exc) from exc
        run = apply_run(machine, machine.initial_of(array), actions)

    print(render_compare(run) if args.compare else render_run(run, machine))

    reports = None
    failed = False
    if args.check:
        if base in ("B5", "B5D"):
            reports = [check_invariant(run), check_measure(run)]
        else:
            reports = []
        for rep in reports:
            verdict = "pass" if rep.passed else "FAIL"
            print(f"check {rep.prop}: {verdict}")
            failed = failed or not rep.passed

    if args.out:
        save_runlog(runlog_of(run, reports), args.out)

    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    domain = parse_domain(args.domain)
    report = exhaustive_property(args.property, args.n, domain, depth=args.depth)
    payload = json.dumps(report.to_json(), indent=2)
    print(payload)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(payload + "\n")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_replay(args: argparse.Namespace) -> int:
    log = load_runlog(args.path)
    run = replay_runlog(log)
    machine = get_machine(log["machine"])
    final = list(machine.view_of(run.final))
    print(f"ok: {log['machine']} replayed {len(run)} steps, final {final}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    server = create_server(args.host, args.port, args.static, ttl=args.ttl)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sortlab",
        description="Interactive sorting machines: run, verify, replay, serve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="execute a machine on an array")
    p.add_argument("machine", help="B1..B5, B5D, or an input-enabled id like B2!")
    p.add_argument("--array", required=True, help="comma-separated integers")
    p.add_argument(
        "--act",
        action="append",
        default=[],
        metavar="ACTION",
        help="swap:i,j | order:i,j | adj:i | inc | reset | next (repeatable)",
    )
    p.add_argument("--auto", action="store_true", help="drive B5/B5D to termination")
    p.add_argument("--max-steps", type=int, default=100_000)
    p.add_argument(
        "--compare",
        action="store_true",
        help="replay the sort under all five machines, one action column each",
    )
    p.add_argument("--check", action="store_true", help="attach invariant/measure verdicts")
    p.add_argument("--out", metavar="PATH", help="write a run log")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="exhaustive property check on small instances")
    p.add_argument("property", choices=PROPERTY_NAMES)
    p.add_argument("--n", type=int, default=3, help="array length")
    p.add_argument("--domain", default="0..2", help="value domain, e.g. 0..3 or 1,2,5")
    p.add_argument("--depth", type=int, default=None, help="run-length bound")
    p.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("replay", help="re-execute a run log and compare states")
    p.add_argument("path")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("serve", help="serve the JSON session protocol over HTTP")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", metavar="DIR", help="also serve UI assets from DIR")
    p.add_argument("--ttl", type=float, default=DEFAULT_TTL, help="idle session expiry, seconds")
    p.set_defaults(func=cmd_serve)

    return parser


def entry(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StepFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STEP_FAILED
    except (GuardFailed, MalformedAction) as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return EXIT_STEP_FAILED
    except ReplayDivergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIVERGED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UnknownMachine, RunLogFormatError) as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(entry())
