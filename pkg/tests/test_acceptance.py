"""Acceptance gate.

One test per shipped criterion.  Each prints a single verdict line
(visible under ``pytest -v -s`` and in captured output on failure) and
asserts both the property and its time budget, so a red test here always
names the criterion that broke.
"""

import json
import time
from itertools import permutations

from sortlab.cli import entry
from sortlab.errors import ReplayDivergence
from sortlab.kernel import Run, apply_run, auto_run, enabled, is_terminal
from sortlab.machines import (
    B5DState,
    B5State,
    MACHINE_IDS,
    get_machine,
    is_permutation,
    is_sorted,
)
from sortlab.runlog import load_runlog, replay_runlog, runlog_of, save_runlog
from sortlab.table import compare_cells
from sortlab.verify import (
    arrays_over,
    b2_outcomes_report,
    check_invariant,
    check_measure,
    inclusion_chain_report,
    measure,
)
from sortlab.wire import parse_action

CORPUS44 = list(arrays_over(range(4), 4))                      # 256 arrays
PERMS5 = [tuple(p) for p in permutations(range(1, 6))]         # 120
PERMS6 = [tuple(p) for p in permutations(range(1, 7))]         # 720
ALL_CORPORA = CORPUS44 + PERMS5 + PERMS6


def _verdict(name: str, ok: bool, elapsed: float, detail: str = "") -> None:
    mark = "PASS" if ok else "FAIL"
    line = f"[{mark}] {name} ({elapsed:.2f}s)"
    if detail and not ok:
        line += f" — {detail}"
    print(line)
    assert ok, f"{name}: {detail}"


def _b5_runs(corpus):
    b5 = get_machine("B5")
    for a in corpus:
        yield a, auto_run(b5, b5.initial_of(a))


# --- the sort of [8,6,7,4], frozen ---------------------------------------

GOLDEN_STATES = [
    ((8, 6, 7, 4), 0, 4),
    ((6, 8, 7, 4), 1, 4),
    ((6, 7, 8, 4), 2, 4),
    ((6, 7, 4, 8), 3, 4),
    ((6, 7, 4, 8), 0, 3),
    ((6, 7, 4, 8), 1, 3),
    ((6, 4, 7, 8), 2, 3),
    ((6, 4, 7, 8), 0, 2),
    ((4, 6, 7, 8), 1, 2),
    ((4, 6, 7, 8), 0, 1),
]

GOLDEN_CELLS = [
    {"B5": "next", "B4": "inc",   "B3": "adj(0)", "B2": "order(0,1)", "B1": "swap(0,1)"},
    {"B5": "next", "B4": "inc",   "B3": "adj(1)", "B2": "order(1,2)", "B1": "swap(1,2)"},
    {"B5": "next", "B4": "inc",   "B3": "adj(2)", "B2": "order(2,3)", "B1": "swap(2,3)"},
    {"B5": "next", "B4": "reset", "B3": "",       "B2": "",           "B1": ""},
    {"B5": "next", "B4": "inc",   "B3": "",       "B2": "",           "B1": ""},
    {"B5": "next", "B4": "inc",   "B3": "adj(1)", "B2": "order(1,2)", "B1": "swap(1,2)"},
    {"B5": "next", "B4": "reset", "B3": "",       "B2": "",           "B1": ""},
    {"B5": "next", "B4": "inc",   "B3": "adj(0)", "B2": "order(0,1)", "B1": "swap(0,1)"},
    {"B5": "next", "B4": "reset", "B3": "",       "B2": "",           "B1": ""},
]

GOLDEN_MEASURES = [
    (4, 4), (4, 3), (4, 2), (4, 1),
    (3, 3), (3, 2), (3, 1),
    (2, 2), (2, 1),
    (1, 1),
]


def test_criterion_golden_table_replay(capsys):
    t0 = time.perf_counter()
    b5 = get_machine("B5")
    run = auto_run(b5, b5.initial_of((8, 6, 7, 4)))
    states_ok = run.trajectory() == tuple(
        B5State(a, i, b) for a, i, b in GOLDEN_STATES
    )
    cells_ok = compare_cells(run) == GOLDEN_CELLS

    # and through the CLI, comparing the rendered rows token by token
    code = entry(["run", "B5", "--array", "8,6,7,4", "--auto", "--compare"])
    out = capsys.readouterr().out
    rows = [line.split() for line in out.strip().splitlines()[1:]]
    expected_rows = []
    for k, (a, i, b) in enumerate(GOLDEN_STATES):
        array_tokens = ("[" + ", ".join(map(str, a)) + "]").split()
        actions = [v for v in (GOLDEN_CELLS[k].values() if k < 9 else []) if v]
        expected_rows.append([str(k), *array_tokens, str(i), str(b), *actions])
    cli_ok = code == 0 and rows == expected_rows

    elapsed = time.perf_counter() - t0
    ok = states_ok and cells_ok and cli_ok and elapsed < 1.0
    with capsys.disabled():
        _verdict(
            "golden table replay (states, i/b, stutter cells; < 1 s)",
            ok, elapsed,
            f"states={states_ok} cells={cells_ok} cli={cli_ok}",
        )


def test_criterion_single_swap_runs(capsys):
    t0 = time.perf_counter()
    b1 = get_machine("B1")
    one = apply_run(b1, (8, 6, 7, 4), [parse_action("swap:0,3")]).final
    two = apply_run(
        b1, (8, 6, 7, 4), [parse_action("swap:1,2"), parse_action("swap:0,3")]
    ).final
    elapsed = time.perf_counter() - t0
    ok = one == (4, 6, 7, 8) and two == (4, 7, 6, 8)
    with capsys.disabled():
        _verdict("single-swap replays on B1 (exact)", ok, elapsed,
                 f"got {one} and {two}")


def test_criterion_b5_sorts_all_corpora(capsys):
    t0 = time.perf_counter()
    bad = None
    for a, run in _b5_runs(ALL_CORPORA):
        n = len(a)
        final = run.final.array
        if not (
            is_terminal(get_machine("B5"), run.final)
            and is_sorted(final)
            and is_permutation(final, a)
            and len(run) == n * (n + 1) // 2 - 1
        ):
            bad = (a, final, len(run))
            break
    elapsed = time.perf_counter() - t0
    ok = bad is None and elapsed < 10.0
    with capsys.disabled():
        _verdict(
            f"b5 sorts {len(ALL_CORPORA)} corpus arrays with n(n+1)/2-1 steps (< 10 s)",
            ok, elapsed, f"counterexample {bad}",
        )


def test_criterion_invariant_on_all_corpora(capsys):
    t0 = time.perf_counter()
    bad = None
    for a, run in _b5_runs(ALL_CORPORA):
        rep = check_invariant(run)
        if not rep.passed:
            bad = rep.counterexample
            break
        if len(a) >= 2 and (
            rep.stats["inc_steps"] < 1 or rep.stats["reset_steps"] < 1
        ):
            bad = {"array": a, "stats": rep.stats, "missing": "proof case"}
            break
    elapsed = time.perf_counter() - t0
    ok = bad is None
    with capsys.disabled():
        _verdict(
            "invariant inv1^inv2^inv3 + permutation on every corpus state, "
            "both proof cases per run (exact)",
            ok, elapsed, f"counterexample {bad}",
        )


def test_criterion_measure_on_all_corpora(capsys):
    t0 = time.perf_counter()
    bad = None
    for a, run in _b5_runs(ALL_CORPORA):
        if not check_measure(run).passed:
            bad = a
            break
    b5 = get_machine("B5")
    golden = auto_run(b5, b5.initial_of((8, 6, 7, 4)))
    sequence_ok = [measure(s) for s in golden.trajectory()] == GOLDEN_MEASURES
    elapsed = time.perf_counter() - t0
    ok = bad is None and sequence_ok
    with capsys.disabled():
        _verdict(
            "measure (b, b-i) strictly decreases; golden run spans (4,4)..(1,1) (exact)",
            ok, elapsed, f"counterexample {bad}, golden sequence ok={sequence_ok}",
        )


def test_criterion_b2_outcomes(capsys):
    t0 = time.perf_counter()
    sorted_rep = b2_outcomes_report("b2-terminal-sorted", CORPUS44, depth=6)
    confluent_rep = b2_outcomes_report("b2-confluent", CORPUS44, depth=6)
    elapsed = time.perf_counter() - t0
    ok = sorted_rep.passed and confluent_rep.passed and elapsed < 30.0
    with capsys.disabled():
        _verdict(
            "b2: every maximal run ends in the one sorted array, every step "
            "drops an inversion ({0..3}^4, depth 6; < 30 s)",
            ok, elapsed,
            f"{sorted_rep.counterexample or confluent_rep.counterexample}",
        )


def test_criterion_inclusion_chain(capsys):
    t0 = time.perf_counter()
    rep = inclusion_chain_report(arrays_over(range(3), 3), depth=8)
    elapsed = time.perf_counter() - t0
    ok = (
        rep.passed
        and set(rep.stats["per_level"]) == {"B5->B4", "B4->B3!", "B3->B2!", "B2->B1!"}
        and elapsed < 60.0
    )
    with capsys.disabled():
        _verdict(
            "inclusion chain B5->B4->B3!->B2!->B1! over {0,1,2}^3, depth 8 (< 60 s)",
            ok, elapsed, f"{rep.counterexample}",
        )


B5D_ORACLES = {
    (2, 1): [
        ((2, 1), 0, 2, False), ((1, 2), 1, 2, True), ((1, 2), 0, 1, False),
    ],
    (1, 2): [
        ((1, 2), 0, 2, False), ((1, 2), 1, 2, False), ((1, 2), 0, 1, False),
    ],
    (2, 1, 3): [
        ((2, 1, 3), 0, 3, False),
        ((1, 2, 3), 1, 3, True),
        ((1, 2, 3), 2, 3, True),
        ((1, 2, 3), 0, 2, False),
        ((1, 2, 3), 1, 2, False),
        ((1, 2, 3), 0, 1, False),
    ],
    (1, 2, 3): [
        ((1, 2, 3), 0, 3, False),
        ((1, 2, 3), 1, 3, False),
        ((1, 2, 3), 2, 3, False),
        ((1, 2, 3), 0, 1, False),
    ],
}


def test_criterion_early_exit_variant(capsys):
    t0 = time.perf_counter()
    b5, b5d = get_machine("B5"), get_machine("B5D")
    bad = None
    for a in ALL_CORPORA:
        run5d = auto_run(b5d, b5d.initial_of(a))
        run5 = auto_run(b5, b5.initial_of(a))
        final = run5d.final.array
        if not (is_sorted(final) and is_permutation(final, a)):
            bad = {"array": a, "final": final}
            break
        if len(run5d) > len(run5):
            bad = {"array": a, "b5d_steps": len(run5d), "b5_steps": len(run5)}
            break
    sweep_ok = all(
        len(auto_run(b5d, b5d.initial_of(tuple(range(n))))) == n
        for n in range(2, 8)
    )
    oracle_ok = all(
        auto_run(b5d, b5d.initial_of(a)).trajectory()
        == tuple(B5DState(*s) for s in B5D_ORACLES[a])
        for a in B5D_ORACLES
    )
    elapsed = time.perf_counter() - t0
    ok = bad is None and sweep_ok and oracle_ok
    with capsys.disabled():
        _verdict(
            "early-exit variant: sorts all corpora within b5's step count, "
            "one clean sweep (= n steps) on sorted input, hand oracles at n=2,3",
            ok, elapsed,
            f"counterexample {bad}, sweeps ok={sweep_ok}, oracles ok={oracle_ok}",
        )


def _scripted_run(machine, a, steps=6):
    # deterministic interactive script: always the first enabled action
    run = Run(machine.machine_id, machine.initial_of(a))
    for _ in range(steps):
        acts = enabled(machine, run.final)
        if not acts:
            break
        run = run.extended(acts[0], machine.step_fn(run.final, acts[0]))
    return run


def test_criterion_runlog_round_trips(tmp_path, capsys):
    t0 = time.perf_counter()
    corpus = [a for a in PERMS5 if len(set(a)) == 5][:100]
    assert len(corpus) == 100
    round_trip_ok = True
    divergence_ok = True
    detail = ""
    for k, a in enumerate(corpus):
        mid = MACHINE_IDS[k % len(MACHINE_IDS)]
        machine = get_machine(mid)
        if mid in ("B5", "B5D"):
            run = auto_run(machine, machine.initial_of(a))
        else:
            run = _scripted_run(machine, a)
        log = runlog_of(run)
        path = tmp_path / f"log{k}.json"
        save_runlog(log, path)
        loaded = load_runlog(path)
        if loaded != log or runlog_of(replay_runlog(loaded)) != log:
            round_trip_ok = False
            detail = f"round trip failed for {mid} on {a}"
            break
        if not log["steps"]:
            continue
        target = len(log["steps"]) // 2
        mutated = json.loads(json.dumps(log))
        mutated["steps"][target]["state"]["array"][0] += 1
        try:
            replay_runlog(mutated)
            divergence_ok = False
            detail = f"mutation at step {target} of {mid}/{a} not caught"
        except ReplayDivergence as exc:
            if exc.index != target:
                divergence_ok = False
                detail = f"divergence index {exc.index} != {target} for {mid}/{a}"
        if not divergence_ok:
            break
    elapsed = time.perf_counter() - t0
    ok = round_trip_ok and divergence_ok
    with capsys.disabled():
        _verdict(
            "100 run logs replay bit-exactly; each mutated control is "
            "rejected at the exact divergence index",
            ok, elapsed, detail,
        )
