import pytest

from sortlab.errors import MalformedAction
from sortlab.kernel import apply_run, auto_run
from sortlab.machines import Swap, get_machine
from sortlab.table import compare_cells, render_compare, render_run


def b5_golden_run():
    b5 = get_machine("B5")
    return auto_run(b5, b5.initial_of((8, 6, 7, 4)))


# the action columns of the [8,6,7,4] sort; "" marks a stutter cell
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


def test_compare_cells_reproduce_the_golden_table():
    assert compare_cells(b5_golden_run()) == GOLDEN_CELLS


def test_compare_cells_only_start_from_cursor_machines():
    b1 = get_machine("B1")
    run = apply_run(b1, (2, 1), [Swap(0, 1)])
    with pytest.raises(MalformedAction):
        compare_cells(run)


def test_compare_cells_for_early_exit_runs():
    b5d = get_machine("B5D")
    run = auto_run(b5d, b5d.initial_of((2, 1, 3)))
    cells = compare_cells(run)
    assert [c["B4"] for c in cells] == ["inc", "inc", "reset", "inc", "reset"]
    assert [c["B1"] for c in cells] == ["swap(0,1)", "", "", "", ""]


def test_render_run_lists_states_and_actions():
    out = render_run(b5_golden_run())
    lines = out.splitlines()
    assert lines[0].split() == ["step", "array", "i", "b", "action"]
    assert lines[1].endswith("next")
    assert "[8, 6, 7, 4]" in lines[1]
    assert lines[-1].split() == ["9", "[4,", "6,", "7,", "8]", "0", "1"]
    assert len(lines) == 11  # header + ten states


def test_render_run_for_plain_array_machines():
    b1 = get_machine("B1")
    out = render_run(apply_run(b1, (8, 6, 7, 4), [Swap(0, 3)]))
    lines = out.splitlines()
    assert lines[0].split() == ["step", "array", "action"]
    assert "swap(0,3)" in lines[1]
    assert "[4, 6, 7, 8]" in lines[2]


def test_render_run_shows_early_exit_flag():
    b5d = get_machine("B5D")
    out = render_run(auto_run(b5d, b5d.initial_of((2, 1))))
    header = out.splitlines()[0].split()
    assert header == ["step", "array", "i", "b", "dirty", "action"]
    flags = [line.split()[-2] for line in out.splitlines()[1:-1]]
    assert flags[0] == "n"


def test_render_compare_blanks_are_really_blank():
    out = render_compare(b5_golden_run())
    lines = out.splitlines()
    assert lines[0].split()[-5:] == ["B5", "B4", "B3", "B2", "B1"]
    # row 3 (reset row): the line ends after the B4 column
    assert lines[4].rstrip().endswith("reset")
    assert "adj" not in lines[4]
    # terminal row carries no actions at all
    assert lines[-1].rstrip().endswith("1")
    assert len(lines) == 11
