import pytest
from hypothesis import given, strategies as st

from sortlab.errors import MalformedAction
from sortlab.machines import (
    Adj,
    B4State,
    B5DState,
    B5State,
    INC,
    NEXT,
    Order,
    RESET,
    Swap,
)
from sortlab.wire import (
    action_from_json,
    action_label,
    action_to_json,
    base_machine_id,
    parse_action,
    state_from_json,
    state_to_json,
)

ACTIONS = [Swap(0, 3), Order(1, 2), Adj(0), INC, RESET, NEXT]


@pytest.mark.parametrize("action", ACTIONS)
def test_action_json_round_trip(action):
    assert action_from_json(action_to_json(action)) == action


def test_action_json_shapes():
    assert action_to_json(Swap(0, 3)) == {"kind": "swap", "i": 0, "j": 3}
    assert action_to_json(INC) == {"kind": "inc"}


@pytest.mark.parametrize(
    "bad",
    [
        None,
        {},
        {"kind": "teleport"},
        {"kind": "swap", "i": 0},
        {"kind": "swap", "i": "x", "j": 1},
    ],
)
def test_action_from_json_rejects_garbage(bad):
    with pytest.raises(MalformedAction):
        action_from_json(bad)


@pytest.mark.parametrize(
    "text,action",
    [
        ("swap:0,3", Swap(0, 3)),
        ("order:1,2", Order(1, 2)),
        ("adj:0", Adj(0)),
        ("inc", INC),
        ("reset", RESET),
        ("next", NEXT),
        (" SWAP:0,3 ", Swap(0, 3)),
    ],
)
def test_parse_action(text, action):
    assert parse_action(text) == action


@pytest.mark.parametrize("text", ["", "swap", "swap:1", "adj:0,1", "inc:3", "jump:1"])
def test_parse_action_rejects_garbage(text):
    with pytest.raises(MalformedAction):
        parse_action(text)


def test_action_labels():
    assert action_label(Swap(0, 3)) == "swap(0,3)"
    assert action_label(Adj(2)) == "adj(2)"
    assert action_label(NEXT) == "next"


def test_base_machine_id():
    assert base_machine_id("B2!") == "B2"
    assert base_machine_id("B5D") == "B5D"


states = st.one_of(
    st.tuples(st.just("B1"), st.lists(st.integers(0, 9), min_size=1, max_size=5).map(tuple)),
    st.builds(
        lambda a, i: ("B4", B4State(a, i % len(a))),
        st.lists(st.integers(0, 9), min_size=1, max_size=5).map(tuple),
        st.integers(0, 4),
    ),
    st.builds(
        lambda a, i, b: ("B5", B5State(a, i % len(a), b % (len(a) + 1))),
        st.lists(st.integers(0, 9), min_size=1, max_size=5).map(tuple),
        st.integers(0, 4),
        st.integers(0, 5),
    ),
    st.builds(
        lambda a, d: ("B5D", B5DState(a, 0, len(a), d)),
        st.lists(st.integers(0, 9), min_size=1, max_size=5).map(tuple),
        st.booleans(),
    ),
)


@given(states)
def test_state_json_round_trip(mid_state):
    mid, state = mid_state
    assert state_from_json(mid, state_to_json(mid, state)) == state


def test_state_json_shapes():
    assert state_to_json("B3", (1, 2)) == {"array": [1, 2]}
    assert state_to_json("B3!", (1, 2)) == {"array": [1, 2]}
    assert state_to_json("B5", B5State((2, 1), 0, 2)) == {
        "array": [2, 1], "i": 0, "b": 2,
    }
    assert state_to_json("B5D", B5DState((2, 1), 0, 2, True)) == {
        "array": [2, 1], "i": 0, "b": 2, "dirty": True,
    }


def test_state_from_json_rejects_garbage():
    with pytest.raises(MalformedAction):
        state_from_json("B5", {"array": [1, 2]})  # missing i, b
    with pytest.raises(MalformedAction):
        state_from_json("B7", {"array": [1, 2]})
