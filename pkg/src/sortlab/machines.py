"""Array primitives and the sorting-machine family B1..B5D.

Six machines over integer arrays, ordered from fully interactive to fully
automated.  Each trades away one piece of user choice:

* ``B1`` swaps any pair on demand and never terminates.
* ``B2`` only swaps pairs that are out of order, so it must end sorted.
* ``B3`` restricts ordering to adjacent pairs.
* ``B4`` adds a sweep index: ``inc`` orders at (i, i+1) and advances,
  ``reset`` starts a new sweep at any time.
* ``B5`` adds a boundary before the sorted suffix and drives the sweep
  with a single ``next`` action, which makes it classic bubblesort.
* ``B5D`` additionally tracks whether the current sweep swapped anything
  and stops after the first clean sweep.

Identifiers ``B1``..``B5D`` (plus the ``!`` suffix for input-enabled
extensions) are the names used by the CLI and the wire protocol.

State equality is structural on the full record; views are the array
component.  Elements are plain ints and duplicates are allowed: the order
guard is strictly greater-than, so equal elements never swap.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from . import kernel
from .errors import GuardFailed, MalformedAction, UnknownMachine
from .kernel import Machine

Array = tuple[int, ...]


# --- actions -----------------------------------------------------------

@dataclass(frozen=True)
class Swap:
    """Exchange the elements at i and j (requires 0 <= i < j < n)."""

    i: int
    j: int


@dataclass(frozen=True)
class Order:
    """Exchange the elements at i and j, permitted only when a[i] > a[j]."""

    i: int
    j: int


@dataclass(frozen=True)
class Adj:
    """Order the adjacent pair at (i, i+1); requires 0 <= i < n-1."""

    i: int


@dataclass(frozen=True)
class Inc:
    """Order the pair at the sweep index and advance the index."""


@dataclass(frozen=True)
class Reset:
    """Move the sweep index back to 0, starting a new sweep."""


@dataclass(frozen=True)
class Next:
    """The single action of an automated machine."""


INC = Inc()
RESET = Reset()
NEXT = Next()

Action = Swap | Order | Adj | Inc | Reset | Next


# --- states ------------------------------------------------------------

@dataclass(frozen=True)
class B4State:
    array: Array
    i: int


@dataclass(frozen=True)
class B5State:
    array: Array
    i: int
    b: int


@dataclass(frozen=True)
class B5DState:
    array: Array
    i: int
    b: int
    dirty: bool


# --- array primitives ---------------------------------------------------

def _check_pair(a: Array, i: int, j: int) -> None:
    if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < len(a)):
        raise MalformedAction(f"need 0 <= i < j < {len(a)}, got i={i}, j={j}")


def swap(a: Array, i: int, j: int) -> Array:
    """The array with the elements at i and j exchanged."""
    _check_pair(a, i, j)
    out = list(a)
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def order(a: Array, i: int, j: int) -> Array:
    """The array with min(a[i], a[j]) at i and max at j; identity when
    the pair is already in order."""
    _check_pair(a, i, j)
    return swap(a, i, j) if a[i] > a[j] else a


def is_sorted(a: Sequence[int]) -> bool:
    """Non-strict: equal neighbours count as sorted."""
    return all(a[k] <= a[k + 1] for k in range(len(a) - 1))


def is_permutation(a: Sequence[int], a0: Sequence[int]) -> bool:
    """Multiset equality, so duplicates must match in count."""
    return Counter(a) == Counter(a0)


def inversions(a: Sequence[int]) -> int:
    """Number of pairs i < j with a[i] > a[j]."""
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


# --- machines -----------------------------------------------------------

def swap_machine() -> Machine:
    """B1: any pair may be swapped at any time.

    Interactive, deterministic, and non-terminating for n >= 2; every
    permutation of the input is reachable.
    """

    def initial(arr):
        return tuple(arr)

    def actions(a):
        n = len(a)
        return tuple(Swap(i, j) for i in range(n) for j in range(i + 1, n))

    def step(a, act):
        if not isinstance(act, Swap):
            raise MalformedAction(f"B1 accepts swap(i,j), got {act!r}")
        return swap(a, act.i, act.j)

    def view(a):
        return a

    return Machine("B1", initial, actions, step, view)


def order_machine() -> Machine:
    """B2: swap a pair only when it is out of order.

    Every step removes at least one inversion, so every maximal run is
    finite and ends in the sorted permutation.
    """

    def initial(arr):
        return tuple(arr)

    def actions(a):
        n = len(a)
        return tuple(Order(i, j) for i in range(n) for j in range(i + 1, n))

    def step(a, act):
        if not isinstance(act, Order):
            raise MalformedAction(f"B2 accepts order(i,j), got {act!r}")
        _check_pair(a, act.i, act.j)
        if a[act.i] <= a[act.j]:
            raise GuardFailed(f"a[{act.i}] <= a[{act.j}]")
        return swap(a, act.i, act.j)

    def view(a):
        return a

    return Machine("B2", initial, actions, step, view)


def adjacent_machine() -> Machine:
    """B3: order adjacent pairs only; each step removes exactly one inversion."""

    def initial(arr):
        return tuple(arr)

    def actions(a):
        return tuple(Adj(i) for i in range(len(a) - 1))

    def step(a, act):
        if not isinstance(act, Adj):
            raise MalformedAction(f"B3 accepts adj(i), got {act!r}")
        if not (isinstance(act.i, int) and 0 <= act.i < len(a) - 1):
            raise MalformedAction(f"need 0 <= i < {len(a) - 1}, got i={act.i}")
        if a[act.i] <= a[act.i + 1]:
            raise GuardFailed(f"a[{act.i}] <= a[{act.i + 1}]")
        return swap(a, act.i, act.i + 1)

    def view(a):
        return a

    return Machine("B3", initial, actions, step, view)


def bubble_machine() -> Machine:
    """B4: a sweep index automates pair selection.

    ``inc`` is enabled while i < n-1; it orders the pair at (i, i+1) and
    advances the index, carrying the running maximum rightward.  ``reset``
    is enabled at any time (a full-state self-loop at i = 0) and returns
    the index to 0.  Because reset may fire forever, B4 does not terminate.
    """

    def initial(arr):
        return B4State(tuple(arr), 0)

    def actions(s):
        return (INC, RESET)

    def step(s, act):
        if isinstance(act, Inc):
            if s.i >= len(s.array) - 1:
                raise GuardFailed(f"inc needs i < n-1, got i={s.i}")
            return B4State(order(s.array, s.i, s.i + 1), s.i + 1)
        if isinstance(act, Reset):
            return B4State(s.array, 0)
        raise MalformedAction(f"B4 accepts inc | reset, got {act!r}")

    def view(s):
        return s.array

    return Machine("B4", initial, actions, step, view)


def bubblesort_machine() -> Machine:
    """B5: bubblesort proper, automated by a single ``next`` action.

    State (array, i, b) starts at (a, 0, n).  While i < b-1, next behaves
    like B4's inc with the boundary unchanged; when i reaches b-1 it
    behaves like reset and decrements the boundary, growing the sorted
    suffix by one.  Terminal exactly when b <= 1, which for n <= 1 is the
    initial state already.
    """

    def initial(arr):
        a = tuple(arr)
        return B5State(a, 0, len(a))

    def actions(s):
        return (NEXT,)

    def step(s, act):
        if not isinstance(act, Next):
            raise MalformedAction(f"B5 accepts next, got {act!r}")
        if s.b <= 1:
            raise GuardFailed("terminal: b <= 1")
        if s.i < s.b - 1:
            return B5State(order(s.array, s.i, s.i + 1), s.i + 1, s.b)
        if s.i == s.b - 1:
            return B5State(s.array, 0, s.b - 1)
        raise GuardFailed(f"sweep index i={s.i} beyond boundary b={s.b}")

    def view(s):
        return s.array

    return Machine("B5", initial, actions, step, view)


def early_exit_machine() -> Machine:
    """B5D: bubblesort that stops after the first clean sweep.

    A dirty flag records whether the current sweep swapped anything.  The
    inc-case sets it when the pair at (i, i+1) is out of order; the
    boundary-case either starts the next sweep (dirty, b-1) or, after a
    clean sweep, jumps straight to a terminal state, encoded uniformly as
    b = 1 with the index back at 0.
    """

    def initial(arr):
        a = tuple(arr)
        return B5DState(a, 0, len(a), False)

    def actions(s):
        return (NEXT,)

    def step(s, act):
        if not isinstance(act, Next):
            raise MalformedAction(f"B5D accepts next, got {act!r}")
        if s.b <= 1:
            raise GuardFailed("terminal: b <= 1")
        if s.i < s.b - 1:
            swapped = s.array[s.i] > s.array[s.i + 1]
            return B5DState(
                order(s.array, s.i, s.i + 1), s.i + 1, s.b, s.dirty or swapped
            )
        if s.i == s.b - 1:
            if s.dirty:
                return B5DState(s.array, 0, s.b - 1, False)
            return B5DState(s.array, 0, 1, False)
        raise GuardFailed(f"sweep index i={s.i} beyond boundary b={s.b}")

    def view(s):
        return s.array

    return Machine("B5D", initial, actions, step, view)


_BUILDERS = {
    "B1": swap_machine,
    "B2": order_machine,
    "B3": adjacent_machine,
    "B4": bubble_machine,
    "B5": bubblesort_machine,
    "B5D": early_exit_machine,
}

MACHINE_IDS: tuple[str, ...] = tuple(_BUILDERS)


def get_machine(machine_id: str) -> Machine:
    """Look up a machine by wire identifier.

    A trailing ``!`` selects the input-enabled extension, e.g. ``B2!``.
    Raises UnknownMachine for anything else.
    """
    wants_extension = machine_id.endswith("!")
    base = machine_id[:-1] if wants_extension else machine_id
    builder = _BUILDERS.get(base)
    if builder is None:
        raise UnknownMachine(machine_id)
    machine = builder()
    return kernel.input_enabled(machine) if wants_extension else machine
