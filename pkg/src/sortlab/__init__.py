"""sortlab: interactive transition-system lab for sorting machines.

A generic kernel for guarded deterministic transition systems, six
sorting machines (B1..B5 and the early-exit B5D) ranging from fully
interactive to fully automated, exhaustive verification drivers, and a
CLI plus JSON-over-HTTP session service.
"""

from .errors import (
    BudgetExceeded,
    GuardFailed,
    MachineError,
    MalformedAction,
    ReplayDivergence,
    RunLogFormatError,
    StepFailed,
    UnknownMachine,
    UnknownSession,
    UnmappedAction,
)
from .kernel import (
    ExploreResult,
    Machine,
    ProblemSpec,
    Run,
    Step,
    apply_run,
    auto_run,
    enabled,
    explore,
    input_enabled,
    is_automated,
    is_terminal,
    sorting_problem,
    step,
    trace_of,
)
from .machines import (
    MACHINE_IDS,
    Adj,
    Array,
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
    get_machine,
    inversions,
    is_permutation,
    is_sorted,
)
from .runlog import load_runlog, replay_runlog, runlog_of, save_runlog
from .table import compare_cells, render_compare, render_run
from .wire import (
    action_from_json,
    action_label,
    action_to_json,
    parse_action,
    state_from_json,
    state_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "MachineError",
    "MalformedAction",
    "GuardFailed",
    "UnknownMachine",
    "UnmappedAction",
    "BudgetExceeded",
    "UnknownSession",
    "RunLogFormatError",
    "ReplayDivergence",
    "StepFailed",
    # kernel
    "Machine",
    "Run",
    "Step",
    "ProblemSpec",
    "ExploreResult",
    "step",
    "enabled",
    "is_terminal",
    "is_automated",
    "apply_run",
    "trace_of",
    "input_enabled",
    "auto_run",
    "explore",
    "sorting_problem",
    # machines
    "Array",
    "Swap",
    "Order",
    "Adj",
    "Inc",
    "Reset",
    "Next",
    "INC",
    "RESET",
    "NEXT",
    "B4State",
    "B5State",
    "B5DState",
    "MACHINE_IDS",
    "get_machine",
    "is_sorted",
    "is_permutation",
    "inversions",
    # wire / logs / tables
    "action_to_json",
    "action_from_json",
    "action_label",
    "parse_action",
    "state_to_json",
    "state_from_json",
    "runlog_of",
    "save_runlog",
    "load_runlog",
    "replay_runlog",
    "render_run",
    "render_compare",
    "compare_cells",
]
