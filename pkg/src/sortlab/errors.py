"""Exception types shared by the kernel, the machines, and the services."""


class MachineError(Exception):
    """Base class for every error raised by this package."""


class MalformedAction(MachineError):
    """The action is syntactically invalid for the machine: wrong action
    family, or an index parameter outside the machine's bounds."""


class GuardFailed(MachineError):
    """The action is well-formed but its guard is false in the current
    state, so the step is undefined."""


class UnknownMachine(MachineError):
    """No machine is registered under the requested identifier."""


class UnmappedAction(MachineError):
    """A refinement map has no translation rule for the given step."""


class BudgetExceeded(MachineError):
    """An exhaustive exploration or run enumeration outgrew its budget."""


class UnknownSession(MachineError):
    """The session id does not name a live session (missing or expired)."""


class RunLogFormatError(MachineError):
    """A run-log file could not be parsed, or its version is unsupported."""


class ReplayDivergence(MachineError):
    """Replaying a run log produced a state other than the recorded one.

    Carries the zero-based index of the first diverging step.
    """

    def __init__(self, index: int, detail: str):
        super().__init__(f"divergence at step {index}: {detail}")
        self.index = index


class StepFailed(MachineError):
    """A step inside a longer run failed.

    Carries the zero-based position of the failing step, the offending
    action, and the underlying MalformedAction/GuardFailed instance.
    """

    def __init__(self, step_index: int, action: object, reason: MachineError):
        super().__init__(f"step {step_index}: {reason.__class__.__name__}: {reason}")
        self.step_index = step_index
        self.action = action
        self.reason = reason
