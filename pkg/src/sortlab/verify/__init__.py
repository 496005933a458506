"""Mechanical checks over machine runs.

Three families: the boundary invariant of the bubblesort machine, the
lexicographic termination measure, and stutter-closed trace inclusion
between adjacent machines in the refinement chain, plus exhaustive
drivers that sweep small instance spaces.
"""

from .report import CheckReport
from .invariants import inv, inv1, inv2, inv3, check_invariant
from .measure import measure, check_measure
from .refinement import (
    STUTTER,
    RefinementMap,
    Stutter,
    check_inclusion,
    cursor_to_sweep_map,
    refine_actions,
    refine_step,
    refinement_chain,
)
from .drivers import (
    PROPERTY_NAMES,
    all_runs,
    arrays_over,
    b2_outcomes_report,
    b5_sorts_report,
    exhaustive_property,
    inclusion_chain_report,
    invariant_report,
    measure_report,
)

__all__ = [
    "CheckReport",
    "inv",
    "inv1",
    "inv2",
    "inv3",
    "check_invariant",
    "measure",
    "check_measure",
    "Stutter",
    "STUTTER",
    "RefinementMap",
    "refine_step",
    "refine_actions",
    "refinement_chain",
    "cursor_to_sweep_map",
    "check_inclusion",
    "PROPERTY_NAMES",
    "arrays_over",
    "all_runs",
    "exhaustive_property",
    "b5_sorts_report",
    "invariant_report",
    "measure_report",
    "b2_outcomes_report",
    "inclusion_chain_report",
]
