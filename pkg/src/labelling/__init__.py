"""
Labelling Package
Context generation, label assignment, merger scheduling and bypass recoding
"""

from .context_gen import (
    ContextState,
    NeighbourContext,
    initial_state,
    latch_left,
    prime_row,
    step_chain_recode,
    step_valid,
)
from .label_assigner import (
    AssignerOutput,
    LabelAssigner,
    Merger,
    chain_exposed,
    analyse_mergers,
    assign_group,
    max_label_for,
    pixel_label,
    reset_counter,
)
from .merger_unit import MergerSchedule, StackPush, TableWrite, schedule
from .recode_unit import recode_label, recode_labels, recode_with_pending

__all__ = [
    'ContextState',
    'NeighbourContext',
    'initial_state',
    'latch_left',
    'prime_row',
    'step_chain_recode',
    'step_valid',
    'AssignerOutput',
    'LabelAssigner',
    'Merger',
    'chain_exposed',
    'analyse_mergers',
    'assign_group',
    'max_label_for',
    'pixel_label',
    'reset_counter',
    'MergerSchedule',
    'StackPush',
    'TableWrite',
    'schedule',
    'recode_label',
    'recode_labels',
    'recode_with_pending',
]
