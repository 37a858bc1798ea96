"""
Context Generator
Builds the 6-label upper neighbourhood L5..L0 and the left label G for each group
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence, Tuple

import logging

from ..stream.stream_model import GROUP_SIZE, ZERO_QUAD, PixelGroup, Quad
from .recode_unit import recode_label, recode_labels

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NeighbourContext:
    """
    Neighbourhood of one group

    prev_row holds L5..L0, the previous-row labels of columns 4g-1 .. 4g+4.
    left is G, the label of column 4g-1 in the current row.
    """

    prev_row: Tuple[int, int, int, int, int, int]
    left: int
    pixels: Quad
    row_index: int
    group_index: int
    sof: bool = False
    eol: bool = False


@dataclass(frozen=True)
class ContextState:
    """Previous-row groups g-1 and g held ahead of the step for group g"""

    groups_per_row: int
    held: Tuple[Quad, Quad] = (ZERO_QUAD, ZERO_QUAD)
    left: int = 0
    row_index: int = 0
    group_index: int = 0

    @property
    def first_row(self) -> bool:
        return self.row_index == 0


def initial_state(groups_per_row: int) -> ContextState:
    return ContextState(groups_per_row=groups_per_row)


def _recode_held(held: Tuple[Quad, Quad], pending: Sequence) -> Tuple[Quad, Quad]:
    if not pending:
        return held
    return (recode_labels(held[0], pending), recode_labels(held[1], pending))


def step_valid(
    state: ContextState,
    in_group: PixelGroup,
    delayed_labels: Quad,
    pending_mergers: Sequence = (),
) -> Tuple[NeighbourContext, ContextState]:
    """
    Emit the context for the current group and shift in the next
    previous-row group. Held labels and G are recoded through the pending
    mergers in the same step.
    """
    before, current = _recode_held(state.held, pending_mergers)
    left = recode_label(state.left, pending_mergers)
    ahead = tuple(delayed_labels)

    g = state.group_index
    last_group = g == state.groups_per_row - 1

    if state.first_row:
        prev_row = (0,) * (GROUP_SIZE + 2)
    else:
        l5 = 0 if g == 0 else before[-1]
        l0 = 0 if last_group else ahead[0]
        prev_row = (l5, *current, l0)

    if g == 0:
        left = 0

    ctx = NeighbourContext(
        prev_row=prev_row,
        left=left,
        pixels=tuple(in_group.pixels),
        row_index=state.row_index,
        group_index=g,
        sof=in_group.sof,
        eol=in_group.eol,
    )

    if last_group:
        new_state = replace(
            state,
            held=(ZERO_QUAD, ZERO_QUAD),
            left=0,
            row_index=state.row_index + 1,
            group_index=0,
        )
    else:
        new_state = replace(state, held=(current, ahead), left=left, group_index=g + 1)
    return ctx, new_state


def latch_left(state: ContextState, label: int) -> ContextState:
    """Store G, the rightmost label of the group just assigned"""
    return replace(state, left=label)


def step_chain_recode(state: ContextState, merger) -> ContextState:
    """Apply one line-end chain resolution to the held labels without shifting"""
    held = _recode_held(state.held, (merger,))
    return replace(state, held=held, left=recode_label(state.left, (merger,)))


def prime_row(state: ContextState, first_upper: Quad) -> ContextState:
    """Load group 0 of the row just completed before the next row starts"""
    return replace(state, held=(ZERO_QUAD, tuple(first_upper)), left=0, group_index=0)
