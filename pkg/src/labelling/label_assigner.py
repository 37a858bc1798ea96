"""
Label Assigner
Sequential labelling of P3..P0, conflict detection and merger analysis
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Tuple

import logging

from ..stream.stream_model import LabelGroup
from ..utils.errors import ConflictArityError, LabelExhaustionError
from .recode_unit import recode_label, recode_labels

logger = logging.getLogger(__name__)

DEFAULT_LABEL_BITS = 10


def max_label_for(label_bits: int) -> int:
    """Largest assignable label; 0 stays reserved for background"""
    return (1 << label_bits) - 1


@dataclass(frozen=True)
class Merger:
    """Conflict between two labels: `larger` is redirected to `smaller`"""

    larger: int
    smaller: int
    chain: bool = False

    def __post_init__(self):
        if not self.larger > self.smaller > 0:
            raise ValueError(f"Invalid merger {self.larger} -> {self.smaller}")

    def flagged(self, chain: bool) -> "Merger":
        return replace(self, chain=chain)

    def same_pair(self, other: "Merger") -> bool:
        return (self.larger, self.smaller) == (other.larger, other.smaller)

    def __str__(self) -> str:
        return f"{self.larger}->{self.smaller}{'*' if self.chain else ''}"


@dataclass(frozen=True)
class AssignerOutput:
    labels: LabelGroup
    mergers: Tuple[Merger, ...]
    pause: bool
    next_left: int
    counter: int
    raw_mergers: Tuple[Merger, ...] = ()


def reset_counter() -> int:
    return 0


def pixel_label(
    upper_left: int,
    up: int,
    upper_right: int,
    left: int,
    pixel: int,
    counter: int,
    max_label: int = max_label_for(DEFAULT_LABEL_BITS),
) -> Tuple[int, Optional[Merger], int]:
    """
    Label one pixel from its 8-connected causal neighbourhood.

    Returns (label, raw merger or None, updated counter).
    """
    if not pixel:
        return 0, None, counter

    present = {label for label in (upper_left, up, upper_right, left) if label}
    if not present:
        if counter >= max_label:
            raise LabelExhaustionError(
                f"Label counter exhausted: {max_label} labels already assigned",
                peak_label=counter,
            )
        counter += 1
        return counter, None, counter

    if len(present) > 2:
        raise ConflictArityError(
            f"Pixel sees {len(present)} distinct labels {sorted(present)}"
        )

    smallest = min(present)
    if len(present) == 2:
        return smallest, Merger(max(present), smallest), counter
    return smallest, None, counter


def analyse_mergers(m1: Merger, m2: Merger) -> Tuple[Merger, Merger, bool, bool]:
    """
    Normalise the two conflicts of one group so they point at a single label.

    Returns the rewritten mergers and their chain flags.
    """
    if m1.larger == m2.larger:
        if m1.smaller > m2.smaller:
            m1 = Merger(m1.smaller, m2.smaller)
        else:
            m2 = Merger(m2.smaller, m1.smaller)
        chain1, chain2 = True, True
    elif m1.larger == m2.smaller:
        m2 = Merger(m2.larger, m1.smaller)
        chain1, chain2 = False, False
    elif m1.smaller == m2.larger:
        m1 = Merger(m1.larger, m2.smaller)
        chain1, chain2 = True, True
    else:
        chain1, chain2 = True, False

    return m1.flagged(chain1), m2.flagged(chain2), chain1, chain2


def chain_exposed(merger: Merger, counter_at_start: int) -> bool:
    """
    True when the merged-away label existed before the current group.

    Such a label may already sit in the delay line or be the target of a
    table cell, so its merger has to reach the chain stack. A label created
    and merged away inside the same group is only ever seen through the
    group's own recode.
    """
    return merger.larger <= counter_at_start


def assign_group(
    ctx,
    counter: int,
    last_mergers: Tuple[Merger, ...] = (),
    max_label: int = max_label_for(DEFAULT_LABEL_BITS),
) -> AssignerOutput:
    """Label one 4-pixel group from its neighbourhood context"""
    prev_row = recode_labels(ctx.prev_row, last_mergers)
    left = recode_label(ctx.left, last_mergers)
    counter_at_start = counter

    labels = []
    raw: list[Merger] = []
    for index, pixel in enumerate(ctx.pixels):
        upper_left, up, upper_right = prev_row[index:index + 3]
        if left:
            # the upper-left pixel is the left pixel's own upper neighbour
            upper_left = 0
        label, merger, counter = pixel_label(
            upper_left, up, upper_right, left, pixel, counter, max_label
        )
        if merger is not None and not any(merger.same_pair(m) for m in raw):
            raw.append(merger)
        labels.append(label)
        left = label

    if len(raw) > 2:
        raise ConflictArityError(
            f"Group ({ctx.row_index}, {ctx.group_index}) produced {len(raw)} conflicts"
        )

    if len(raw) == 2:
        m1, m2, _, _ = analyse_mergers(raw[0], raw[1])
        analysed: Tuple[Merger, ...] = (m1, m2)
    else:
        analysed = tuple(raw)
    mergers = tuple(
        m.flagged(m.chain or chain_exposed(m, counter_at_start)) for m in analysed
    )

    return AssignerOutput(
        labels=LabelGroup(tuple(labels), sof=ctx.sof, eol=ctx.eol),
        mergers=mergers,
        pause=len(mergers) == 2,
        next_left=0 if ctx.eol else labels[-1],
        counter=counter,
        raw_mergers=tuple(raw),
    )


class LabelAssigner:
    """Stateful wrapper holding the label counter and the previous group's mergers"""

    def __init__(self, label_bits: int = DEFAULT_LABEL_BITS):
        self.label_bits = label_bits
        self.max_label = max_label_for(label_bits)
        self.counter = reset_counter()
        self.peak_label = 0
        self.last_mergers: Tuple[Merger, ...] = ()

    def start_frame(self) -> None:
        self.counter = reset_counter()
        self.peak_label = 0
        self.last_mergers = ()

    def assign(self, ctx) -> AssignerOutput:
        if ctx.sof:
            self.start_frame()
        try:
            out = assign_group(ctx, self.counter, self.last_mergers, self.max_label)
        except LabelExhaustionError as e:
            # labels handed out earlier in the aborted group still count
            self.peak_label = max(self.peak_label, e.peak_label)
            raise
        self.counter = out.counter
        self.peak_label = max(self.peak_label, out.counter)
        self.last_mergers = out.mergers
        return out
