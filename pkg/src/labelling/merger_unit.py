"""
Merger Unit
Turns analysed mergers into equivalence-table writes and chain-stack pushes
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Tuple


@dataclass(frozen=True)
class TableWrite:
    """t[address] <- data"""

    address: int
    data: int

    def __post_init__(self):
        if not self.address > self.data > 0:
            raise ValueError(f"Table write {self.address} <- {self.data} breaks t[x] <= x")


@dataclass(frozen=True)
class StackPush:
    larger: int
    smaller: int


class MergerSchedule(NamedTuple):
    writes: Tuple[TableWrite, ...]
    pushes: Tuple[StackPush, ...]
    extra_cycles: int
    reset_stack: bool = False


def schedule(mergers: Sequence, eol: bool = False) -> MergerSchedule:
    """
    Schedule the table writes for one group's mergers.

    Every merger is written; chain-flagged mergers are also pushed for the
    line-end pass. A second write costs one pause cycle.
    """
    if len(mergers) > 2:
        raise ValueError(f"At most two mergers per group, got {len(mergers)}")

    writes = tuple(TableWrite(m.larger, m.smaller) for m in mergers)
    pushes = tuple(StackPush(m.larger, m.smaller) for m in mergers if m.chain)
    return MergerSchedule(
        writes=writes,
        pushes=pushes,
        extra_cycles=max(0, len(writes) - 1),
        reset_stack=eol,
    )
