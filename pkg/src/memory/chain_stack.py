"""
Chain Stack
Bounded per-row store of chain-flagged mergers, drained at line end
"""

from __future__ import annotations

from collections import deque
from typing import Deque, Dict, Iterable, List, Tuple

import logging

from ..utils.errors import StackOverflowError

logger = logging.getLogger(__name__)

DRAIN_ORDERS = ("fifo", "lifo")


class ChainStack:
    """
    Chain mergers of the current row

    Next to the pushed entries the stack tracks, for every label merged away
    in this row, the label that currently survives it. A push recodes the
    survivor of all entries that pointed at the newly merged label, so the
    lookup is always a single step. Read-back of previous-row labels goes
    through this lookup after the one-level table read.
    """

    def __init__(self, capacity: int, order: str = "fifo"):
        if capacity < 1:
            raise ValueError(f"Chain stack capacity must be positive, got {capacity}")
        if order not in DRAIN_ORDERS:
            raise ValueError(f"Unknown drain order '{order}', expected one of {DRAIN_ORDERS}")
        self.capacity = capacity
        self.order = order
        self._entries: Deque[Tuple[int, int]] = deque()
        self._survivor: Dict[int, int] = {}
        self._merged_into: Dict[int, List[int]] = {}
        self.high_water = 0

    def __len__(self) -> int:
        return len(self._entries)

    def push(self, larger: int, smaller: int) -> None:
        if len(self._entries) >= self.capacity:
            raise StackOverflowError(
                f"Chain stack full ({self.capacity} entries) pushing {larger}->{smaller}"
            )
        self._entries.append((larger, smaller))
        self.high_water = max(self.high_water, len(self._entries))

        survivor = self.survivor(smaller)
        previous = self._survivor.get(larger)
        if previous is not None:
            self._merged_into[previous].remove(larger)
        moved = self._merged_into.pop(larger, [])
        moved.append(larger)
        for label in moved:
            self._survivor[label] = survivor
        self._merged_into.setdefault(survivor, []).extend(moved)

    def survivor(self, label: int) -> int:
        """Label that `label` has been merged into during this row, or itself"""
        return self._survivor.get(label, label)

    def recode(self, labels: Iterable[int]) -> Tuple[int, ...]:
        if not self._survivor:
            return tuple(labels)
        return tuple(self._survivor.get(label, label) for label in labels)

    def drain(self) -> List[Tuple[int, int]]:
        """
        Pop every entry in drain order and leave the stack empty.

        Entries leave as (larger, survivor of larger), so resolving them
        does not depend on the drain order.
        """
        entries = list(reversed(self._entries)) if self.order == "lifo" else list(self._entries)
        drained = [(larger, self.survivor(larger)) for larger, _ in entries]
        self._entries.clear()
        self._survivor.clear()
        self._merged_into.clear()
        return drained
