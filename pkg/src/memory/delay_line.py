"""
Delay Line
Circular buffer of one row of label groups
"""

from __future__ import annotations

from typing import List

from ..stream.stream_model import ZERO_QUAD, Quad


class DelayLine:
    """One slot per group of a row; exchange() reads the slot before overwriting it"""

    def __init__(self, groups_per_row: int):
        if groups_per_row < 1:
            raise ValueError(f"Delay line needs at least one slot, got {groups_per_row}")
        self.length = groups_per_row
        self._slots: List[Quad] = [ZERO_QUAD] * groups_per_row
        self._cursor = 0

    def __len__(self) -> int:
        return self.length

    @property
    def cursor(self) -> int:
        return self._cursor

    def exchange(self, labels: Quad) -> Quad:
        out = self._slots[self._cursor]
        self._slots[self._cursor] = tuple(labels)
        self._cursor = (self._cursor + 1) % self.length
        return out

    def peek(self, offset: int = 0) -> Quad:
        """
        Read a slot without writing it.

        The context for group g needs the previous-row group g+1 one step
        before exchange() reaches it; peek(1) is that lookahead and peek(0)
        loads group 0 at the end of a row.
        """
        return self._slots[(self._cursor + offset) % self.length]

    def slots(self) -> List[Quad]:
        return list(self._slots)
