"""
Equivalence Tables
Label equivalence memory t[x] with double-buffered banks across frames
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, List, Tuple

import logging

from ..utils.errors import InterFrameBudgetError, TableConsistencyError

logger = logging.getLogger(__name__)

MIN_LABEL_BITS = 1
MAX_LABEL_BITS = 16


def init_identity(label_bits: int) -> List[int]:
    """Identity table of 2**label_bits cells"""
    if not MIN_LABEL_BITS <= label_bits <= MAX_LABEL_BITS:
        raise ValueError(
            f"label_bits must be in [{MIN_LABEL_BITS}, {MAX_LABEL_BITS}], got {label_bits}"
        )
    return list(range(1 << label_bits))


class EquivalenceTable:
    """
    Equivalence memory for one frame

    Invariants: t[0] == 0 and t[x] <= x for every address.
    """

    def __init__(self, label_bits: int = 10):
        self.label_bits = label_bits
        self.cells = init_identity(label_bits)

    def __len__(self) -> int:
        return len(self.cells)

    def __getitem__(self, address: int) -> int:
        return self.cells[address]

    @property
    def size(self) -> int:
        return len(self.cells)

    def init_identity(self) -> None:
        self.cells = init_identity(self.label_bits)

    def write(self, address: int, data: int) -> None:
        if data > address or address == 0:
            raise TableConsistencyError(f"Write t[{address}] <- {data} breaks t[x] <= x")
        self.cells[address] = data

    def record_merger(self, write) -> None:
        """Direct write of one scheduled merger: t[address] <- data"""
        self.write(write.address, write.data)

    def resolve_chain_entry(self, larger: int, smaller: int) -> int:
        """t[larger] <- t[smaller]; returns the value written"""
        data = self.cells[smaller]
        self.write(larger, data)
        return data

    def recode_group(self, labels: Iterable[int]) -> Tuple[int, ...]:
        """One-level lookup t[x] for each label"""
        cells = self.cells
        return tuple(cells[label] for label in labels)

    def is_root(self, label: int) -> bool:
        return self.cells[label] == label

    def final_recode(self, peak_label: int) -> None:
        """Ascending t[x] <- t[t[x]] over 1..peak_label; leaves every cell on its root"""
        cells = self.cells
        for address in range(1, peak_label + 1):
            cells[address] = cells[cells[address]]

    def is_idempotent(self, peak_label: int | None = None) -> bool:
        cells = self.cells
        top = len(cells) - 1 if peak_label is None else peak_label
        return all(cells[cells[x]] == cells[x] for x in range(top + 1))

    def check_invariants(self) -> None:
        if self.cells[0] != 0:
            raise TableConsistencyError(f"t[0] must stay 0, found {self.cells[0]}")
        for address, data in enumerate(self.cells):
            if data > address:
                raise TableConsistencyError(f"t[{address}] = {data} exceeds its address")

    def dump(self, peak_label: int | None = None) -> List[Tuple[int, int]]:
        """(address, data) pairs in ascending address order"""
        top = len(self.cells) - 1 if peak_label is None else peak_label
        return [(address, self.cells[address]) for address in range(top + 1)]

    def snapshot(self, peak_label: int | None = None) -> List[int]:
        top = len(self.cells) - 1 if peak_label is None else peak_label
        return list(self.cells[:top + 1])


class BankPhase(str, Enum):
    OPERATING = "operating"
    FINAL_RECODE = "final-recode"
    INITIALISING = "initialising"
    READY = "ready"


class BankPair:
    """Two tables: one labels the current frame while the other is reinitialised"""

    def __init__(self, label_bits: int = 10):
        self.label_bits = label_bits
        self.banks = [EquivalenceTable(label_bits), EquivalenceTable(label_bits)]
        self.phases = [BankPhase.OPERATING, BankPhase.READY]
        self.active_index = 0
        self.frames_completed = 0

    @property
    def active(self) -> EquivalenceTable:
        return self.banks[self.active_index]

    @property
    def standby(self) -> EquivalenceTable:
        return self.banks[1 - self.active_index]

    @property
    def active_phase(self) -> BankPhase:
        return self.phases[self.active_index]

    @property
    def standby_phase(self) -> BankPhase:
        return self.phases[1 - self.active_index]

    @property
    def interframe_cycles(self) -> int:
        """Cycles to final-recode and reinitialise one bank"""
        return 2 * self.active.size

    def finish_frame(self, peak_label: int) -> EquivalenceTable:
        """Run the final recode on the active bank and return it for the second pass"""
        self.phases[self.active_index] = BankPhase.FINAL_RECODE
        self.active.final_recode(peak_label)
        return self.active

    def swap_banks(self) -> None:
        if self.standby_phase != BankPhase.READY:
            raise InterFrameBudgetError(
                f"Standby bank is {self.standby_phase.value}, not ready for the next frame"
            )
        retired = self.active_index
        self.active_index = 1 - self.active_index
        self.phases[self.active_index] = BankPhase.OPERATING
        self.phases[retired] = BankPhase.INITIALISING
        self.frames_completed += 1

    def retire(self, budget_cycles: int) -> bool:
        """
        Reinitialise the standby bank within the inter-frame budget.

        Returns True when the bank reached READY.
        """
        index = 1 - self.active_index
        if self.phases[index] != BankPhase.INITIALISING:
            return self.phases[index] == BankPhase.READY
        self.banks[index].init_identity()
        if self.interframe_cycles <= budget_cycles:
            self.phases[index] = BankPhase.READY
            return True
        logger.warning(
            f"Bank {index} needs {self.interframe_cycles} cycles to reinitialise, budget is {budget_cycles}"
        )
        return False

    def end_frame(self, peak_label: int, budget_cycles: int) -> EquivalenceTable:
        """Final recode, swap to the standby bank and reinitialise the retired one"""
        finished = self.finish_frame(peak_label)
        snapshot = EquivalenceTable(self.label_bits)
        snapshot.cells = list(finished.cells)
        self.swap_banks()
        self.retire(budget_cycles)
        return snapshot
