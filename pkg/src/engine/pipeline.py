"""
Labelling Pipeline
Frame lifecycle: stream in, context, assign, merge, line drain, final recode, second pass
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
import logging

from ..labelling.context_gen import (
    initial_state,
    latch_left,
    prime_row,
    step_chain_recode,
    step_valid,
)
from ..labelling.label_assigner import LabelAssigner, Merger
from ..labelling.merger_unit import schedule
from ..labelling.recode_unit import recode_labels, recode_with_pending
from ..memory.chain_stack import ChainStack
from ..memory.delay_line import DelayLine
from ..memory.equivalence_tables import BankPair, EquivalenceTable
from ..stream.stream_model import (
    GROUP_SIZE,
    ZERO_QUAD,
    BinaryImage,
    LabelImage,
    Quad,
    check_streamable,
    iter_groups,
)
from ..utils.errors import DimensionError, FrameError, TableConsistencyError
from .config import EngineConfig

logger = logging.getLogger(__name__)


@dataclass
class FrameStats:
    active_cycles: int = 0
    pause_cycles: int = 0
    drain_cycles: int = 0
    interframe_cycles: int = 0
    peak_label: int = 0
    conflict_histogram: List[int] = field(default_factory=lambda: [0, 0, 0])
    chain_recodes: int = 0
    chain_pushes: int = 0
    stack_high_water: int = 0
    consumed_groups: int = 0
    valid: bool = True

    @property
    def total(self) -> int:
        return self.active_cycles + self.pause_cycles + self.drain_cycles

    def to_dict(self) -> Dict:
        data = asdict(self)
        data["total_cycles"] = self.total
        return data


@dataclass
class FrameTrace:
    """Positions are (row, group)"""

    mergers: List[Tuple[int, int, Merger]] = field(default_factory=list)
    pushes: List[Tuple[int, int, int, int]] = field(default_factory=list)
    pauses: List[Tuple[int, int]] = field(default_factory=list)

    def pushed_pairs(self) -> List[Tuple[int, int]]:
        return [(larger, smaller) for _, _, larger, smaller in self.pushes]


@dataclass
class FrameResult:
    provisional: LabelImage
    final_table: EquivalenceTable
    final: LabelImage
    stats: FrameStats
    trace: Optional[FrameTrace] = None


@dataclass(frozen=True)
class RealtimeVerdict:
    budget: int
    used: int
    slack: int
    passed: bool

    @property
    def label(self) -> str:
        return "pass" if self.passed else "fail"


def second_pass(provisional: LabelImage, t: EquivalenceTable) -> LabelImage:
    """Rewrite every provisional label through the final table"""
    lookup = np.asarray(t.cells, dtype=np.uint32)
    return LabelImage(provisional.width, provisional.height, lookup[provisional.data])


def realtime_check(stats: FrameStats, cfg: EngineConfig) -> RealtimeVerdict:
    budget = cfg.budget_cycles
    used = stats.total + stats.interframe_cycles
    return RealtimeVerdict(budget=budget, used=used, slack=budget - used, passed=used <= budget)


class QuadLabelEngine:
    """
    Streaming labelling engine

    Table banks persist across frames; everything else is per frame.
    """

    def __init__(self, cfg: Optional[EngineConfig] = None):
        self.cfg = cfg or EngineConfig()
        self.banks = BankPair(self.cfg.label_bits)
        self.frames_processed = 0

    def _read_back(self, quad: Quad, table: EquivalenceTable, stack: ChainStack,
                   pending, stats: FrameStats) -> Quad:
        """Previous-row labels through one table level, the row's chain survivors, then the pending mergers"""
        labels = table.recode_group(quad)
        survivors = stack.recode(labels)
        if survivors != labels:
            stats.chain_recodes += sum(a != b for a, b in zip(labels, survivors))
        return recode_labels(survivors, pending)

    @staticmethod
    def _check_row_flat(delay: DelayLine, table: EquivalenceTable, row: int) -> None:
        """Every label kept for the next row reaches a live label in one table step"""
        for quad in delay.slots():
            for label in table.recode_group(quad):
                if not table.is_root(label):
                    raise TableConsistencyError(
                        f"Row {row} leaves label {label} two table steps from its root after the line drain"
                    )

    def process(self, img: BinaryImage) -> FrameResult:
        """
        Label one frame.

        The delay line is exchanged once per group; the context for group g
        also needs previous-row group g+1, which is read one step early with
        DelayLine.peek.
        """
        check_streamable(img)
        cfg = self.cfg
        if cfg.width and (cfg.width, cfg.height) != (img.width, img.height):
            raise DimensionError(
                f"Frame is {img.width}x{img.height}, engine configured for {cfg.width}x{cfg.height}"
            )

        per_row = img.groups_per_row
        table = self.banks.active
        stats = FrameStats(interframe_cycles=self.banks.interframe_cycles)
        trace = FrameTrace() if cfg.trace else None

        assigner = LabelAssigner(cfg.label_bits)
        stack = ChainStack(2 * per_row, cfg.drain_order)
        delay = DelayLine(per_row)
        state = initial_state(per_row)
        provisional = np.zeros((img.height, img.width), dtype=np.uint32)
        last_mergers: Tuple[Merger, ...] = ()
        row = group_index = 0

        logger.debug(f"Frame {self.frames_processed} start: {img.width}x{img.height}")
        try:
            for group in iter_groups(img):
                row, group_index = state.row_index, state.group_index
                last_group = group_index == per_row - 1

                if row > 0 and not last_group:
                    ahead = self._read_back(delay.peek(1), table, stack, last_mergers, stats)
                else:
                    ahead = ZERO_QUAD

                ctx, state = step_valid(state, group, ahead, last_mergers)
                out = assigner.assign(ctx)
                sched = schedule(out.mergers, eol=group.eol)

                for write in sched.writes:
                    table.record_merger(write)
                for push in sched.pushes:
                    stack.push(push.larger, push.smaller)

                stats.consumed_groups += 1
                stats.active_cycles += 1
                stats.pause_cycles += sched.extra_cycles
                stats.conflict_histogram[len(out.mergers)] += 1
                stats.chain_pushes += len(sched.pushes)

                if trace is not None and out.mergers:
                    trace.mergers.extend((row, group_index, m) for m in out.mergers)
                    trace.pushes.extend((row, group_index, p.larger, p.smaller) for p in sched.pushes)
                    if out.pause:
                        trace.pauses.append((row, group_index))

                own = recode_with_pending(out.labels, out.mergers)
                delay.exchange(own.labels)
                col = group_index * GROUP_SIZE
                provisional[row, col:col + GROUP_SIZE] = out.labels.labels
                last_mergers = out.mergers

                if not sched.reset_stack:
                    state = latch_left(state, out.next_left)
                    continue

                entries = stack.drain()
                for larger, survivor in entries:
                    data = table.resolve_chain_entry(larger, survivor)
                    if not table.is_root(data):
                        raise TableConsistencyError(
                            f"Chain entry {larger}->{survivor} resolved to {data}, "
                            f"which is merged away itself"
                        )
                    state = step_chain_recode(state, Merger(larger, data))
                stats.drain_cycles += len(entries) + cfg.drain_overhead
                if trace is not None:
                    self._check_row_flat(delay, table, row)
                state = prime_row(state, self._read_back(delay.peek(0), table, stack, (), stats))

            stats.peak_label = assigner.peak_label
            stats.stack_high_water = stack.high_water
            final_table = self.banks.end_frame(stats.peak_label, cfg.budget_cycles)
            final_table.check_invariants()
            if not final_table.is_idempotent(stats.peak_label):
                raise TableConsistencyError("Final table is not idempotent after final recode")
        except FrameError as e:
            stats.valid = False
            stats.peak_label = max(stats.peak_label, assigner.peak_label)
            stats.stack_high_water = stack.high_water
            e.stats = stats
            if e.row < 0:
                e.row, e.group = row, group_index
            # the aborted frame's bank is reused by the next frame
            if self.banks.active is table:
                table.init_identity()
            logger.warning(
                f"Frame {self.frames_processed} invalid at row {e.row} group {e.group}: {e}"
            )
            raise

        self.frames_processed += 1
        provisional_image = LabelImage(img.width, img.height, provisional)
        final = second_pass(provisional_image, final_table)
        logger.debug(
            f"Frame done: peak label {stats.peak_label}, {stats.pause_cycles} pauses, "
            f"{stats.drain_cycles} drain cycles, {stats.chain_recodes} chain recodes"
        )
        return FrameResult(
            provisional=provisional_image,
            final_table=final_table,
            final=final,
            stats=stats,
            trace=trace,
        )


def process_frame(img: BinaryImage, cfg: Optional[EngineConfig] = None) -> FrameResult:
    """Label a single frame on a fresh engine"""
    return QuadLabelEngine(cfg).process(img)
