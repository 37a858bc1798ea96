"""
Fuzz Runner
Random frames through the engine, checked against the reference labelling
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd
import logging

from ..engine.config import EngineConfig
from ..engine.pipeline import process_frame
from ..patterns.stress import RandomPattern
from ..stream.stream_model import GROUP_SIZE
from ..utils.errors import FrameError
from ..utils.image_io import write_pbm
from ..utils.logger import get_logger
from ..verification.oracle import equivalent_up_to_relabeling, label_reference
from .frame_report import get_frame_statistics, log_summary, stats_record, summarise_frames

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FuzzCase:
    index: int
    seed: int
    width: int
    height: int
    density: float


@dataclass
class FuzzReport:
    frames: pd.DataFrame
    summary: Dict[str, Any]
    first_failure: Optional[Dict[str, Any]] = None
    reproducer: Optional[Path] = None

    @property
    def ok(self) -> bool:
        return self.first_failure is None


def make_case(index: int, base_seed: int, settings: Dict[str, Any]) -> FuzzCase:
    """Frame `index` of the corpus; depends only on base_seed + index"""
    seed = base_seed + index
    rng = np.random.default_rng(seed)
    min_groups = max(1, settings['min_size'] // GROUP_SIZE)
    width = GROUP_SIZE * int(rng.integers(min_groups, settings['max_width'] // GROUP_SIZE + 1))
    height = GROUP_SIZE * int(rng.integers(min_groups, settings['max_height'] // GROUP_SIZE + 1))
    density = float(rng.uniform(settings['density_min'], settings['density_max']))
    return FuzzCase(index=index, seed=seed, width=width, height=height, density=density)


def make_cases(frames: int, base_seed: int, settings: Dict[str, Any]) -> List[FuzzCase]:
    return [make_case(i, base_seed, settings) for i in range(frames)]


def run_case(case: FuzzCase, cfg: EngineConfig) -> Dict[str, Any]:
    """Label one random frame and compare it with the reference"""
    img = RandomPattern({'density': case.density, 'seed': case.seed}).generate(case.width, case.height)
    record: Dict[str, Any] = {
        'index': case.index,
        'seed': case.seed,
        'width': case.width,
        'height': case.height,
        'density': round(case.density, 4),
    }
    try:
        result = process_frame(img, cfg.for_frame(case.width, case.height))
    except FrameError as e:
        record.update(stats_record(e.stats) if e.stats is not None else {})
        record.update({'ok': False, 'reason': f"{type(e).__name__}: {e}"})
        return record

    record.update(stats_record(result.stats))
    table = result.final_table
    if not equivalent_up_to_relabeling(result.final, label_reference(img)):
        record.update({'ok': False, 'reason': "final labels differ from the reference"})
    elif not table.is_idempotent(result.stats.peak_label):
        record.update({'ok': False, 'reason': "final table is not idempotent"})
    elif result.stats.consumed_groups != (case.width // GROUP_SIZE) * case.height:
        record.update({'ok': False, 'reason': "consumed group count mismatch"})
    else:
        record.update({'ok': True, 'reason': ""})
    return record


def _init_worker(log_level: str) -> None:
    get_logger(__name__, log_level).debug(f"Fuzz worker {os.getpid()} ready")


def write_reproducer(case: FuzzCase, directory: str) -> Path:
    out_dir = Path(directory)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"fuzz_seed{case.seed}_{case.width}x{case.height}.pbm"
    img = RandomPattern({'density': case.density, 'seed': case.seed}).generate(case.width, case.height)
    write_pbm(path, img)
    return path


def run_fuzz(
    settings: Dict[str, Any],
    cfg: EngineConfig,
    stop_on_failure: bool = True,
    log_level: str = "WARNING",
) -> FuzzReport:
    """
    Run the fuzz corpus described by the `fuzz` config section

    Frames are checked in seed order; with workers > 1 they are labelled in
    a process pool and the first failure by seed order is reported.
    """
    cases = make_cases(settings['frames'], settings['seed'], settings)
    workers = max(1, int(settings.get('workers', 1)))
    logger.info(f"Fuzzing {len(cases)} frames from seed {settings['seed']} with {workers} worker(s)")

    records: List[Dict[str, Any]] = []
    first_failure: Optional[Dict[str, Any]] = None
    failed_case: Optional[FuzzCase] = None

    def consume(case: FuzzCase, record: Dict[str, Any]) -> bool:
        nonlocal first_failure, failed_case
        records.append(record)
        if record['ok'] or first_failure is not None:
            return True
        first_failure, failed_case = record, case
        logger.error(
            f"Frame {case.index} (seed {case.seed}, {case.width}x{case.height}) failed: {record['reason']}"
        )
        return not stop_on_failure

    if workers == 1:
        for case in cases:
            if not consume(case, run_case(case, cfg)):
                break
    else:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(log_level,)) as pool:
            results = pool.map(run_case, cases, [cfg] * len(cases), chunksize=16)
            for case, record in zip(cases, results):
                if not consume(case, record):
                    pool.shutdown(wait=False, cancel_futures=True)
                    break

    reproducer = None
    if failed_case is not None:
        reproducer = write_reproducer(failed_case, settings.get('reproducer_dir', 'fuzz_failures'))
        logger.error(f"Reproducer written to {reproducer}")

    frames = summarise_frames(records)
    summary = get_frame_statistics(frames)
    log_summary(summary, "Fuzz")
    return FuzzReport(frames=frames, summary=summary, first_failure=first_failure, reproducer=reproducer)
