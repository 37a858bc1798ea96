"""
Frame Report
Formats frame statistics for the CLI and aggregates per-frame records with pandas
"""

import json
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd
import logging

from ..engine.pipeline import FrameStats, RealtimeVerdict

logger = logging.getLogger(__name__)

STAT_KEYS = [
    'active_cycles',
    'pause_cycles',
    'drain_cycles',
    'total_cycles',
    'interframe_cycles',
    'peak_label',
    'conflicts_0',
    'conflicts_1',
    'conflicts_2',
    'chain_recodes',
    'chain_pushes',
    'stack_high_water',
    'consumed_groups',
    'valid',
]

VERDICT_KEYS = ['budget', 'used', 'slack', 'verdict']


def stats_record(
    stats: FrameStats,
    verdict: Optional[RealtimeVerdict] = None,
    extra: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    """
    Flatten frame statistics into an ordered record

    Args:
        stats: Statistics of one frame
        verdict: Optional real-time verdict for the frame
        extra: Leading fields such as width/height/pattern

    Returns:
        Dict with a stable key order
    """
    record: Dict[str, Any] = dict(extra or {})
    data = stats.to_dict()
    histogram = data.pop('conflict_histogram')
    for index, count in enumerate(histogram):
        data[f'conflicts_{index}'] = count
    for key in STAT_KEYS:
        record[key] = data[key]
    if verdict is not None:
        record.update({
            'budget': verdict.budget,
            'used': verdict.used,
            'slack': verdict.slack,
            'verdict': verdict.label,
        })
    return record


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def format_record(record: Dict[str, Any], as_json: bool = False) -> str:
    """`key=value` lines, or one JSON object with the same keys"""
    if as_json:
        return json.dumps(record, sort_keys=False)
    return "\n".join(f"{key}={_format_value(value)}" for key, value in record.items())


def summarise_frames(records: Iterable[Dict[str, Any]]) -> pd.DataFrame:
    return pd.DataFrame(list(records))


def get_frame_statistics(frames: pd.DataFrame) -> Dict[str, Any]:
    """
    Aggregate a table of per-frame records

    Returns:
        Statistics dictionary
    """
    if frames.empty:
        return {
            'frames': 0,
            'failures': 0,
            'mean_pause_cycles': 0.0,
            'max_pause_cycles': 0,
            'max_peak_label': 0,
            'chain_recodes': 0,
        }

    failures = int((~frames['ok']).sum()) if 'ok' in frames else 0
    return {
        'frames': int(len(frames)),
        'failures': failures,
        'mean_pause_cycles': round(float(frames['pause_cycles'].mean()), 3),
        'max_pause_cycles': int(frames['pause_cycles'].max()),
        'max_peak_label': int(frames['peak_label'].max()),
        'chain_recodes': int(frames['chain_recodes'].sum()) if 'chain_recodes' in frames else 0,
    }


def log_summary(summary: Dict[str, Any], title: str = "Frames") -> None:
    logger.info(
        f"{title}: {summary['frames']} run, {summary['failures']} failed, "
        f"mean pauses {summary['mean_pause_cycles']:.3f}, "
        f"max peak label {summary['max_peak_label']}, "
        f"chain recodes {summary['chain_recodes']}"
    )


def summary_lines(summary: Dict[str, Any]) -> List[str]:
    return [f"{key}={_format_value(value)}" for key, value in summary.items()]
