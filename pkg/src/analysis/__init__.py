"""
Analysis Module
Frame reports and the fuzz corpus runner
"""

from .frame_report import (
    format_record,
    get_frame_statistics,
    log_summary,
    stats_record,
    summarise_frames,
    summary_lines,
)
from .fuzz_runner import FuzzCase, FuzzReport, make_case, make_cases, run_case, run_fuzz

__all__ = [
    'format_record',
    'get_frame_statistics',
    'log_summary',
    'stats_record',
    'summarise_frames',
    'summary_lines',
    'FuzzCase',
    'FuzzReport',
    'make_case',
    'make_cases',
    'run_case',
    'run_fuzz',
]
