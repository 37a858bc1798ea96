"""
Engine Package
Frame pipeline, cycle accounting and engine configuration
"""

from .config import UHD_HEIGHT, UHD_WIDTH, EngineConfig
from .pipeline import (
    FrameResult,
    FrameStats,
    FrameTrace,
    QuadLabelEngine,
    RealtimeVerdict,
    process_frame,
    realtime_check,
    second_pass,
)

__all__ = [
    'UHD_HEIGHT',
    'UHD_WIDTH',
    'EngineConfig',
    'FrameResult',
    'FrameStats',
    'FrameTrace',
    'QuadLabelEngine',
    'RealtimeVerdict',
    'process_frame',
    'realtime_check',
    'second_pass',
]
