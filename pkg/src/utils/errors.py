"""
Error Types
Exception hierarchy shared by the labelling engine, I/O and CLI
"""

from typing import Any, Optional


class QuadLabelError(Exception):
    """Base class for every error raised by quadlabel"""


class DimensionError(QuadLabelError):
    """Image dimensions the 4-pixel transport cannot carry"""


class FramingError(QuadLabelError):
    """Group stream does not match the declared frame geometry"""


class ImageFormatError(QuadLabelError):
    """Malformed or unsupported PBM/PGM content"""


class PatternError(QuadLabelError):
    """Unknown pattern or invalid pattern parameters"""


class ConfigError(QuadLabelError):
    """Invalid engine configuration"""


class FrameError(QuadLabelError):
    """
    A frame aborted by the engine.

    The partial statistics collected up to the abort are kept on the
    exception so callers can still report cycles for an invalid frame.
    """

    def __init__(self, message: str, stats: Optional[Any] = None, row: int = -1, group: int = -1):
        super().__init__(message)
        self.stats = stats
        self.row = row
        self.group = group


class LabelExhaustionError(FrameError):
    """The label counter would exceed the configured bit width"""

    def __init__(self, message: str, peak_label: int = 0, **kwargs):
        super().__init__(message, **kwargs)
        self.peak_label = peak_label


class StackOverflowError(FrameError):
    """More chain mergers in one row than the chain stack holds"""


class InterFrameBudgetError(FrameError):
    """Standby bank not ready when the next frame starts"""


class ConflictArityError(FrameError):
    """A pixel or group produced more conflicts than the hardware resolves"""


class TableConsistencyError(FrameError):
    """Equivalence table left a merged-away label where a live one is required"""


__all__ = [
    'QuadLabelError',
    'DimensionError',
    'FramingError',
    'ImageFormatError',
    'PatternError',
    'ConfigError',
    'FrameError',
    'LabelExhaustionError',
    'StackOverflowError',
    'InterFrameBudgetError',
    'ConflictArityError',
    'TableConsistencyError',
]
