"""
Stream Transport Module
"""

from .stream_model import (
    GROUP_SIZE,
    BinaryImage,
    LabelGroup,
    LabelImage,
    PixelGroup,
    check_framing,
    iter_groups,
    pack_frame,
    unpack_labels,
    unpack_pixels,
)

__all__ = [
    'GROUP_SIZE',
    'BinaryImage',
    'LabelGroup',
    'LabelImage',
    'PixelGroup',
    'check_framing',
    'iter_groups',
    'pack_frame',
    'unpack_labels',
    'unpack_pixels',
]
