"""
Stream Model
4-pixel-per-step transport with framing flags, and the image <-> group-stream adapters
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np
import logging

from ..utils.errors import DimensionError, FramingError

logger = logging.getLogger(__name__)

GROUP_SIZE = 4

Quad = Tuple[int, int, int, int]
ZERO_QUAD: Quad = (0, 0, 0, 0)


@dataclass(frozen=True)
class PixelGroup:
    """Four binary pixels ordered P3 (leftmost) .. P0 plus stream flags"""

    pixels: Quad
    sof: bool = False   # tuser
    eol: bool = False   # tlast
    valid: bool = True  # tvalid


@dataclass(frozen=True)
class LabelGroup:
    """Four labels ordered P3 .. P0 with the framing flags of the source group"""

    labels: Quad
    sof: bool = False
    eol: bool = False
    valid: bool = True

    def with_labels(self, labels: Sequence[int]) -> "LabelGroup":
        return LabelGroup(tuple(labels), self.sof, self.eol, self.valid)


@dataclass(frozen=True, eq=False)
class BinaryImage:
    """Row-major binary image, 0 = background, 1 = foreground"""

    width: int
    height: int
    data: np.ndarray

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise DimensionError(f"Image must be at least 1x1, got {self.width}x{self.height}")
        if self.data.shape != (self.height, self.width):
            raise DimensionError(
                f"Data shape {self.data.shape} does not match {self.width}x{self.height}"
            )
        if self.data.size and not np.isin(self.data, (0, 1)).all():
            raise DimensionError("Binary image contains values other than 0 and 1")

    @classmethod
    def from_array(cls, array) -> "BinaryImage":
        data = (np.asarray(array) != 0).astype(np.uint8)
        if data.ndim != 2:
            raise DimensionError(f"Expected a 2-D array, got {data.ndim} dimensions")
        return cls(width=data.shape[1], height=data.shape[0], data=data)

    @classmethod
    def zeros(cls, width: int, height: int) -> "BinaryImage":
        return cls(width=width, height=height, data=np.zeros((height, width), dtype=np.uint8))

    @property
    def groups_per_row(self) -> int:
        return self.width // GROUP_SIZE

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return (self.width, self.height) == (other.width, other.height) and np.array_equal(self.data, other.data)


@dataclass(frozen=True, eq=False)
class LabelImage:
    """Row-major label image, 0 = background"""

    width: int
    height: int
    data: np.ndarray

    def __post_init__(self):
        if self.data.shape != (self.height, self.width):
            raise DimensionError(
                f"Label data shape {self.data.shape} does not match {self.width}x{self.height}"
            )

    @classmethod
    def from_array(cls, array) -> "LabelImage":
        data = np.asarray(array, dtype=np.uint32)
        return cls(width=data.shape[1], height=data.shape[0], data=data)

    def matches_background(self, img: BinaryImage) -> bool:
        """True when label 0 appears exactly on the background of `img`"""
        return np.array_equal(self.data == 0, img.data == 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelImage):
            return NotImplemented
        return (self.width, self.height) == (other.width, other.height) and np.array_equal(self.data, other.data)


def check_streamable(img: BinaryImage) -> None:
    if img.width < GROUP_SIZE or img.width % GROUP_SIZE:
        raise DimensionError(
            f"Width {img.width} is not a positive multiple of {GROUP_SIZE}"
        )


def iter_groups(img: BinaryImage) -> Iterator[PixelGroup]:
    """Yield the group stream of `img` row by row"""
    check_streamable(img)
    per_row = img.groups_per_row
    quads = img.data.reshape(img.height, per_row, GROUP_SIZE).tolist()
    for row_index, row in enumerate(quads):
        for group_index, quad in enumerate(row):
            yield PixelGroup(
                pixels=tuple(quad),
                sof=row_index == 0 and group_index == 0,
                eol=group_index == per_row - 1,
            )


def pack_frame(img: BinaryImage) -> List[PixelGroup]:
    """Convert an image into its 4-ppc group stream"""
    return list(iter_groups(img))


def _check_length(groups: Sequence, width: int, height: int) -> int:
    if width < GROUP_SIZE or width % GROUP_SIZE or height < 1:
        raise DimensionError(f"Cannot frame {width}x{height} in groups of {GROUP_SIZE}")
    expected = (width // GROUP_SIZE) * height
    valid = [g for g in groups if g.valid]
    if len(valid) != expected:
        raise FramingError(f"Expected {expected} valid groups for {width}x{height}, got {len(valid)}")
    return expected


def unpack_labels(groups: Sequence[LabelGroup], width: int, height: int) -> LabelImage:
    """Reassemble a LABELS stream into an image"""
    _check_length(groups, width, height)
    flat = [label for g in groups if g.valid for label in g.labels]
    return LabelImage(width, height, np.array(flat, dtype=np.uint32).reshape(height, width))


def unpack_pixels(groups: Sequence[PixelGroup], width: int, height: int) -> BinaryImage:
    """Inverse of pack_frame on the pixel payload"""
    _check_length(groups, width, height)
    flat = [p for g in groups if g.valid for p in g.pixels]
    return BinaryImage(width, height, np.array(flat, dtype=np.uint8).reshape(height, width))


def check_framing(groups: Sequence, groups_per_row: int) -> None:
    """Verify that sof marks only the first valid group and eol closes every row"""
    valid = [g for g in groups if g.valid]
    for index, group in enumerate(valid):
        if group.sof != (index == 0):
            raise FramingError(f"sof flag wrong on valid group {index}")
        if group.eol != ((index + 1) % groups_per_row == 0):
            raise FramingError(f"eol flag wrong on valid group {index}")
