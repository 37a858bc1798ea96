"""
Stress Patterns
Frame-filling generators for throughput, label budget and fuzzing
"""

import math
from typing import Tuple

import numpy as np

from ..stream.stream_model import GROUP_SIZE
from ..utils.errors import PatternError
from .base_pattern import BasePattern


class Background(BasePattern):
    name = "background"

    def build(self, width: int, height: int) -> np.ndarray:
        return np.zeros((height, width), dtype=np.uint8)


class Comb(BasePattern):
    """Teeth on every even column joined by a full bottom row"""

    name = "comb"

    def min_size(self) -> Tuple[int, int]:
        return (GROUP_SIZE, 2)

    def build(self, width: int, height: int) -> np.ndarray:
        data = np.zeros((height, width), dtype=np.uint8)
        data[:height - 1, ::2] = 1
        data[height - 1, :] = 1
        return data


class CheckerboardPairs(BasePattern):
    """
    Repeating three-row motif: dots on even columns, a full row, an empty row.
    Every full row merges all the dots above it.
    """

    name = "checkerboard_pairs"

    def build(self, width: int, height: int) -> np.ndarray:
        data = np.zeros((height, width), dtype=np.uint8)
        data[0::3, ::2] = 1
        data[1::3, :] = 1
        return data


class Spiral(BasePattern):
    """Single square spiral path with a one-pixel gap between turns"""

    name = "spiral"

    # right, down, left, up
    DIRECTIONS = ((0, 1), (1, 0), (0, -1), (-1, 0))

    def build(self, width: int, height: int) -> np.ndarray:
        data = np.zeros((height, width), dtype=np.uint8)
        row, col = 0, -1
        horizontal, vertical = width, height - 1
        turn = 0
        while True:
            steps = horizontal if turn % 2 == 0 else vertical
            if steps <= 0:
                break
            d_row, d_col = self.DIRECTIONS[turn % 4]
            for _ in range(steps):
                row += d_row
                col += d_col
                data[row, col] = 1
            if turn % 2 == 0:
                horizontal -= 1 if turn == 0 else 2
            else:
                vertical -= 2
            turn += 1
        return data


class RandomPattern(BasePattern):
    """Independent pixels with foreground probability `density`"""

    name = "random"

    def __init__(self, config=None):
        super().__init__(config)
        self.density = float(self.config.get('density', 0.5))
        self.seed = int(self.config.get('seed', 7))
        if not 0.0 <= self.density <= 1.0:
            raise PatternError(f"random: density must be in [0, 1], got {self.density}")

    def build(self, width: int, height: int) -> np.ndarray:
        rng = np.random.default_rng(self.seed)
        return (rng.random((height, width)) < self.density).astype(np.uint8)


class MaxLabels(BasePattern):
    """`count` isolated pixels on even rows and columns, one label each"""

    name = "max_labels"

    def __init__(self, config=None):
        super().__init__(config)
        self.count = int(self.config.get('count', 1024))
        if self.count < 0:
            raise PatternError(f"max_labels: count must be >= 0, got {self.count}")

    @property
    def default_size(self) -> Tuple[int, int]:
        width = 64
        return width, self._height_for(width)

    def _height_for(self, width: int) -> int:
        per_row = (width + 1) // 2
        rows = max(1, math.ceil(self.count / per_row))
        return 2 * rows - 1

    def min_size(self) -> Tuple[int, int]:
        return (GROUP_SIZE, 1)

    def resolve_size(self, width, height):
        if height is None and width is not None:
            height = self._height_for(int(width))
        width, height = super().resolve_size(width, height)
        if height < self._height_for(width):
            raise PatternError(
                f"max_labels: {self.count} pixels need height {self._height_for(width)} at width {width}"
            )
        return width, height

    def build(self, width: int, height: int) -> np.ndarray:
        data = np.zeros((height, width), dtype=np.uint8)
        rows = np.arange(0, height, 2)
        cols = np.arange(0, width, 2)
        coords = [(r, c) for r in rows for c in cols][:self.count]
        if coords:
            r, c = zip(*coords)
            data[list(r), list(c)] = 1
        return data
