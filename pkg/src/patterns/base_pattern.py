"""
Base Pattern Module
Abstract base class for all test-frame generators
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple
import logging

import numpy as np

from ..stream.stream_model import GROUP_SIZE, BinaryImage
from ..utils.errors import PatternError

logger = logging.getLogger(__name__)


class BasePattern(ABC):
    """Abstract base class for frame generators"""

    name = "base"
    default_size: Tuple[int, int] = (64, 64)

    def __init__(self, config: Dict[str, Any] = None):
        """
        Initialize generator

        Args:
            config: Generator parameters
        """
        self.config = config or {}

    @abstractmethod
    def build(self, width: int, height: int) -> np.ndarray:
        """
        Draw the pattern

        Args:
            width: Frame width in pixels (multiple of 4)
            height: Frame height in pixels

        Returns:
            uint8 array of shape (height, width)
        """
        pass

    def min_size(self) -> Tuple[int, int]:
        """Smallest frame the pattern fits in"""
        return (GROUP_SIZE, 1)

    def resolve_size(self, width: Optional[int], height: Optional[int]) -> Tuple[int, int]:
        default_w, default_h = self.default_size
        width = default_w if width is None else int(width)
        height = default_h if height is None else int(height)
        min_w, min_h = self.min_size()

        if width < GROUP_SIZE or width % GROUP_SIZE:
            raise PatternError(f"{self.name}: width {width} is not a positive multiple of {GROUP_SIZE}")
        if width < min_w or height < min_h:
            raise PatternError(
                f"{self.name}: needs at least {min_w}x{min_h}, got {width}x{height}"
            )
        return width, height

    def generate(self, width: Optional[int] = None, height: Optional[int] = None) -> BinaryImage:
        width, height = self.resolve_size(width, height)
        data = self.build(width, height)
        logger.debug(f"Generated {self.name} pattern {width}x{height}")
        return BinaryImage.from_array(data)


class FixedFigure(BasePattern):
    """A fixed drawing placed in the top-left corner of a zero frame"""

    def figure(self) -> np.ndarray:
        raise NotImplementedError

    def min_size(self) -> Tuple[int, int]:
        fig = self.figure()
        return fig.shape[1], fig.shape[0]

    @property
    def default_size(self) -> Tuple[int, int]:
        return self.min_size()

    def build(self, width: int, height: int) -> np.ndarray:
        fig = self.figure()
        data = np.zeros((height, width), dtype=np.uint8)
        data[:fig.shape[0], :fig.shape[1]] = fig
        return data
