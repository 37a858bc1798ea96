"""
Pattern Manager
Registry of frame generators and the single entry point for building test frames
"""

from typing import Any, Dict, List, Optional, Type
import logging

from ..stream.stream_model import BinaryImage
from ..utils.errors import PatternError
from .base_pattern import BasePattern
from .figures import AscendingChain, DoubleMerger, GroupChain
from .stress import Background, CheckerboardPairs, Comb, MaxLabels, RandomPattern, Spiral

logger = logging.getLogger(__name__)

PATTERN_CLASSES: Dict[str, Type[BasePattern]] = {
    'double_merger': DoubleMerger,
    'ascending_chain': AscendingChain,
    'group_chain': GroupChain,
    'comb': Comb,
    'checkerboard_pairs': CheckerboardPairs,
    'spiral': Spiral,
    'random': RandomPattern,
    'max_labels': MaxLabels,
    'background': Background,
}


class PatternManager:
    """Manages the available frame generators"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize pattern manager

        Args:
            config: Optional `patterns` section with per-generator defaults
        """
        self.config = config or {}
        self.patterns: Dict[str, Type[BasePattern]] = dict(PATTERN_CLASSES)

    def create(self, kind: str, **params: Any) -> BasePattern:
        if kind not in self.patterns:
            raise PatternError(
                f"Unknown pattern '{kind}', expected one of {', '.join(self.get_enabled_patterns())}"
            )
        merged = dict(self.config.get(kind, {}))
        merged.update({k: v for k, v in params.items() if v is not None})
        logger.debug(f"Pattern {kind} params: {merged}")
        return self.patterns[kind](merged)

    def generate(
        self,
        kind: str,
        width: Optional[int] = None,
        height: Optional[int] = None,
        **params: Any
    ) -> BinaryImage:
        return self.create(kind, **params).generate(width, height)

    def get_enabled_patterns(self) -> List[str]:
        """Get list of registered pattern names"""
        return list(self.patterns.keys())


def gen_pattern(kind: str, width: Optional[int] = None, height: Optional[int] = None, **params: Any) -> BinaryImage:
    """Build a deterministic frame of the given kind"""
    return PatternManager().generate(kind, width, height, **params)
