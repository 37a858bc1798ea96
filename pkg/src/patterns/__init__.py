"""
Pattern Generation Module
"""

from .base_pattern import BasePattern, FixedFigure
from .figures import AscendingChain, DoubleMerger, GroupChain
from .stress import Background, CheckerboardPairs, Comb, MaxLabels, RandomPattern, Spiral
from .pattern_manager import PATTERN_CLASSES, PatternManager, gen_pattern

__all__ = [
    'BasePattern',
    'FixedFigure',
    'AscendingChain',
    'DoubleMerger',
    'GroupChain',
    'Background',
    'CheckerboardPairs',
    'Comb',
    'MaxLabels',
    'RandomPattern',
    'Spiral',
    'PATTERN_CLASSES',
    'PatternManager',
    'gen_pattern'
]
