"""
Conflict Figures
Small frames that provoke the two-conflict group and the merger-chain cases
"""

import numpy as np

from ..utils.errors import PatternError
from .base_pattern import FixedFigure


def _draw(width: int, height: int, pixels) -> np.ndarray:
    data = np.zeros((height, width), dtype=np.uint8)
    for row, col in pixels:
        data[row, col] = 1
    return data


class DoubleMerger(FixedFigure):
    """
    Group 1 of the last row sees labels 1, 4 and 7 at once.

    Provisional labels of that group are (1, 0, 4, 4) with raw mergers
    4->1 and 7->4, rewritten to 4->1 and 7->1 with a single pause.
    Isolated pixels keep labels 2, 3, 5 and 6 in use.
    """

    name = "double_merger"

    def figure(self) -> np.ndarray:
        return _draw(12, 5, [
            (0, 1), (0, 3), (0, 9),
            (1, 1),
            (2, 1), (2, 5), (2, 9), (2, 11),
            (3, 1), (3, 5), (3, 7),
            (4, 1), (4, 2), (4, 3), (4, 4), (4, 6), (4, 7),
        ])


class AscendingChain(FixedFigure):
    """
    Vertical bars labelled in decreasing order from left to right, joined by
    a bridge row, so every bridge conflict continues the previous one.

    With n=4 the bars carry labels 9, 7, 5, 4, 2 and the bridge produces
    9->7, 7->5, 5->4, 4->2.
    """

    name = "ascending_chain"

    # isolated pixels that skip labels 1, 3, 6 and 8 for n=4
    FILLERS = ((0, 0), (1, 2), (3, 0), (4, 2))

    def __init__(self, config=None):
        super().__init__(config)
        self.n = int(self.config.get('n', 4))
        if self.n < 1:
            raise PatternError(f"ascending_chain: n must be >= 1, got {self.n}")

    def figure(self) -> np.ndarray:
        n = self.n
        width, height = 4 * (n + 2), n + 3
        data = np.zeros((height, width), dtype=np.uint8)
        for i in range(n + 1):
            data[n - i:n + 2, 4 * (i + 1)] = 1
        data[n + 2, 4:4 * (n + 1) + 1] = 1
        if n == 4:
            for row, col in self.FILLERS:
                data[row, col] = 1
        return data


class GroupChain(FixedFigure):
    """
    One group sees three labels whose two conflicts form a chain:
    raw mergers 5->3 and 3->2 become 5->2 and 3->2, both chain-flagged.
    """

    name = "group_chain"

    def figure(self) -> np.ndarray:
        return _draw(12, 4, [
            (0, 0), (0, 7),
            (1, 3), (1, 7),
            (2, 0), (2, 3), (2, 5), (2, 7),
            (3, 4), (3, 5), (3, 6), (3, 7),
        ])
