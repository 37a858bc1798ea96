"""
Reference Labelling
Two-pass union-find labelling and the relabeling-equivalence check used as ground truth
"""

from __future__ import annotations

from typing import List

import numpy as np

from ..stream.stream_model import BinaryImage, LabelImage
from ..utils.errors import DimensionError


class UnionFind:
    """
    Disjoint sets with path compression

    The smaller root always wins a union, so roots are the first-created
    element of their set.
    """

    def __init__(self, n: int = 0):
        self.parent: List[int] = list(range(n))

    def __len__(self) -> int:
        return len(self.parent)

    def make(self) -> int:
        new_id = len(self.parent)
        self.parent.append(new_id)
        return new_id

    def find(self, x: int) -> int:
        parent = self.parent
        while x != parent[x]:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> int:
        i = self.find(x)
        j = self.find(y)
        if i == j:
            return i
        if i < j:
            self.parent[j] = i
            return i
        self.parent[i] = j
        return j

    def linked(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)


# previous-row offsets scanned for an 8-connected raster pass
_UPPER = (-1, 0, 1)


def label_reference(img: BinaryImage) -> LabelImage:
    """
    Classic two-pass labelling with 8-connectivity.

    Labels are numbered 1..k in first-touch raster order.
    """
    height, width = img.height, img.width
    pixels = img.data.tolist()
    provisional = [[0] * width for _ in range(height)]
    sets = UnionFind(1)

    for r in range(height):
        row = pixels[r]
        out = provisional[r]
        above = provisional[r - 1] if r else None
        for c in range(width):
            if not row[c]:
                continue
            neighbours = []
            if c and out[c - 1]:
                neighbours.append(out[c - 1])
            if above is not None:
                for dc in _UPPER:
                    cc = c + dc
                    if 0 <= cc < width and above[cc]:
                        neighbours.append(above[cc])
            if not neighbours:
                out[c] = sets.make()
                continue
            first = neighbours[0]
            for other in neighbours[1:]:
                sets.union(first, other)
            out[c] = min(neighbours)

    dense = {0: 0}
    data = np.zeros((height, width), dtype=np.uint32)
    for r in range(height):
        out = provisional[r]
        target = data[r]
        for c in range(width):
            label = out[c]
            if not label:
                continue
            root = sets.find(label)
            if root not in dense:
                dense[root] = len(dense)
            target[c] = dense[root]
    return LabelImage(width, height, data)


def equivalent_up_to_relabeling(a: LabelImage, b: LabelImage) -> bool:
    """True iff a bijection between nonzero labels maps `a` onto `b` pointwise"""
    if (a.width, a.height) != (b.width, b.height):
        raise DimensionError(
            f"Cannot compare {a.width}x{a.height} with {b.width}x{b.height}"
        )
    left = np.asarray(a.data, dtype=np.int64).ravel()
    right = np.asarray(b.data, dtype=np.int64).ravel()
    if not np.array_equal(left == 0, right == 0):
        return False

    mask = left != 0
    pairs = np.unique(np.stack([left[mask], right[mask]], axis=1), axis=0)
    if pairs.size == 0:
        return True
    # a function in both directions means a bijection
    return len(np.unique(pairs[:, 0])) == len(pairs) and len(np.unique(pairs[:, 1])) == len(pairs)
