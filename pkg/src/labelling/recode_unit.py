"""
Recode Unit
Bypass recoding of in-flight labels with mergers not yet committed to the table
"""

from typing import Iterable, Sequence, Tuple

from ..stream.stream_model import LabelGroup


def recode_label(label: int, pending: Sequence) -> int:
    """Substitute `label` if it is the larger label of a pending merger"""
    for merger in pending:
        if label == merger.larger:
            return merger.smaller
    return label


def recode_labels(labels: Iterable[int], pending: Sequence) -> Tuple[int, ...]:
    if not pending:
        return tuple(labels)
    return tuple(recode_label(label, pending) for label in labels)


def recode_with_pending(group: LabelGroup, pending: Sequence) -> LabelGroup:
    """
    Recode a label group with 0..2 normalised mergers.

    Both mergers apply in a single substitution step; after merger
    analysis no merger's smaller label is another merger's larger label.
    """
    if not pending:
        return group
    return group.with_labels(recode_labels(group.labels, pending))
