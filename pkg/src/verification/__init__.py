"""
Verification Package
Reference labelling used as the correctness oracle
"""

from .oracle import UnionFind, equivalent_up_to_relabeling, label_reference

__all__ = ['UnionFind', 'equivalent_up_to_relabeling', 'label_reference']
