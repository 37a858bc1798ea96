"""
Memory Package
Chain stack, equivalence table banks and the row delay line
"""

from .chain_stack import DRAIN_ORDERS, ChainStack
from .delay_line import DelayLine
from .equivalence_tables import BankPair, BankPhase, EquivalenceTable, init_identity

__all__ = [
    'DRAIN_ORDERS',
    'ChainStack',
    'DelayLine',
    'BankPair',
    'BankPhase',
    'EquivalenceTable',
    'init_identity',
]
