"""
QuadLabel
Streaming connected component labelling at four pixels per clock
"""

__version__ = "1.0.0"
