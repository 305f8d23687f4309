"""
Family script
"""
from enum import Enum


class Family(str, Enum):
    """
    Conditional variance family based on Enum
    """
    ARCH: str = 'ARCH'
    GARCH: str = 'GARCH'
    EGARCH: str = 'EGARCH'
