"""Tilings of n x n squares by T-tetrominoes with the fewest monominoes"""

from tetrotile.core.config import settings

__version__ = settings.VERSION
