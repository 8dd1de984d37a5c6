"""Independent evaluation paths: floor diagrams and Wick pairings."""
from .floor import (FloorDiagram, count_markings, count_markings_bruteforce,
                    enumerate_floor_diagrams, floor_relative, floor_severi)
from .wick import wick_severi, wick_vev

__all__ = [
    "FloorDiagram",
    "enumerate_floor_diagrams",
    "count_markings",
    "count_markings_bruteforce",
    "floor_severi",
    "floor_relative",
    "wick_vev",
    "wick_severi",
]
