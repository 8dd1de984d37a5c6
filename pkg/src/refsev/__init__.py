"""Refined Severi degrees of h-transverse toric surfaces via a Heisenberg Fock space."""
from .combinatorics import IntMultiset, Partition
from .errors import DomainError, GuardExceeded
from .polygon import HTransversePolygon, make_polygon, parse_polygon, preset
from .ring import LaurentY, RationalLaurentY, quantum_integer
from .severi import (refined_relative, refined_severi, severi_degree, welschinger)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "GuardExceeded",
    "HTransversePolygon",
    "IntMultiset",
    "LaurentY",
    "Partition",
    "RationalLaurentY",
    "make_polygon",
    "parse_polygon",
    "preset",
    "quantum_integer",
    "refined_relative",
    "refined_severi",
    "severi_degree",
    "welschinger",
]
