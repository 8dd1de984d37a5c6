"""Refined Severi degrees from the Fock-space formula, with specialisations."""
from .series import (GenfunReport, GenSeries, genfun_verify, grading_shortcut_check,
                     irreducible_degrees, operator_power_states)
from .theorem import (SeveriQuery, grading_cap, refined_relative, refined_severi,
                      severi_degree, theorem_matrix_element, welschinger)

__all__ = [
    "SeveriQuery",
    "refined_severi",
    "refined_relative",
    "severi_degree",
    "welschinger",
    "grading_cap",
    "theorem_matrix_element",
    "GenSeries",
    "GenfunReport",
    "genfun_verify",
    "grading_shortcut_check",
    "irreducible_degrees",
    "operator_power_states",
]
