"""Exact brute-force constructions used as ground truth."""

from .characters import character, class_table, group_order, irreducible_labels, wreath_character
from .cyclotomic import Cyclotomic
from .quotient import (
    GradedQuotient,
    NonIntegralMultiplicity,
    RefinedComponent,
    build_quotient,
    decompose,
    group_action_trace,
    refined_component,
)

__all__ = [
    "Cyclotomic",
    "GradedQuotient",
    "NonIntegralMultiplicity",
    "RefinedComponent",
    "build_quotient",
    "character",
    "class_table",
    "decompose",
    "group_action_trace",
    "group_order",
    "irreducible_labels",
    "refined_component",
    "wreath_character",
]
