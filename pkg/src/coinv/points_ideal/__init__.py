"""Vanishing and top-degree ideals of finite point sets."""

from .quadratic import QuadraticNumber
from .tideal import (
    ExactPolynomial,
    SignedPermutation,
    compute_t_ideal,
    dn_elements,
    indicator,
    load_point_file,
    load_point_set,
    orbit,
    staircase,
    top_degree,
)

__all__ = [
    "ExactPolynomial",
    "QuadraticNumber",
    "SignedPermutation",
    "compute_t_ideal",
    "dn_elements",
    "indicator",
    "load_point_file",
    "load_point_set",
    "orbit",
    "staircase",
    "top_degree",
]
