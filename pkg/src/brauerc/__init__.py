"""Brauer diagram monoids of type A and their symmetric (type C) submonoids."""

from .diagrams import (
    AlgebraElement,
    Diagram,
    Monomial,
    algebra_multiply,
    enumerate_diagrams,
    evaluate_word,
    height,
    is_symmetric,
    multiply,
    op,
    sigma,
)
from .laurent import LaurentPoly

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "Diagram",
    "LaurentPoly",
    "Monomial",
    "algebra_multiply",
    "enumerate_diagrams",
    "evaluate_word",
    "height",
    "is_symmetric",
    "multiply",
    "op",
    "sigma",
]
