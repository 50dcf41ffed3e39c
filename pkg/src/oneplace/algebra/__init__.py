"""Exact coefficient arithmetic, sparse polynomials, resultants and Laurent series."""

from .fields import QQ, AlgebraicNumber, NumberField, Rationals, make_field
from .parsing import parse_minpoly, parse_polynomial
from .polynomial import Polynomial
from .resultant import resultant, squarefree_decomposition
from .series import LaurentSeries, evaluate_polynomial

__all__ = [
    "QQ",
    "AlgebraicNumber",
    "LaurentSeries",
    "NumberField",
    "Polynomial",
    "Rationals",
    "evaluate_polynomial",
    "make_field",
    "parse_minpoly",
    "parse_polynomial",
    "resultant",
    "squarefree_decomposition",
]
