"""Exact scalar, polynomial and Laurent-tail arithmetic.

Everything in this package is exact rational arithmetic: scalars are
`fractions.Fraction`, polynomials are sparse maps from exponent tuples to
nonzero Fractions, and truncated Laurent expansions carry an explicit
validity window so a silent truncation can never corrupt an identity check.
"""

from .scalars import (
    double_factorial,
    format_rational,
    half_bracket,
    multinomial,
    parse_rational,
    rising_product,
)
from .poly import SymPoly
from .laurent import LaurentTail

__all__ = [
    "SymPoly",
    "LaurentTail",
    "double_factorial",
    "multinomial",
    "half_bracket",
    "rising_product",
    "format_rational",
    "parse_rational",
]
