"""Exact combinatorial scalars: double factorials, multinomials, half-integer
products, and the canonical string form of a rational number.

The scalar field everywhere is `fractions.Fraction` (arbitrary precision,
always reduced, positive denominator), used directly rather than wrapped.
"""

from __future__ import annotations

import math
from fractions import Fraction


def double_factorial(m: int) -> int:
    """m!! with the conventions (-2)!! = (-1)!! = 0!! = 1.

    Arguments below -2 are rejected: no convention covers them.

    >>> double_factorial(5)
    15
    >>> double_factorial(-1)
    1
    """
    if m < -2:
        raise ValueError(f"double factorial undefined for {m} < -2")
    result = 1
    while m >= 1:
        result *= m
        m -= 2
    return result


def multinomial(top: int, parts) -> int:
    """The multinomial coefficient (top; parts).

    Zero when the parts do not sum to ``top`` (the standard vanishing
    convention, relied on by the tree-sum formulas).  Negative parts are an
    error.
    """
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative multinomial part in {parts}")
    if top < 0 or sum(parts) != top:
        return 0
    result = math.factorial(top)
    for p in parts:
        result //= math.factorial(p)
    return result


def half_bracket(m: int, k: int) -> Fraction:
    """Product of the k+1 consecutive half-integers starting at m + 1/2.

    k = -1 gives the empty product 1.

    >>> half_bracket(0, 1)
    Fraction(3, 4)
    """
    if k < -1:
        raise ValueError(f"half_bracket needs k >= -1, got {k}")
    result = Fraction(1)
    for i in range(k + 1):
        result *= Fraction(2 * (m + i) + 1, 2)
    return result


def rising_product(start: int, count: int) -> int:
    """start * (start+1) * ... * (start+count-1); the empty product is 1.

    Stays well defined where a ratio of factorials would hit a negative
    argument.
    """
    if count < 0:
        raise ValueError(f"rising_product needs count >= 0, got {count}")
    result = 1
    for i in range(count):
        result *= start + i
    return result


def format_rational(value: Fraction) -> str:
    """Canonical string form: "num/den" in lowest terms, "num" when den = 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; rejects anything non-canonical."""
    text = text.strip()
    if "/" in text:
        num_text, den_text = text.split("/", 1)
        num, den = int(num_text), int(den_text)
        if den <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        value = Fraction(num, den)
        if value.denominator != den:
            raise ValueError(f"{text!r} is not in lowest terms")
        return value
    return Fraction(int(text))
