"""Truncated Laurent expansions in one distinguished variable.

A :class:`LaurentTail` maps integer exponents of the distinguished variable
(call it y) to polynomial coefficients in the remaining variables.  The
formal objects behind it (e.g. 1/(y + x) expanded in descending powers of y)
have infinitely many negative-exponent terms, so every tail records a
``floor``: coefficients at exponents >= floor are exact, anything below is
unknown.  ``floor = None`` means the tail is exact everywhere (a finite
Laurent polynomial).

Arithmetic propagates floors soundly and reading a coefficient below the
floor raises :class:`WindowError` instead of silently returning a truncated
value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional

from ..errors import WindowError
from .poly import SymPoly


class LaurentTail:
    """Finite window of a Laurent series in y with SymPoly coefficients."""

    __slots__ = ("nx", "coeffs", "floor")

    def __init__(self, nx: int, coeffs: Dict[int, SymPoly] | None = None,
                 floor: Optional[int] = None):
        self.nx = nx
        self.coeffs = {}
        if coeffs:
            for exp, poly in coeffs.items():
                if poly.n != nx:
                    raise ValueError("coefficient arity mismatch")
                if not poly.is_zero() and (floor is None or exp >= floor):
                    self.coeffs[exp] = poly
        self.floor = floor

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nx: int) -> "LaurentTail":
        return cls(nx, {}, None)

    @classmethod
    def from_poly(cls, poly: SymPoly, y_var: int = 0) -> "LaurentTail":
        """Split a polynomial in (y, x...) into an exact tail over the x's."""
        coeffs: Dict[int, SymPoly] = {}
        nx = poly.n - 1
        for exps, coeff in poly.terms.items():
            key = exps[y_var]
            rest = exps[:y_var] + exps[y_var + 1:]
            bucket = coeffs.setdefault(key, SymPoly.zero(nx))
            coeffs[key] = bucket + SymPoly.monomial(nx, rest, coeff)
        return cls(nx, coeffs, None)

    @classmethod
    def y_power(cls, nx: int, exp: int, coeff=1) -> "LaurentTail":
        return cls(nx, {exp: SymPoly.const(nx, coeff)}, None)

    @classmethod
    def inverse_linear(cls, shift: SymPoly, floor: int) -> "LaurentTail":
        """Expansion of 1/(y + shift) in descending powers of y, to ``floor``.

        ``shift`` is a polynomial in the x-variables only:
        1/(y + s) = sum_{k>=0} (-1)^k s^k y^(-1-k).
        """
        coeffs: Dict[int, SymPoly] = {}
        power = SymPoly.const(shift.n, 1)
        k = 0
        while -1 - k >= floor:
            coeffs[-1 - k] = power if k % 2 == 0 else -power
            k += 1
            if -1 - k >= floor:
                power = power * shift
        return cls(shift.n, coeffs, floor)

    # -- window bookkeeping --------------------------------------------------

    @property
    def bounds(self):
        """(min exact exponent or None, max stored exponent or None)."""
        top = max(self.coeffs) if self.coeffs else None
        return (self.floor, top)

    def _known_top(self) -> Optional[int]:
        return max(self.coeffs) if self.coeffs else None

    def _full_top(self) -> Optional[int]:
        """Largest exponent the full series could touch; None if it is zero."""
        tops = []
        if self.coeffs:
            tops.append(max(self.coeffs))
        if self.floor is not None:
            tops.append(self.floor - 1)
        return max(tops) if tops else None

    def coefficient(self, exp: int) -> SymPoly:
        if self.floor is not None and exp < self.floor:
            raise WindowError(
                f"coefficient at y^{exp} requested but the window only "
                f"guarantees exponents >= {self.floor}; widen the expansion"
            )
        return self.coeffs.get(exp, SymPoly.zero(self.nx))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "LaurentTail") -> None:
        if self.nx != other.nx:
            raise ValueError("coefficient arity mismatch")

    def __add__(self, other: "LaurentTail") -> "LaurentTail":
        self._check(other)
        if self.floor is None:
            floor = other.floor
        elif other.floor is None:
            floor = self.floor
        else:
            floor = max(self.floor, other.floor)
        out: Dict[int, SymPoly] = dict(self.coeffs)
        for exp, poly in other.coeffs.items():
            acc = out.get(exp, SymPoly.zero(self.nx)) + poly
            if acc.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = acc
        return LaurentTail(self.nx, out, floor)

    def __neg__(self) -> "LaurentTail":
        return LaurentTail(self.nx, {e: -p for e, p in self.coeffs.items()}, self.floor)

    def __sub__(self, other: "LaurentTail") -> "LaurentTail":
        return self + (-other)

    def __mul__(self, other) -> "LaurentTail":
        if isinstance(other, SymPoly):
            if other.n != self.nx:
                raise ValueError("coefficient arity mismatch")
            return LaurentTail(
                self.nx,
                {e: p * other for e, p in self.coeffs.items()},
                self.floor,
            )
        if not isinstance(other, LaurentTail):
            coeff = Fraction(other)
            return LaurentTail(
                self.nx,
                {e: p * coeff for e, p in self.coeffs.items()},
                self.floor,
            )
        self._check(other)

        # Sound floor for the product: an unknown part of one operand can
        # pollute exponents up to (its floor - 1) + (full top of the other).
        floor = None
        candidates = []
        if self.floor is not None:
            top = other._full_top()
            if top is not None:
                candidates.append(self.floor + top)
        if other.floor is not None:
            top = self._full_top()
            if top is not None:
                candidates.append(other.floor + top)
        if candidates:
            floor = max(candidates)

        out: Dict[int, SymPoly] = {}
        for ea, pa in self.coeffs.items():
            for eb, pb in other.coeffs.items():
                exp = ea + eb
                if floor is not None and exp < floor:
                    continue
                prod = pa * pb
                if prod.is_zero():
                    continue
                acc = out.get(exp)
                acc = prod if acc is None else acc + prod
                if acc.is_zero():
                    out.pop(exp, None)
                else:
                    out[exp] = acc
        return LaurentTail(self.nx, out, floor)

    __rmul__ = __mul__

    def derivative_y(self) -> "LaurentTail":
        """Formal d/dy, applied termwise."""
        out: Dict[int, SymPoly] = {}
        for exp, poly in self.coeffs.items():
            if exp != 0:
                out[exp - 1] = poly * exp
        floor = None if self.floor is None else self.floor - 1
        return LaurentTail(self.nx, out, floor)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentTail):
            return NotImplemented
        return (
            self.nx == other.nx
            and self.floor == other.floor
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __repr__(self) -> str:
        parts = [
            f"y^{exp}*({poly.render()})"
            for exp, poly in sorted(self.coeffs.items(), reverse=True)
        ]
        body = " + ".join(parts) if parts else "0"
        window = "exact" if self.floor is None else f"floor={self.floor}"
        return f"LaurentTail({body}; {window})"
