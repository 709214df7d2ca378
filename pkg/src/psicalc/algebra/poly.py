"""Sparse multivariate polynomials over exact rationals.

A polynomial in n variables is a map from exponent tuples (length n, one
nonnegative slot per variable) to nonzero `Fraction` coefficients.  The zero
polynomial is the empty map.  The canonical term order is descending
lexicographic on exponent tuples; it drives serialization, iteration and the
leading-term elimination used by exact division.

    x1^2*x2 + 3   in 2 variables   ->   {(2, 1): 1, (0, 0): 3}

All operations are pure and exact; instances are treated as immutable after
construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from ..errors import NotDivisibleError

Exponents = Tuple[int, ...]

_ZERO = Fraction(0)


class SymPoly:
    """A sparse polynomial with a fixed ambient variable count."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Exponents, Fraction] | None = None):
        if n < 0:
            raise ValueError("variable count must be >= 0")
        self.n = n
        self.terms: Dict[Exponents, Fraction] = terms if terms is not None else {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "SymPoly":
        return cls(n, {})

    @classmethod
    def const(cls, n: int, value) -> "SymPoly":
        coeff = Fraction(value)
        if coeff == 0:
            return cls(n, {})
        return cls(n, {(0,) * n: coeff})

    @classmethod
    def variable(cls, n: int, index: int) -> "SymPoly":
        if not 0 <= index < n:
            raise IndexError(f"variable {index} out of range for {n} variables")
        exps = [0] * n
        exps[index] = 1
        return cls(n, {tuple(exps): Fraction(1)})

    @classmethod
    def var_sum(cls, n: int, indices: Iterable[int] | None = None) -> "SymPoly":
        """Sum of the given variables (all of them by default)."""
        chosen = range(n) if indices is None else indices
        terms: Dict[Exponents, Fraction] = {}
        for i in chosen:
            if not 0 <= i < n:
                raise IndexError(f"variable {i} out of range for {n} variables")
            exps = [0] * n
            exps[i] = 1
            terms[tuple(exps)] = Fraction(1)
        return cls(n, terms)

    @classmethod
    def cube_sum(cls, n: int) -> "SymPoly":
        """Sum of the cubes of all variables."""
        terms: Dict[Exponents, Fraction] = {}
        for i in range(n):
            exps = [0] * n
            exps[i] = 3
            terms[tuple(exps)] = Fraction(1)
        return cls(n, terms)

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], coeff) -> "SymPoly":
        coeff = Fraction(coeff)
        exps = tuple(exps)
        if len(exps) != n or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {exps} for {n} variables")
        if coeff == 0:
            return cls(n, {})
        return cls(n, {exps: coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if inhomogeneous.

        The zero polynomial counts as homogeneous of every degree (None is
        not returned for it; it reports -1).
        """
        if not self.terms:
            return -1
        degrees = {sum(e) for e in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def homogeneous_component(self, degree: int) -> "SymPoly":
        return SymPoly(
            self.n, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), _ZERO)

    def terms_sorted(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in canonical (descending lexicographic) order."""
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    # -- ring operations ---------------------------------------------------

    def _check_same_arity(self, other: "SymPoly") -> None:
        if self.n != other.n:
            raise ValueError(
                f"variable-count mismatch: {self.n} vs {other.n}"
            )

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check_same_arity(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps, _ZERO) + coeff
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return SymPoly(self.n, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __mul__(self, other) -> "SymPoly":
        if isinstance(other, SymPoly):
            self._check_same_arity(other)
            out: Dict[Exponents, Fraction] = {}
            # iterate the smaller factor outside for fewer tuple rebuilds
            a, b = (self.terms, other.terms)
            if len(a) > len(b):
                a, b = b, a
            for ea, ca in a.items():
                for eb, cb in b.items():
                    exps = tuple(x + y for x, y in zip(ea, eb))
                    acc = out.get(exps, _ZERO) + ca * cb
                    if acc:
                        out[exps] = acc
                    else:
                        out.pop(exps, None)
            return SymPoly(self.n, out)
        coeff = Fraction(other)
        if coeff == 0:
            return SymPoly.zero(self.n)
        return SymPoly(self.n, {e: c * coeff for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "SymPoly":
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, exponent: int) -> "SymPoly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = SymPoly.const(self.n, 1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # mutable payload; never used as a dict key

    # -- structural operations ---------------------------------------------

    def derivative(self, var: int) -> "SymPoly":
        out: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            k = exps[var]
            if k == 0:
                continue
            new = list(exps)
            new[var] = k - 1
            key = tuple(new)
            acc = out.get(key, _ZERO) + coeff * k
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return SymPoly(self.n, out)

    def substitute_poly(self, var: int, replacement: "SymPoly") -> "SymPoly":
        """Substitute a polynomial (free of ``var``) for one variable.

        The result lives in the same ambient variables with exponent 0 at
        ``var``.
        """
        self._check_same_arity(replacement)
        if any(e[var] for e in replacement.terms):
            raise ValueError("replacement polynomial must not involve the variable")
        powers: Dict[int, SymPoly] = {0: SymPoly.const(self.n, 1)}
        out = SymPoly.zero(self.n)
        for exps, coeff in self.terms.items():
            k = exps[var]
            if k not in powers:
                powers[k] = replacement ** k
            rest = list(exps)
            rest[var] = 0
            out = out + powers[k] * SymPoly.monomial(self.n, rest, coeff)
        return out

    def substitute_signed_vars(self, var: int, signed: Iterable[Tuple[int, int]]) -> "SymPoly":
        """Substitute a signed sum of other variables, e.g. x1 <- -(x2+x3).

        ``signed`` is an iterable of (sign, variable) pairs.
        """
        repl = SymPoly.zero(self.n)
        for sign, idx in signed:
            if idx == var:
                raise ValueError("substitution must remove the variable")
            repl = repl + SymPoly.variable(self.n, idx) * sign
        return self.substitute_poly(var, repl)

    def set_var_zero(self, var: int) -> "SymPoly":
        return SymPoly(
            self.n, {e: c for e, c in self.terms.items() if e[var] == 0}
        )

    def negate_var(self, var: int) -> "SymPoly":
        """Substitute x_var <- -x_var."""
        return SymPoly(
            self.n,
            {e: (-c if e[var] % 2 else c) for e, c in self.terms.items()},
        )

    def drop_var(self, var: int) -> "SymPoly":
        """Remove a variable that appears with exponent 0 everywhere."""
        out: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            if exps[var] != 0:
                raise ValueError("variable still present; cannot drop")
            out[exps[:var] + exps[var + 1:]] = coeff
        return SymPoly(self.n - 1, out)

    def embed(self, ambient_n: int, positions: Sequence[int]) -> "SymPoly":
        """Map variable i to ambient slot positions[i]; other slots get 0."""
        if len(positions) != self.n:
            raise ValueError("positions must name every variable once")
        out: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            new = [0] * ambient_n
            for i, e in enumerate(exps):
                new[positions[i]] = e
            out[tuple(new)] = coeff
        return SymPoly(ambient_n, out)

    def permute(self, perm: Sequence[int]) -> "SymPoly":
        """Relabel variables: old slot i becomes perm[i]."""
        return self.embed(self.n, perm)

    def is_symmetric(self) -> bool:
        """Invariance under all adjacent transpositions (hence all of S_n)."""
        for i in range(self.n - 1):
            perm = list(range(self.n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False
        return True

    def evaluate(self, values: Sequence) -> Fraction:
        if len(values) != self.n:
            raise ValueError("need one value per variable")
        values = [Fraction(v) for v in values]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    # -- exact division ----------------------------------------------------

    def div_exact(self, den: "SymPoly") -> "SymPoly":
        """Return q with q * den == self, exactly.

        Leading-term elimination in the canonical order; a nonzero residual
        raises :class:`NotDivisibleError` carrying that residual.
        """
        self._check_same_arity(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        den_lead = max(den.terms)
        den_coeff = den.terms[den_lead]
        rem = dict(self.terms)
        quot: Dict[Exponents, Fraction] = {}
        while rem:
            rem_lead = max(rem)
            diff = tuple(r - d for r, d in zip(rem_lead, den_lead))
            if any(d < 0 for d in diff):
                raise NotDivisibleError(
                    "polynomial division left a remainder",
                    remainder=SymPoly(self.n, rem),
                )
            factor = rem[rem_lead] / den_coeff
            quot[diff] = factor
            for exps, coeff in den.terms.items():
                key = tuple(x + y for x, y in zip(exps, diff))
                acc = rem.get(key, _ZERO) - factor * coeff
                if acc:
                    rem[key] = acc
                else:
                    rem.pop(key, None)
        return SymPoly(self.n, quot)

    # -- serialization -----------------------------------------------------

    def to_entries(self) -> List[dict]:
        """Canonical list-of-terms form shared by the CLI and the service."""
        from .scalars import format_rational

        return [
            {"exponents": list(exps), "coeff": format_rational(coeff)}
            for exps, coeff in self.terms_sorted()
        ]

    @classmethod
    def from_entries(cls, n: int, entries: Iterable[dict]) -> "SymPoly":
        from .scalars import parse_rational

        terms: Dict[Exponents, Fraction] = {}
        for entry in entries:
            exps = tuple(int(e) for e in entry["exponents"])
            if len(exps) != n:
                raise ValueError("exponent tuple length mismatch")
            coeff = parse_rational(entry["coeff"])
            if coeff == 0:
                raise ValueError("zero coefficient stored in serialized form")
            if exps in terms:
                raise ValueError("duplicate exponent tuple in serialized form")
            terms[exps] = coeff
        return cls(n, terms)

    def render(self, names: Sequence[str] | None = None) -> str:
        """Human-readable form, canonical term order."""
        if self.is_zero():
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.n)]
        from .scalars import format_rational

        parts = []
        for exps, coeff in self.terms_sorted():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(exps)
                if e
            ]
            mono = "*".join(factors) if factors else "1"
            parts.append(f"{format_rational(coeff)}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SymPoly({self.n}, {self.render()})"
