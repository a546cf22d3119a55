"""Exact arithmetic in Z[v, v^-1] and in group algebras of free abelian lattices.

``LaurentPoly`` is the scalar ring everywhere in this package: integer
coefficients, exponents in Z, canonically sparse (no stored zeros).
``GroupAlgebraElt`` is Z[v^{±1}][L] for a lattice L = Z^r; lattice points
are plain int tuples and multiplication adds them.  The same type carries
weight characters, Hecke-module elements and K-theory classes.

All values are immutable; arithmetic always builds new objects.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InexactDivisionError, InputError

Vector = tuple[int, ...]


@dataclasses.dataclass(init=False, frozen=True)
class LaurentPoly:
    """An integer Laurent polynomial in one variable v.

    Stored as a sorted tuple of (exponent, coefficient) pairs with all
    coefficients nonzero, so equality and hashing are structural.

    >>> (V + V**-1) * (V + V**-1)
    LaurentPoly('v^2 + 2 + v^-2')
    >>> (V**-1 - V) * V
    LaurentPoly('1 - v^2')
    >>> (3*V**2 - V**-1).bar()
    LaurentPoly('-v + 3v^-2')
    """

    terms: tuple[tuple[int, int], ...]

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        object.__setattr__(
            self, "terms",
            tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def valuation(self) -> int:
        """Lowest exponent; raises on the zero polynomial."""
        if not self.terms:
            raise InputError("zero polynomial has no valuation")
        return self.terms[0][0]

    def degree(self) -> int:
        """Highest exponent; raises on the zero polynomial."""
        if not self.terms:
            raise InputError("zero polynomial has no degree")
        return self.terms[-1][0]

    def in_v_times_nonneg(self) -> bool:
        """True iff every exponent is >= 1 (i.e. the element lies in v*Z[v])."""
        return all(e >= 1 for e, _ in self.terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        other = coerce(other)
        return LaurentPoly(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([(e, -c) for e, c in self.terms])

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return self + (-coerce(other))

    def __rsub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return coerce(other) + (-self)

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly([(e, c * other) for e, c in self.terms])
        if isinstance(other, LaurentPoly):
            acc: dict[int, int] = {}
            for e, c in self.terms:
                for f, d in other.terms:
                    acc[e + f] = acc.get(e + f, 0) + c * d
            return LaurentPoly(acc)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self.terms) == 1 and self.terms[0][1] in (1, -1):
                e, c = self.terms[0]
                return LaurentPoly({-e: c}) ** (-n)
            raise InputError("cannot invert a non-unit Laurent polynomial")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def bar(self) -> LaurentPoly:
        """The exponent-negating involution v -> v^-1."""
        return LaurentPoly([(-e, c) for e, c in self.terms])

    def evaluate(self, value: Fraction | int) -> Fraction:
        """Exact substitution v = value; value must be nonzero."""
        value = Fraction(value)
        if value == 0:
            raise InputError("cannot evaluate at v = 0: negative exponents")
        return sum((c * value ** e for e, c in self.terms), Fraction(0))

    def exact_div(self, den: LaurentPoly) -> LaurentPoly:
        """Exact quotient self/den in Z[v, v^-1]; raises InexactDivisionError."""
        if den.is_zero():
            raise InexactDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return ZERO
        rem = dict(self.terms)
        dd, dc = den.terms[-1]
        # If q*den == self exactly then val(q) = val(self) - val(den), so any
        # quotient exponent below that bound proves the division inexact.
        min_exp = self.valuation() - den.valuation()
        q: dict[int, int] = {}
        while rem:
            rd = max(rem)
            rc = rem[rd]
            if rc % dc != 0 or rd - dd < min_exp:
                raise InexactDivisionError(f"{self} is not divisible by {den}")
            ratio = rc // dc
            q[rd - dd] = ratio
            for e, c in den.terms:
                k = e + rd - dd
                nc = rem.get(k, 0) - ratio * c
                if nc:
                    rem[k] = nc
                else:
                    rem.pop(k, None)
        return LaurentPoly(q)

    # -- display and wire form ---------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "v" if e == 1 else f"v^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self.terms}

    @staticmethod
    def from_json(data: Mapping[str, int]) -> LaurentPoly:
        try:
            return LaurentPoly({int(e): int(c) for e, c in data.items()})
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad Laurent polynomial encoding: {data!r}") from exc


def coerce(x: int | LaurentPoly) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise InputError(f"cannot interpret {x!r} as a Laurent polynomial")


def v_power(k: int) -> LaurentPoly:
    return LaurentPoly({k: 1})


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})
V_INV = LaurentPoly({-1: 1})


# ---------------------------------------------------------------------
# Group algebra of a lattice with LaurentPoly coefficients.
# ---------------------------------------------------------------------

def vadd(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))

def vsub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))

def vneg(a: Vector) -> Vector:
    return tuple(-x for x in a)

def dot(a: Vector, b: Vector) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclasses.dataclass(init=False, frozen=True)
class GroupAlgebraElt:
    """An element of Z[v^{±1}][Z^r]: finitely many lattice points, each
    with a nonzero LaurentPoly coefficient.

    >>> x = GroupAlgebraElt.monomial((1,)); xi = GroupAlgebraElt.monomial((-1,))
    >>> (x + xi) * (x + xi)
    GroupAlgebraElt('e[2] + 2 + e[-2]')
    """

    rank: int
    terms: tuple[tuple[Vector, LaurentPoly], ...]

    def __init__(self, rank: int,
                 terms: Mapping[Vector, LaurentPoly | int] | Iterable = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[Vector, LaurentPoly] = {}
        for vec, c in items:
            vec = tuple(int(x) for x in vec)
            if len(vec) != rank:
                raise InputError(f"lattice vector {vec} has wrong rank (expected {rank})")
            c = coerce(c)
            prev = acc.get(vec)
            acc[vec] = c if prev is None else prev + c
        object.__setattr__(self, "rank", rank)
        object.__setattr__(
            self, "terms",
            tuple(sorted(((vec, c) for vec, c in acc.items() if not c.is_zero()),
                         key=lambda t: t[0])))

    @staticmethod
    def monomial(vec: Iterable[int], coeff: LaurentPoly | int = 1) -> GroupAlgebraElt:
        vec = tuple(int(x) for x in vec)
        return GroupAlgebraElt(len(vec), {vec: coeff})

    @staticmethod
    def zero(rank: int) -> GroupAlgebraElt:
        return GroupAlgebraElt(rank, {})

    @staticmethod
    def one(rank: int) -> GroupAlgebraElt:
        return GroupAlgebraElt(rank, {(0,) * rank: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, vec: Vector) -> LaurentPoly:
        for w, c in self.terms:
            if w == vec:
                return c
        return ZERO

    def support(self) -> list[Vector]:
        return [vec for vec, _ in self.terms]

    def _check(self, other: GroupAlgebraElt) -> None:
        if self.rank != other.rank:
            raise InputError("group algebra elements live on different lattices")

    def __add__(self, other: GroupAlgebraElt) -> GroupAlgebraElt:
        self._check(other)
        return GroupAlgebraElt(self.rank, list(self.terms) + list(other.terms))

    def __neg__(self) -> GroupAlgebraElt:
        return GroupAlgebraElt(self.rank, [(vec, -c) for vec, c in self.terms])

    def __sub__(self, other: GroupAlgebraElt) -> GroupAlgebraElt:
        return self + (-other)

    def __mul__(self, other: GroupAlgebraElt | LaurentPoly | int) -> GroupAlgebraElt:
        if isinstance(other, (int, LaurentPoly)):
            other = coerce(other)
            return GroupAlgebraElt(self.rank,
                                   [(vec, c * other) for vec, c in self.terms])
        self._check(other)
        acc: dict[Vector, LaurentPoly] = {}
        for vec, c in self.terms:
            for w, d in other.terms:
                k = vadd(vec, w)
                prev = acc.get(k)
                p = c * d
                acc[k] = p if prev is None else prev + p
        return GroupAlgebraElt(self.rank, acc)

    def __rmul__(self, other: LaurentPoly | int) -> GroupAlgebraElt:
        return self * other

    def map_exponents(self, f) -> GroupAlgebraElt:
        """Apply a lattice map vec -> vec termwise (e.g. a Weyl reflection)."""
        return GroupAlgebraElt(self.rank, [(tuple(f(vec)), c) for vec, c in self.terms])

    def bar(self) -> GroupAlgebraElt:
        return GroupAlgebraElt(self.rank, [(vec, c.bar()) for vec, c in self.terms])

    def counit(self) -> LaurentPoly:
        """Send every lattice point to 1 (sum of coefficients)."""
        out = ZERO
        for _, c in self.terms:
            out = out + c
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for vec, c in self.terms:
            e = "e[" + ",".join(str(x) for x in vec) + "]"
            if all(x == 0 for x in vec):
                parts.append(str(c) if len(c.terms) == 1 else f"({c})")
            elif c == ONE:
                parts.append(e)
            elif len(c.terms) == 1 and c.terms[0] == (0, -1):
                parts.append(f"-{e}")
            else:
                parts.append(f"({c})*{e}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GroupAlgebraElt('{self}')"

    def to_json(self) -> list[dict]:
        return [{"vector": list(vec), "coeff": c.to_json()} for vec, c in self.terms]

    @staticmethod
    def from_json(rank: int, data: Iterable[Mapping]) -> GroupAlgebraElt:
        try:
            return GroupAlgebraElt(
                rank,
                [(tuple(item["vector"]), LaurentPoly.from_json(item["coeff"]))
                 for item in data])
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad group algebra encoding: {data!r}") from exc


def ga_exact_divide(num: GroupAlgebraElt, den: GroupAlgebraElt) -> GroupAlgebraElt:
    """Exact quotient in the group algebra, by lexicographic long division.

    The quotient's support is confined a priori to the box between
    coordinatewise min(num) - min(den) and max(num) - max(den); any step
    that would leave the box, or any non-dividing leading coefficient,
    means the division is inexact and raises InexactDivisionError.  The
    result q always satisfies q * den == num.
    """
    if den.is_zero():
        raise InexactDivisionError("division by zero in the group algebra")
    if num.is_zero():
        return GroupAlgebraElt.zero(num.rank)
    num._check(den)
    r = num.rank
    lo = tuple(min(vec[i] for vec in num.support()) -
               min(vec[i] for vec in den.support()) for i in range(r))
    hi = tuple(max(vec[i] for vec in num.support()) -
               max(vec[i] for vec in den.support()) for i in range(r))

    den_terms = den.terms
    lead_vec, lead_coeff = den_terms[-1]

    rem: dict[Vector, LaurentPoly] = dict(num.terms)
    q: dict[Vector, LaurentPoly] = {}
    while rem:
        top = max(rem)
        t = vsub(top, lead_vec)
        if any(not (lo[i] <= t[i] <= hi[i]) for i in range(r)):
            raise InexactDivisionError("inexact division in the group algebra")
        ratio = rem[top].exact_div(lead_coeff)
        q[t] = ratio
        for vec, c in den_terms:
            k = vadd(vec, t)
            nc = rem.get(k, ZERO) - ratio * c
            if nc.is_zero():
                rem.pop(k, None)
            else:
                rem[k] = nc
    quotient = GroupAlgebraElt(r, q)
    if quotient * den != num:
        raise InexactDivisionError("inexact division in the group algebra")
    return quotient
