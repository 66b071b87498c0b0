"""Places of the rational function field F_p(t), valuations and residues.

A place is either a monic irreducible polynomial pi (a closed point of the
affine line) or the place at infinity, handled throughout by the
substitution s = 1/t.  Residue fields are presented as F_p[x]/(pi), so the
residue map is literally reduction mod pi.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .gfpoly import FieldElement, FiniteField, Polynomial, is_irreducible


class RationalFunction:
    """num/den over F_p[t], kept with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RationalFunction):
            if den is not None:
                raise TypeError("cannot pass a denominator with a RationalFunction")
            self.num, self.den = num.num, num.den
            return
        if not isinstance(num, Polynomial):
            raise TypeError("numerator must be a Polynomial")
        if den is None:
            den = Polynomial.one(num.p)
        if isinstance(den, int):
            den = Polynomial.constant(num.p, den)
        if den.p != num.p:
            raise ValueError("mixed characteristics")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = num
            self.den = Polynomial.one(num.p)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead_inv = pow(den.leading, -1, den.p)
        self.num = num * lead_inv
        self.den = den * lead_inv

    @property
    def p(self) -> int:
        return self.num.p

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    @classmethod
    def coerce(cls, p: int, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            if value.p != p:
                raise ValueError("mixed characteristics")
            return value
        if isinstance(value, Polynomial):
            return cls(value)
        if isinstance(value, int):
            return cls(Polynomial.constant(p, value))
        if isinstance(value, str):
            return cls(Polynomial.parse(p, value))
        raise TypeError(f"cannot coerce {value!r} to a rational function")

    def _coerce(self, other):
        try:
            return RationalFunction.coerce(self.p, other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den**-e, self.num**-e)
        return RationalFunction(self.num**e, self.den**e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        num = str(self.num)
        if self.num.degree > 0 and len(self.num.coeffs) - self.num.coeffs.count(0) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"

    def __repr__(self):
        return f"RationalFunction(F_{self.p}(t): {self})"


@dataclass(frozen=True, slots=True)
class Place:
    """A place of F_p(t): a monic irreducible polynomial, or infinity."""

    p: int
    poly: Polynomial | None = None  # None marks the place at infinity

    def __post_init__(self):
        if self.poly is not None:
            if self.poly.p != self.p:
                raise ValueError("place characteristic mismatch")
            if not self.poly.is_monic or not is_irreducible(self.poly):
                raise ValueError(f"{self.poly} is not monic irreducible")

    @classmethod
    def finite(cls, poly: Polynomial) -> "Place":
        return cls(poly.p, poly)

    @classmethod
    def infinite(cls, p: int) -> "Place":
        return cls(p, None)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else int(self.poly.degree)

    def residue_field(self) -> FiniteField:
        return _residue_field(self)

    def sort_key(self):
        if self.poly is None:
            return (1, ())
        return (0, self.poly.sort_key())

    def __str__(self):
        if self.poly is None:
            return "(1/t)"
        return "(" + str(self.poly).replace(" ", "") + ")"


@functools.lru_cache(maxsize=None)
def _residue_field(place: Place) -> FiniteField:
    if place.is_infinite:
        return FiniteField.prime_field(place.p)
    return FiniteField(place.p, place.poly)


def valuation(f, place: Place):
    """The normalized valuation of f at the place (inf for f = 0)."""
    if isinstance(f, (Polynomial, int)):
        f = RationalFunction.coerce(place.p, f)
    if f.p != place.p:
        raise ValueError("characteristic mismatch")
    if f.is_zero:
        return math.inf
    if place.is_infinite:
        return int(f.den.degree - f.num.degree)
    pi = place.poly
    return int(f.num.valuation_at(pi) - f.den.valuation_at(pi))


def residue(f, place: Place) -> FieldElement:
    """The image of f in the residue field at the place; needs valuation >= 0."""
    if isinstance(f, (Polynomial, int)):
        f = RationalFunction.coerce(place.p, f)
    v = valuation(f, place)
    if v < 0:
        raise ValueError(f"negative valuation {v} of {f} at {place}")
    field = place.residue_field()
    if place.is_infinite:
        if f.num.degree < f.den.degree:
            return field.zero
        return field.element(f.num.leading)  # den is monic
    num_red = field.element(f.num % place.poly)
    den_red = field.element(f.den % place.poly)
    if den_red.is_zero:
        raise AssertionError("denominator vanished despite coprimality")  # pragma: no cover
    return num_red * den_red.inverse()


def finite_places(f: Polynomial) -> list[tuple[Place, int]]:
    """The finite places in the support of a nonzero polynomial, with multiplicities."""
    from .factor import factorize

    _, factors = factorize(f)
    return [(Place.finite(g), m) for g, m in factors]


__all__ = [
    "Place",
    "RationalFunction",
    "finite_places",
    "residue",
    "valuation",
]
