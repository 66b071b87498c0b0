"""Weierstrass models over F_p(t): invariants, coordinate changes, the
model at infinity, surface height and (iso)triviality of j.

The discriminant is always computed through the b-invariants, which is
valid in every characteristic; nothing here divides by 2, 3 or 1728.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .funcfield import RationalFunction
from .gfpoly import NEG_INF, Polynomial


class SingularModelError(ValueError):
    """Raised when a Weierstrass equation has vanishing discriminant."""


@dataclass(frozen=True, slots=True)
class ModelInvariants:
    b2: RationalFunction
    b4: RationalFunction
    b6: RationalFunction
    b8: RationalFunction
    c4: RationalFunction
    c6: RationalFunction
    delta: RationalFunction
    j: RationalFunction

    def __post_init__(self):
        if 4 * self.b8 != self.b2 * self.b6 - self.b4**2:
            raise AssertionError("b-invariant identity failed")  # pragma: no cover


@dataclass(frozen=True, slots=True)
class WeierstrassModel:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p(t)."""

    p: int
    a1: RationalFunction
    a2: RationalFunction
    a3: RationalFunction
    a4: RationalFunction
    a6: RationalFunction
    _inv: ModelInvariants = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for a in (self.a1, self.a2, self.a3, self.a4, self.a6):
            if not isinstance(a, RationalFunction) or a.p != self.p:
                raise ValueError("coefficients must be rational functions over F_p(t)")
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
        delta = -(b2 * b2 * b8) - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if delta.is_zero:
            raise SingularModelError("discriminant vanishes: singular Weierstrass model")
        j = c4**3 / delta
        object.__setattr__(self, "_inv", ModelInvariants(b2, b4, b6, b8, c4, c6, delta, j))

    @classmethod
    def from_coefficients(cls, p: int, a1, a2, a3, a4, a6) -> "WeierstrassModel":
        """Build a model from ints, polynomials, strings or rational functions."""
        co = lambda v: RationalFunction.coerce(p, v)
        return cls(p, co(a1), co(a2), co(a3), co(a4), co(a6))

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def is_polynomial(self) -> bool:
        return all(a.is_polynomial for a in self.coefficients)

    def __str__(self):
        return (
            f"y^2 + ({self.a1})xy + ({self.a3})y = "
            f"x^3 + ({self.a2})x^2 + ({self.a4})x + ({self.a6})  over F_{self.p}(t)"
        )


def invariants(model: WeierstrassModel) -> ModelInvariants:
    return model._inv


def transform(model: WeierstrassModel, u, r=0, s=0, w=0) -> WeierstrassModel:
    """Change coordinates by x = u^2 x' + r, y = u^3 y' + u^2 s x' + w.

    The discriminant scales by u^-12, c4 by u^-4, and j is unchanged.
    """
    p = model.p
    u = RationalFunction.coerce(p, u)
    r = RationalFunction.coerce(p, r)
    s = RationalFunction.coerce(p, s)
    w = RationalFunction.coerce(p, w)
    if u.is_zero:
        raise ZeroDivisionError("u must be nonzero")
    a1, a2, a3, a4, a6 = model.coefficients
    na1 = (a1 + 2 * s) / u
    na2 = (a2 - s * a1 + 3 * r - s * s) / u**2
    na3 = (a3 + r * a1 + 2 * w) / u**3
    na4 = (a4 - s * a3 + 2 * r * a2 - (w + r * s) * a1 + 3 * r * r - 2 * s * w) / u**4
    na6 = (a6 + r * a4 + r * r * a2 + r**3 - w * a3 - w * w - r * w * a1) / u**6
    return WeierstrassModel(p, na1, na2, na3, na4, na6)


def height(model: WeierstrassModel) -> int:
    """The least n with deg a_i <= n*i for all i (0 for constant models)."""
    if not model.is_polynomial:
        raise ValueError("height is defined for polynomial models")
    h = 0
    for i, a in zip((1, 2, 3, 4, 6), model.coefficients):
        d = a.num.degree
        if d is NEG_INF or d == 0:
            continue
        h = max(h, -(-int(d) // i))
    return h


def model_at_infinity(model: WeierstrassModel, n: int | None = None) -> WeierstrassModel:
    """The integral model at the place 1/t: substitute t = 1/s and rescale
    by u = s^-n, giving a_i'(s) = s^(n*i) a_i(1/s).

    The returned coefficients are polynomials in s (written in the same
    variable); n defaults to the height of the model.
    """
    if not model.is_polynomial:
        raise ValueError("the model at infinity needs polynomial coefficients")
    if n is None:
        n = height(model)
    out = []
    for i, a in zip((1, 2, 3, 4, 6), model.coefficients):
        poly = a.num
        if poly.degree > n * i:
            raise ValueError(f"deg a{i} = {poly.degree} exceeds height bound {n * i}")
        out.append(RationalFunction(poly.reverse(n * i)))
    return WeierstrassModel(model.p, *out)


def is_isotrivial(model: WeierstrassModel) -> bool:
    """True when j is constant."""
    j = invariants(model).j
    return j.num.degree <= 0 and j.den.degree <= 0


def is_pth_power_j(model: WeierstrassModel) -> bool:
    """Whether j lies in F_p(t)^p = F_p(t^p).

    With j = num/den coprime and den monic, the leading unit is always a
    p-th power in F_p, so the test reduces to the exponent supports of
    num and den being divisible by p.
    """
    j = invariants(model).j
    if j.is_zero:
        return True
    p = model.p
    for poly in (j.num, j.den):
        if any(c and k % p for k, c in enumerate(poly.coeffs)):
            return False
    return True


def polynomial_model(model: WeierstrassModel) -> WeierstrassModel:
    """Clear denominators by a (u, 0, 0, 0) change with 1/u the lcm of them."""
    if model.is_polynomial:
        return model
    h = Polynomial.one(model.p)
    for a in model.coefficients:
        g = h.gcd(a.den)
        h = h * (a.den // g)
    cleared = transform(model, RationalFunction(Polynomial.one(model.p), h))
    if not cleared.is_polynomial:
        raise AssertionError("denominator clearing failed")  # pragma: no cover
    return cleared


__all__ = [
    "ModelInvariants",
    "SingularModelError",
    "WeierstrassModel",
    "height",
    "invariants",
    "is_isotrivial",
    "is_pth_power_j",
    "model_at_infinity",
    "polynomial_model",
    "transform",
]
