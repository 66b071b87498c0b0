"""The formal group of a Weierstrass model at a place, to finite precision.

Coefficients live in the truncated local ring F_p[t]/(pi^M); each ring
element is bit-packed into a single Python int (one slot per t-power) so
that ring multiplication is one big-int multiply.  Series in the formal
parameter X are dense lists of packed coefficients.

Multiples [m](X) are built from the tangent-line doubling [2] and chord
additions F([a], [b]); chords are only formed when the leading
coefficients a, b differ mod p, so the line never degenerates, and even
multiples go through the composition [2m] = [2] o [m].
"""

from __future__ import annotations

from dataclasses import dataclass

from .funcfield import Place, valuation
from .gfpoly import Polynomial, ext_gcd
from .weierstrass import WeierstrassModel


class _Ring:
    """F_p[t]/(pi^prec) with packed-int elements."""

    def __init__(self, p: int, pi: Polynomial, prec: int, lazy_terms: int):
        self.p = p
        g = pi**prec
        self.g = g
        self.deg = int(g.degree)
        bound = self.deg * (p - 1) ** 2 * max(lazy_terms, 2)
        self.bits = max(bound.bit_length() + 1, 4)
        self.mask = (1 << self.bits) - 1
        self.trivial = pi.coeffs == (0, 1)
        self.rows: dict[int, tuple[int, ...]] = {}
        if not self.trivial:
            for k in range(self.deg, 2 * self.deg - 1):
                rem = Polynomial(p, (0,) * k + (1,)) % g
                self.rows[k] = tuple(rem[i] for i in range(self.deg))

    def pack(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = (v << self.bits) | (c % self.p)
        return v

    def unpack(self, v: int, n: int) -> list[int]:
        out = []
        for _ in range(n):
            out.append(v & self.mask)
            v >>= self.bits
        return out

    def from_poly(self, f: Polynomial) -> int:
        return self.pack((f % self.g).coeffs)

    def to_poly(self, v: int) -> Polynomial:
        return Polynomial(self.p, self.unpack(v, self.deg))

    def normalize(self, v: int) -> int:
        return self.pack(self.unpack(v, self.deg))

    def reduce_wide(self, v: int) -> int:
        """Reduce a raw product/accumulation (up to 2*deg-1 slots) mod g."""
        slots = [c % self.p for c in self.unpack(v, 2 * self.deg - 1)]
        if not self.trivial:
            for k in range(2 * self.deg - 2, self.deg - 1, -1):
                c = slots[k]
                if c:
                    row = self.rows[k]
                    for i in range(self.deg):
                        if row[i]:
                            slots[i] += c * row[i]
            slots = [c % self.p for c in slots[: self.deg]]
        return self.pack(slots[: self.deg])

    def add(self, a: int, b: int) -> int:
        return self.normalize(a + b)

    def neg(self, a: int) -> int:
        return self.pack((-c) % self.p for c in self.unpack(a, self.deg))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.reduce_wide(a * b)

    def mul_int(self, a: int, k: int) -> int:
        k %= self.p
        if k == 0 or a == 0:
            return 0
        return self.normalize(a * k)

    def inverse(self, a: int) -> int:
        poly = self.to_poly(a)
        gg, u, _ = ext_gcd(poly, self.g)
        if gg.degree != 0:
            raise ZeroDivisionError(f"{poly} is not a unit mod {self.g}")
        return self.from_poly(u)


class _Series:
    """Truncated power series over a _Ring; fixed length, packed coefficients."""

    __slots__ = ("ring", "cs")

    def __init__(self, ring: _Ring, cs: list[int]):
        self.ring = ring
        self.cs = cs

    @classmethod
    def zero(cls, ring: _Ring, length: int) -> "_Series":
        return cls(ring, [0] * length)

    def copy(self) -> "_Series":
        return _Series(self.ring, list(self.cs))

    def add(self, other: "_Series") -> "_Series":
        r = self.ring
        return _Series(r, [r.add(a, b) for a, b in zip(self.cs, other.cs)])

    def sub(self, other: "_Series") -> "_Series":
        r = self.ring
        return _Series(r, [r.sub(a, b) for a, b in zip(self.cs, other.cs)])

    def neg(self) -> "_Series":
        r = self.ring
        return _Series(r, [r.neg(a) for a in self.cs])

    def mul(self, other: "_Series") -> "_Series":
        r = self.ring
        n = len(self.cs)
        out = [0] * n
        for i, ai in enumerate(self.cs):
            if ai:
                bs = other.cs
                for j in range(n - i):
                    bj = bs[j]
                    if bj:
                        out[i + j] += ai * bj
        return _Series(r, [r.reduce_wide(v) if v else 0 for v in out])

    def scale(self, c: int) -> "_Series":
        r = self.ring
        if c == 0:
            return _Series.zero(r, len(self.cs))
        return _Series(r, [r.mul(c, a) if a else 0 for a in self.cs])

    def shift_up(self, k: int) -> "_Series":
        return _Series(self.ring, [0] * k + self.cs[: len(self.cs) - k])

    def shift_down(self, k: int) -> "_Series":
        if any(self.cs[:k]):
            raise AssertionError("shift_down drops nonzero coefficients")  # pragma: no cover
        return _Series(self.ring, self.cs[k:] + [0] * k)

    def compose(self, inner: "_Series") -> "_Series":
        """self(inner(X)); the inner series must have zero constant term."""
        if inner.cs[0] != 0:
            raise AssertionError("composition needs positive valuation")  # pragma: no cover
        r = self.ring
        res = _Series.zero(r, len(self.cs))
        for k in range(len(self.cs) - 1, -1, -1):
            res = res.mul(inner)
            if self.cs[k]:
                res.cs[0] = r.add(res.cs[0], self.cs[k])
        return res

    def invert_unit(self) -> "_Series":
        r = self.ring
        n = len(self.cs)
        inv0 = r.inverse(self.cs[0])
        neg_inv0 = r.neg(inv0)
        out = [inv0] + [0] * (n - 1)
        for k in range(1, n):
            acc = 0
            for i in range(1, k + 1):
                if self.cs[i] and out[k - i]:
                    acc += self.cs[i] * out[k - i]
            if acc:
                out[k] = r.mul(neg_inv0, r.reduce_wide(acc))
        return _Series(r, out)

    def derivative(self) -> "_Series":
        r = self.ring
        n = len(self.cs)
        return _Series(r, [r.mul_int(self.cs[k + 1], k + 1) for k in range(n - 1)] + [0])


class _FormalGroup:
    def __init__(self, model: WeierstrassModel, place: Place, x_prec: int, coeff_prec: int, chain: int):
        if place.is_infinite:
            raise ValueError("pass a finite place (use model_at_infinity for 1/t)")
        if model.p != place.p:
            raise ValueError("characteristic mismatch")
        for a in model.coefficients:
            if valuation(a, place) < 0:
                raise ValueError(f"model is not integral at {place}")
        self.p = model.p
        self.length = x_prec + chain + 3
        ring = _Ring(model.p, place.poly, coeff_prec, self.length)
        self.ring = ring
        packed = []
        for a in model.coefficients:
            num = ring.from_poly(a.num)
            den = ring.from_poly(a.den)
            packed.append(ring.mul(num, ring.inverse(den)))
        self.a1, self.a2, self.a3, self.a4, self.a6 = packed
        self.two_a4 = ring.mul_int(self.a4, 2)
        self.three_a6 = ring.mul_int(self.a6, 3)
        x = _Series.zero(ring, self.length)
        x.cs[1] = ring.pack((1,))
        self.x = x
        self.one_packed = ring.pack((1,))
        self.w = self._solve_w()
        self.inv_coord = self._inversion_series()
        self.memo: dict[int, _Series] = {1: self.x}

    def _solve_w(self) -> _Series:
        # w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3
        ring = self.ring
        base = _Series.zero(ring, self.length)
        base.cs[3] = self.one_packed
        w = base.copy()
        for _ in range(self.length + 1):
            w2 = w.mul(w)
            w3 = w2.mul(w)
            nw = base.copy()
            nw = nw.add(w.shift_up(1).scale(self.a1))
            nw = nw.add(w.shift_up(2).scale(self.a2))
            nw = nw.add(w2.scale(self.a3))
            nw = nw.add(w2.shift_up(1).scale(self.a4))
            nw = nw.add(w3.scale(self.a6))
            if nw.cs == w.cs:
                return w
            w = nw
        raise AssertionError("w(z) iteration failed to stabilize")  # pragma: no cover

    def _inversion_series(self) -> _Series:
        # z(-P) = z / (-1 + a1 z + a3 w(z))
        ring = self.ring
        denom = self.w.scale(self.a3)
        denom.cs[0] = ring.add(denom.cs[0], ring.neg(self.one_packed))
        denom.cs[1] = ring.add(denom.cs[1], self.a1)
        return denom.invert_unit().shift_up(1)

    def _third_point(self, sum_z: _Series, lam: _Series, nu: _Series) -> _Series:
        lam2 = lam.mul(lam)
        lam_nu = lam.mul(nu)
        numer = lam.scale(self.a1)
        numer = numer.add(lam2.scale(self.a3))
        numer = numer.add(nu.scale(self.a2))
        numer = numer.add(lam_nu.scale(self.two_a4))
        numer = numer.add(lam2.mul(nu).scale(self.three_a6))
        den = lam.scale(self.a2)
        den = den.add(lam2.scale(self.a4))
        den = den.add(lam2.mul(lam).scale(self.a6))
        den.cs[0] = self.ring.add(den.cs[0], self.one_packed)
        z3 = sum_z.add(numer.mul(den.invert_unit())).neg()
        return self.inv_coord.compose(z3)

    def _double(self) -> _Series:
        lam = self.w.derivative()
        nu = self.w.sub(lam.shift_up(1))
        return self._third_point(self.x.add(self.x), lam, nu)

    def _chord(self, phi: _Series, psi: _Series) -> _Series:
        w_phi = self.w.compose(phi)
        w_psi = self.w if psi is self.x else self.w.compose(psi)
        diff = phi.sub(psi)
        lam = w_phi.sub(w_psi).shift_down(1).mul(diff.shift_down(1).invert_unit())
        nu = w_phi.sub(lam.mul(phi))
        return self._third_point(phi.add(psi), lam, nu)

    def multiple(self, m: int) -> _Series:
        if m in self.memo:
            return self.memo[m]
        if m == 2:
            res = self._double()
        elif m % 2 == 0:
            res = self.multiple(2).compose(self.multiple(m // 2))
        else:
            for b in (1, 2, 3):
                if (m - 2 * b) % self.p != 0:
                    res = self._chord(self.multiple(m - b), self.multiple(b))
                    break
            else:  # pragma: no cover
                raise AssertionError("no admissible chord decomposition")
        self.memo[m] = res
        return res


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    """[m](X) mod X^(precision+1), coefficients in F_p[t]/(modulus)."""

    modulus: Polynomial
    precision: int
    coefficients: tuple

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coefficients) if not c.is_zero)

    def __getitem__(self, k: int) -> Polynomial:
        return self.coefficients[k]


def formal_group_multiple(
    model: WeierstrassModel,
    place: Place,
    m: int,
    precision: int,
    coeff_precision: int | None = None,
) -> TruncatedSeries:
    """The multiplication-by-m series of the formal group at a finite place."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if precision < 1:
        raise ValueError("precision must be >= 1")
    if coeff_precision is None:
        coeff_precision = precision + 1
    fg = _FormalGroup(model, place, precision, coeff_precision, chain=m)
    series = fg.multiple(m)
    coeffs = tuple(fg.ring.to_poly(v) for v in series.cs[: precision + 1])
    return TruncatedSeries(fg.ring.g, precision, coeffs)


def formal_group_mult_by_p(
    model: WeierstrassModel,
    place: Place,
    precision: int,
    coeff_precision: int | None = None,
) -> TruncatedSeries:
    """[p](X) mod X^(precision+1) at a finite place where the model is integral.

    In characteristic p every monomial that survives has exponent divisible
    by p; precision p^2 + 1 is enough to see the X^(p^2) term of a
    supersingular fiber.
    """
    if precision < model.p:
        raise ValueError(f"precision {precision} < p cannot certify anything")
    return formal_group_multiple(model, place, model.p, precision, coeff_precision)


__all__ = ["TruncatedSeries", "formal_group_mult_by_p", "formal_group_multiple"]
