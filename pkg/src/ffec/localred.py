"""Tate's algorithm at a place of F_p(t).

This is the full eleven-step case analysis over the local ring, valid in
residue characteristic 2 and 3: singular points are located by exact root
finding in the residue field, translations lift residue classes through
the degree-< deg(pi) section, and step 11 rescales by u = pi and restarts.
No c4/c6 shortcuts are used anywhere.

Conductor exponents come out through the Ogg-Saito formula
f = v(Delta_min) - m + 1, with m the number of geometric components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .factor import ff_deg, ff_derivative, ff_gcd, ff_trim, roots_in_field
from .funcfield import Place, RationalFunction, residue, valuation
from .gfpoly import FieldElement, FiniteField, Polynomial
from .weierstrass import WeierstrassModel, invariants, model_at_infinity, transform

KODAIRA_COMPONENTS = {"I0": 1, "II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}


def kodaira_components(kodaira: str) -> int:
    """Geometric component count (without multiplicity) of a Kodaira fiber."""
    if kodaira in KODAIRA_COMPONENTS:
        return KODAIRA_COMPONENTS[kodaira]
    if kodaira.startswith("I") and kodaira.endswith("*"):
        return int(kodaira[1:-1]) + 5
    if kodaira.startswith("I"):
        return max(int(kodaira[1:]), 1)
    raise ValueError(f"unknown Kodaira symbol {kodaira!r}")


@dataclass(frozen=True, slots=True)
class LocalReduction:
    """The local data of a minimal Weierstrass model at one place."""

    place: Place
    kodaira: str
    v_delta_min: int
    m_geom: int
    tamagawa: int
    f_cond: int
    split: bool | None
    minimal_model: WeierstrassModel
    restarts: int

    def __post_init__(self):
        if self.f_cond != self.v_delta_min - self.m_geom + 1:
            raise AssertionError("Ogg-Saito identity violated")  # pragma: no cover

    def __str__(self):
        return (
            f"{self.place}: {self.kodaira}  v(D)={self.v_delta_min}"
            f" m={self.m_geom} c={self.tamagawa} f={self.f_cond}"
        )


def _res_shifted(f: RationalFunction, place: Place, k: int) -> FieldElement:
    """residue(f / pi^k); requires v(f) >= k."""
    pi = RationalFunction(place.poly)
    return residue(f / pi**k, place)


def _quadratic_separable(qa: FieldElement, qb: FieldElement, qc: FieldElement, p: int) -> bool:
    # qa X^2 + qb X + qc with qa != 0
    if p == 2:
        return not qb.is_zero
    disc = qb * qb - 4 * qa * qc
    return not disc.is_zero


def _quadratic_double_root(qa, qb, qc, p: int) -> FieldElement:
    if p == 2:
        return (qc / qa).pth_root()
    return -qb / (2 * qa)


def _count_roots(coeffs) -> int:
    return len(roots_in_field(coeffs))


def _singular_point(model: WeierstrassModel, place: Place, field: FiniteField):
    """The unique singular point of the reduced curve (v(Delta) > 0)."""
    p = model.p
    a1, a2, a3, a4, a6 = (residue(a, place) for a in model.coefficients)
    if p == 2:
        if not a1.is_zero:
            x0 = a3 / a1
            y0 = (x0 * x0 + a4) / a1
        else:
            if not a3.is_zero:  # pragma: no cover
                raise AssertionError("smooth reduction reached the singular-point search")
            x0 = a4.pth_root()
            y0 = (x0 * x0 * x0 + a2 * x0 * x0 + a4 * x0 + a6).pth_root()
        return x0, y0
    inv = invariants(model)
    b2, b4, b6 = (residue(b, place) for b in (inv.b2, inv.b4, inv.b6))
    # 2y + a1 x + a3 = 0 turns the curve into (2y+a1x+a3)^2 = g(x):
    g = ff_trim([b6, 2 * b4, b2, field.element(4)])
    d = ff_gcd(g, ff_derivative(g, field), field)
    if ff_deg(d) < 1:
        d = g
    roots = roots_in_field(d, field)
    if len(roots) != 1:  # pragma: no cover
        raise AssertionError("singular point is not unique")
    x0 = roots[0][0]
    y0 = -(a1 * x0 + a3) / field.element(2)
    return x0, y0


def _lift(e: FieldElement) -> RationalFunction:
    return RationalFunction(e.lift())


def tate_algorithm(model: WeierstrassModel, place: Place) -> LocalReduction:
    """Kodaira type, minimal model and local BSD data at a finite place."""
    if place.is_infinite:
        raise ValueError("tate_algorithm handles finite places; see local_at_infinity")
    if model.p != place.p:
        raise ValueError("characteristic mismatch")
    for a in model.coefficients:
        if valuation(a, place) < 0:
            raise ValueError(f"model is not integral at {place}")

    p = model.p
    field = place.residue_field()
    pi_rf = RationalFunction(place.poly)
    restarts = 0

    while True:
        inv = invariants(model)
        v_delta = valuation(inv.delta, place)

        # Step 1: good reduction.
        if v_delta == 0:
            return LocalReduction(place, "I0", 0, 1, 1, 0, None, model, restarts)

        # Step 2: move the singular point of the reduction to (0, 0).
        x0, y0 = _singular_point(model, place, field)
        if not (x0.is_zero and y0.is_zero):
            model = transform(model, 1, _lift(x0), 0, _lift(y0))
            inv = invariants(model)
        a1, a2, a3, a4, a6 = model.coefficients

        # Step 3: multiplicative reduction.
        if not residue(inv.b2, place).is_zero:
            n = int(v_delta)
            r1, r2 = residue(a1, place), residue(a2, place)
            tangents = ff_trim([-r2, r1, field.one])
            split = _count_roots(tangents) == 2
            tam = n if split else (2 if n % 2 == 0 else 1)
            return LocalReduction(place, f"I{n}", n, n, tam, 1, split, model, restarts)

        # Step 4: type II.
        if valuation(a6, place) < 2:
            return LocalReduction(place, "II", int(v_delta), 1, 1, int(v_delta), None, model, restarts)

        # Step 5: type III.
        if valuation(inv.b8, place) < 3:
            return LocalReduction(place, "III", int(v_delta), 2, 2, int(v_delta) - 1, None, model, restarts)

        # Step 6: type IV.
        if valuation(inv.b6, place) < 3:
            qb = _res_shifted(a3, place, 1)
            qc = _res_shifted(a6, place, 2)
            tam = 3 if _count_roots(ff_trim([-qc, qb, field.one])) == 2 else 1
            return LocalReduction(place, "IV", int(v_delta), 3, tam, int(v_delta) - 2, None, model, restarts)

        # Normalize so that pi | a1, a2; pi^2 | a3, a4; pi^3 | a6.
        if p == 2:
            # pi | a1 already (b2 = a1^2 here); kill a2 with s, then a6 with w
            s0 = residue(a2, place).pth_root()
            if not s0.is_zero:
                model = transform(model, 1, 0, _lift(s0), 0)
            w0 = _res_shifted(model.a6, place, 2).pth_root()
            if not w0.is_zero:
                model = transform(model, 1, 0, 0, pi_rf * _lift(w0))
        else:
            two = field.element(2)
            s0 = -residue(a1, place) / two
            if not s0.is_zero:
                model = transform(model, 1, 0, _lift(s0), 0)
            w0 = -_res_shifted(model.a3, place, 1) / two
            if not w0.is_zero:
                model = transform(model, 1, 0, 0, pi_rf * _lift(w0))
        a1, a2, a3, a4, a6 = model.coefficients
        for a, k in ((a1, 1), (a2, 1), (a3, 2), (a4, 2), (a6, 3)):
            if valuation(a, place) < k:  # pragma: no cover
                raise AssertionError("step-6 normalization failed")

        # The reduction type is now governed by P(T) = T^3 + a21 T^2 + a42 T + a63.
        cubic = ff_trim(
            [
                _res_shifted(a6, place, 3),
                _res_shifted(a4, place, 2),
                _res_shifted(a2, place, 1),
                field.one,
            ]
        )
        gcd_cp = ff_gcd(cubic, ff_derivative(cubic, field), field)

        if ff_deg(gcd_cp) < 1:
            # Step 7: I0*, P separable.
            tam = 1 + _count_roots(cubic)
            return LocalReduction(place, "I0*", int(v_delta), 5, tam, int(v_delta) - 4, None, model, restarts)

        roots = roots_in_field(cubic, field)
        if len(roots) == 2:
            # Step 7 continued: I_n* for n >= 1; put the double root at zero.
            delta0 = next(r for r, m in roots if m == 2)
            if not delta0.is_zero:
                model = transform(model, 1, pi_rf * _lift(delta0), 0, 0)
            q = 2
            while True:
                a1, a2, a3, a4, a6 = model.coefficients
                qb = _res_shifted(a3, place, q)
                qc = _res_shifted(a6, place, 2 * q)
                if _quadratic_separable(field.one, qb, -qc, p):
                    n = 2 * q - 3
                    nroots = _count_roots(ff_trim([-qc, qb, field.one]))
                    tam = 4 if nroots == 2 else 2
                    return LocalReduction(
                        place, f"I{n}*", int(v_delta), n + 5, tam, int(v_delta) - n - 4, None, model, restarts
                    )
                eta = _quadratic_double_root(field.one, qb, -qc, p)
                if not eta.is_zero:
                    model = transform(model, 1, 0, 0, pi_rf**q * _lift(eta))
                a1, a2, a3, a4, a6 = model.coefficients
                qa = _res_shifted(a2, place, 1)
                qb = _res_shifted(a4, place, q + 1)
                qc = _res_shifted(a6, place, 2 * q + 1)
                if qa.is_zero:  # pragma: no cover
                    raise AssertionError("lost the double-root normal form")
                if _quadratic_separable(qa, qb, qc, p):
                    n = 2 * q - 2
                    nroots = _count_roots(ff_trim([qc, qb, qa]))
                    tam = 4 if nroots == 2 else 2
                    return LocalReduction(
                        place, f"I{n}*", int(v_delta), n + 5, tam, int(v_delta) - n - 4, None, model, restarts
                    )
                xi = _quadratic_double_root(qa, qb, qc, p)
                if not xi.is_zero:
                    model = transform(model, 1, pi_rf**q * _lift(xi), 0, 0)
                q += 1
                if q > v_delta:  # pragma: no cover
                    raise AssertionError("I_n* loop exceeded v(Delta)")

        else:
            # Steps 8-11: P has a triple root; put it at zero.
            delta0 = roots[0][0]
            if not delta0.is_zero:
                model = transform(model, 1, pi_rf * _lift(delta0), 0, 0)
            a1, a2, a3, a4, a6 = model.coefficients

            # Step 8: type IV*.
            qb = _res_shifted(a3, place, 2)
            qc = _res_shifted(a6, place, 4)
            if _quadratic_separable(field.one, qb, -qc, p):
                nroots = _count_roots(ff_trim([-qc, qb, field.one]))
                tam = 3 if nroots == 2 else 1
                return LocalReduction(place, "IV*", int(v_delta), 7, tam, int(v_delta) - 6, None, model, restarts)
            eta = _quadratic_double_root(field.one, qb, -qc, p)
            if not eta.is_zero:
                model = transform(model, 1, 0, 0, pi_rf**2 * _lift(eta))
            a1, a2, a3, a4, a6 = model.coefficients

            # Step 9: type III*.
            if valuation(a4, place) == 3:
                return LocalReduction(place, "III*", int(v_delta), 8, 2, int(v_delta) - 7, None, model, restarts)

            # Step 10: type II*.
            if valuation(a6, place) == 5:
                return LocalReduction(place, "II*", int(v_delta), 9, 1, int(v_delta) - 8, None, model, restarts)

            # Step 11: the model was not minimal; rescale by pi and restart.
            for a, k in ((a1, 1), (a2, 2), (a3, 3), (a4, 4), (a6, 6)):
                if valuation(a, place) < k:  # pragma: no cover
                    raise AssertionError("step-11 divisibility failed")
            model = transform(model, pi_rf)
            restarts += 1
            if restarts > 50:  # pragma: no cover
                raise AssertionError("minimality restarts did not terminate")


def local_at_infinity(model: WeierstrassModel, n: int | None = None) -> LocalReduction:
    """Tate's algorithm at the place 1/t, through the s = 1/t model."""
    s_model = model_at_infinity(model, n)
    s_place = Place.finite(Polynomial.t(model.p))
    red = tate_algorithm(s_model, s_place)
    return LocalReduction(
        Place.infinite(model.p),
        red.kodaira,
        red.v_delta_min,
        red.m_geom,
        red.tamagawa,
        red.f_cond,
        red.split,
        red.minimal_model,
        red.restarts,
    )


__all__ = [
    "KODAIRA_COMPONENTS",
    "LocalReduction",
    "kodaira_components",
    "local_at_infinity",
    "tate_algorithm",
]
