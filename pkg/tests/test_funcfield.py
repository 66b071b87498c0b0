import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffec.funcfield import Place, RationalFunction, finite_places, residue, valuation
from ffec.gfpoly import Polynomial


def P(p, s):
    return Polynomial.parse(p, s)


def RF(p, num, den="1"):
    return RationalFunction(P(p, num), P(p, den))


def test_normalization_cancels_and_makes_den_monic():
    f = RF(5, "2t^2 + 2t", "4t")
    assert f.num == P(5, "3t + 3")
    assert f.den == P(5, "1")
    g = RF(7, "t", "2t + 2")
    assert g.den.is_monic


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RF(5, "t", "0")


def test_field_axioms_spot():
    a, b = RF(5, "t", "t + 1"), RF(5, "2", "t")
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * (b + 1) == a * b + a


class TestPlace:
    def test_display(self):
        assert str(Place.finite(P(7, "t^2 + 3t + 1"))) == "(t^2+3t+1)"
        assert str(Place.infinite(5)) == "(1/t)"

    def test_rejects_reducible(self):
        with pytest.raises(ValueError):
            Place.finite(P(5, "t^2 + 4t + 4"))
        with pytest.raises(ValueError):
            Place.finite(P(5, "2t + 1"))  # not monic

    def test_degree_and_residue_field(self):
        v = Place.finite(P(2, "t^2 + t + 1"))
        assert v.degree == 2
        assert v.residue_field().order == 4
        assert Place.infinite(7).degree == 1


class TestValuation:
    def test_worked_examples(self):
        delta5 = P(5, "t^10") * P(5, "83t^2 - 199t + 432")
        assert valuation(RationalFunction(delta5), Place.finite(P(5, "t"))) == 10
        assert valuation(RF(7, "t^3"), Place.infinite(7)) == -3
        delta2 = P(2, "t^11") * P(2, "t + 1")
        assert valuation(RationalFunction(delta2), Place.finite(P(2, "t + 1"))) == 1

    def test_zero_is_plus_infinity(self):
        assert valuation(RF(5, "0"), Place.finite(P(5, "t"))) == math.inf
        assert valuation(RF(5, "0"), Place.infinite(5)) == math.inf

    def test_multiplicativity(self):
        v = Place.finite(P(5, "t + 1"))
        f, g = RF(5, "t^2 + 2t + 1", "t"), RF(5, "t + 1", "t + 2")
        assert valuation(f * g, v) == valuation(f, v) + valuation(g, v)


class TestResidue:
    def test_worked_examples(self):
        assert residue(RF(7, "t + 5"), Place.finite(P(7, "t"))).value() == 5
        assert residue(RF(5, "t^2 + 1", "t^2"), Place.infinite(5)).value() == 1
        v = Place.finite(P(2, "t^2 + t + 1"))
        x_class = v.residue_field().element(Polynomial.t(2))
        assert residue(RF(2, "t"), v) == x_class

    def test_negative_valuation_raises(self):
        with pytest.raises(ValueError):
            residue(RF(5, "1", "t"), Place.finite(P(5, "t")))
        with pytest.raises(ValueError):
            residue(RF(5, "t^2"), Place.infinite(5))

    def test_multiplicative(self):
        v = Place.finite(P(7, "t^2 + 1"))
        f, g = RF(7, "t + 3", "t + 1"), RF(7, "t^2 + t + 4")
        assert residue(f * g, v) == residue(f, v) * residue(g, v)


rational_functions = st.builds(
    lambda p, ncs, dcs: RationalFunction(Polynomial(p, ncs), Polynomial(p, dcs + [1])),
    st.sampled_from([2, 3, 5]),
    st.lists(st.integers(0, 4), min_size=1, max_size=6),
    st.lists(st.integers(0, 4), max_size=5),
)


@given(rational_functions)
@settings(max_examples=150, deadline=None)
def test_product_formula(f):
    """sum over all places of v(f) deg(v) = 0 for nonzero f."""
    if f.is_zero:
        return
    total = 0
    for poly in (f.num, f.den):
        if poly.degree > 0:
            for place, _ in finite_places(poly):
                total += valuation(f, place) * place.degree
    total += valuation(f, Place.infinite(f.p))
    assert total == 0


def test_finite_places_sorted_and_monic():
    places = finite_places(P(7, "3t^3 + 3t"))  # 3 t (t^2 + 1), t^2+1 irreducible mod 7
    assert [(str(v), m) for v, m in places] == [("(t)", 1), ("(t^2+1)", 1)]
