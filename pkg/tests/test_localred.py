import pytest

from ffec.funcfield import Place, RationalFunction, valuation
from ffec.gfpoly import Polynomial
from ffec.localred import kodaira_components, local_at_infinity, tate_algorithm
from ffec.pipeline import reference_curve
from ffec.weierstrass import WeierstrassModel, invariants, transform


def P(p, s):
    return Polynomial.parse(p, s)


def place(p, s):
    return Place.finite(P(p, s))


def curve(p, a1, a2, a3, a4, a6):
    return WeierstrassModel.from_coefficients(p, a1, a2, a3, a4, a6)


class TestReferenceCurve:
    def test_type_ii_star_at_t(self):
        expected = {2: (11, 3), 3: (11, 3), 5: (10, 2), 7: (10, 2), 47: (10, 2), 83: (10, 2)}
        for p, (v, f) in expected.items():
            red = tate_algorithm(reference_curve(p), place(p, "t"))
            assert red.kodaira == "II*"
            assert (red.v_delta_min, red.f_cond) == (v, f)
            assert red.m_geom == 9 and red.tamagawa == 1
            assert red.restarts == 0

    def test_i1_at_other_places(self):
        red = tate_algorithm(reference_curve(83), place(83, "t + 2"))
        assert (red.kodaira, red.f_cond, red.tamagawa) == ("I1", 1, 1)
        red = tate_algorithm(reference_curve(2), place(2, "t + 1"))
        assert (red.kodaira, red.f_cond) == ("I1", 1)

    def test_quadratic_place_extension_residue_field(self):
        red = tate_algorithm(reference_curve(5), place(5, "t^2 + 2t + 4"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("I1", 1, 1, 1, 1)

    def test_good_reduction(self):
        red = tate_algorithm(reference_curve(5), place(5, "t + 1"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("I0", 0, 1, 1, 0)

    def test_type_ii_at_degenerate_quadratic_mod_47(self):
        red = tate_algorithm(reference_curve(47), place(47, "t + 24"))
        assert (red.kodaira, red.v_delta_min, red.f_cond) == ("II", 2, 2)

    def test_infinity(self):
        red83 = local_at_infinity(reference_curve(83))
        assert red83.place.is_infinite
        assert (red83.kodaira, red83.f_cond) == ("I1", 1)
        assert local_at_infinity(reference_curve(5)).kodaira == "I0"
        assert local_at_infinity(reference_curve(2)).kodaira == "I0"


class TestKodairaZoo:
    """Hand-constructed fixtures covering each branch of the case analysis."""

    def test_type_ii(self):
        red = tate_algorithm(curve(5, 0, 0, 0, 0, "t"), place(5, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("II", 2, 1, 1, 2)

    def test_type_iii(self):
        red = tate_algorithm(curve(5, 0, 0, 0, "t", 0), place(5, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("III", 3, 2, 2, 2)

    def test_type_iv_split_and_nonsplit(self):
        red = tate_algorithm(curve(5, 0, 0, "t", 0, 0), place(5, "t"))
        assert (red.kodaira, red.v_delta_min, red.tamagawa, red.f_cond) == ("IV", 4, 3, 2)
        # Y^2 + Y - 3 has non-square discriminant 13 = 3 mod 5
        red = tate_algorithm(curve(5, 0, 0, "t", 0, "3t^2"), place(5, "t"))
        assert (red.kodaira, red.tamagawa) == ("IV", 1)

    def test_type_i0_star(self):
        # P(T) = T^3 + T = T(T-2)(T-3) splits over F_5
        red = tate_algorithm(curve(5, 0, 0, 0, "t^2", 0), place(5, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("I0*", 6, 5, 4, 2)
        # over F_7 the quadratic T^2 + 1 is irreducible: only the root 0 remains
        red = tate_algorithm(curve(7, 0, 0, 0, "t^2", 0), place(7, "t"))
        assert (red.kodaira, red.tamagawa) == ("I0*", 2)

    def test_type_i1_star(self):
        red = tate_algorithm(curve(5, 0, "t", 0, 0, "t^4"), place(5, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("I1*", 7, 6, 4, 2)
        # Y^2 - 2 with 2 a non-square mod 5: the two components are conjugate
        red = tate_algorithm(curve(5, 0, "t", 0, 0, "2t^4"), place(5, "t"))
        assert (red.kodaira, red.tamagawa) == ("I1*", 2)

    def test_type_i2_star(self):
        red = tate_algorithm(curve(5, 0, "t", 0, "t^3", "t^6"), place(5, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("I2*", 8, 7, 4, 2)

    def test_multiplicative_split_counts(self):
        red = tate_algorithm(curve(5, 1, 0, 0, 0, "-t"), place(5, "t"))
        assert (red.kodaira, red.split, red.tamagawa) == ("I1", True, 1)
        red = tate_algorithm(curve(5, 1, 0, 0, 0, "-t^2"), place(5, "t"))
        assert (red.kodaira, red.split, red.tamagawa) == ("I2", True, 2)
        red = tate_algorithm(curve(5, 1, 0, 0, 0, "-t^3"), place(5, "t"))
        assert (red.kodaira, red.split, red.tamagawa) == ("I3", True, 3)
        # tangent quadratic T^2 + T - 3 has non-square discriminant 13 mod 5
        red = tate_algorithm(curve(5, 1, 3, 0, 0, "t^3"), place(5, "t"))
        assert (red.kodaira, red.split, red.tamagawa) == ("I3", False, 1)

    def test_singular_point_away_from_origin(self):
        # translate the I2 example by x -> x+1, y -> y+2: same local data
        base = curve(5, 1, 0, 0, 0, "-t^2")
        moved = transform(base, 1, -1, 0, -2)
        red = tate_algorithm(moved, place(5, "t"))
        assert (red.kodaira, red.tamagawa) == ("I2", 2)

    def test_type_iii_star(self):
        red = tate_algorithm(curve(5, 0, 0, 0, "t^3", 0), place(5, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("III*", 9, 8, 2, 2)

    def test_type_iv_star_split_and_nonsplit(self):
        red = tate_algorithm(curve(7, 0, 0, 0, 0, "t^4"), place(7, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("IV*", 8, 7, 3, 2)
        # 3 is a quadratic non-residue mod 7: the two extra components are conjugate
        red = tate_algorithm(curve(7, 0, 0, 0, 0, "3t^4"), place(7, "t"))
        assert (red.kodaira, red.tamagawa) == ("IV*", 1)


class TestWildKodaira:
    """Residue characteristic 2 and 3 cases with wild conductor exponents.

    Discriminant valuations below were computed by hand from the b-invariant
    formulas; the conductor then follows from Ogg-Saito.
    """

    def test_i1_star_char_2(self):
        # Delta = t^8 (t+1)^2, Y-quadratic Y^2 + Y + 1 irreducible over F_2
        red = tate_algorithm(curve(2, "t", "t", "t^2", "t^3", "t^4"), place(2, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("I1*", 8, 6, 2, 3)

    def test_i2_star_char_2(self):
        # Delta = t^10 (t+1), X-quadratic X^2 + X + 1 irreducible over F_2
        red = tate_algorithm(curve(2, "t", "t", "t^3", "t^3", "t^5"), place(2, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("I2*", 10, 7, 2, 4)

    def test_i0_star_char_2(self):
        # Delta = t^9, P(T) = T^3 + T^2 + 1 irreducible (hence separable) over F_2
        red = tate_algorithm(curve(2, "t", "t", 0, 0, "t^3"), place(2, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("I0*", 9, 5, 1, 5)

    def test_i1_star_char_3(self):
        # Delta = -t^7, Y-quadratic Y^2 - 1 splits over F_3
        red = tate_algorithm(curve(3, 0, "t", 0, 0, "t^4"), place(3, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("I1*", 7, 6, 4, 2)

    def test_multiplicative_at_degree_two_place_char_2(self):
        # Delta = t^2 + t + 1 exactly: I1 at the degree-2 place, residue field F_4
        red = tate_algorithm(curve(2, 1, 0, 0, 0, "t^2+t+1"), place(2, "t^2+t+1"))
        assert (red.kodaira, red.v_delta_min, red.split, red.tamagawa, red.f_cond) == ("I1", 1, True, 1, 1)

    def test_type_iv_at_degree_two_place_char_2(self):
        # y^2 + pi y = x^3 with pi = t^2+t+1: Delta = pi^4, Y^2 + Y splits over F_4
        red = tate_algorithm(curve(2, 0, 0, "t^2+t+1", 0, 0), place(2, "t^2+t+1"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("IV", 4, 3, 3, 2)

    def test_iv_star_char_3_nonzero_triple_root(self):
        # P(T) = T^3 + 2 = (T - 1)^3 over F_3: the triple root is extracted
        # as a cube root and translated away before the IV* quadratic splits
        red = tate_algorithm(curve(3, 0, 0, "t^2", "t^4", "2t^3"), place(3, "t"))
        assert (red.kodaira, red.v_delta_min, red.m_geom, red.tamagawa, red.f_cond) == ("IV*", 12, 7, 3, 6)


class TestMinimality:
    def test_non_minimal_model_restarts(self):
        m = transform(reference_curve(5), RationalFunction(Polynomial.one(5), Polynomial.t(5)))
        v = valuation(invariants(m).delta, place(5, "t"))
        assert v == 22
        red = tate_algorithm(m, place(5, "t"))
        assert red.restarts == 1
        assert (red.kodaira, red.v_delta_min, red.f_cond) == ("II*", 10, 2)
        assert valuation(invariants(red.minimal_model).delta, place(5, "t")) == 10

    def test_idempotence_on_minimal_model(self):
        for p in (2, 3, 5, 83):
            first = tate_algorithm(reference_curve(p), place(p, "t"))
            again = tate_algorithm(first.minimal_model, place(p, "t"))
            assert again.restarts == 0
            assert (again.kodaira, again.v_delta_min, again.m_geom, again.tamagawa, again.f_cond) == (
                first.kodaira,
                first.v_delta_min,
                first.m_geom,
                first.tamagawa,
                first.f_cond,
            )


class TestContracts:
    def test_non_integral_input_rejected(self):
        m = WeierstrassModel.from_coefficients(
            5, RationalFunction(Polynomial.one(5), Polynomial.t(5)), 0, 0, 0, 1
        )
        with pytest.raises(ValueError):
            tate_algorithm(m, place(5, "t"))

    def test_infinite_place_needs_wrapper(self):
        with pytest.raises(ValueError):
            tate_algorithm(reference_curve(5), Place.infinite(5))

    def test_component_count_table(self):
        assert kodaira_components("I0") == 1
        assert kodaira_components("I7") == 7
        assert kodaira_components("II") == 1
        assert kodaira_components("III") == 2
        assert kodaira_components("IV") == 3
        assert kodaira_components("I0*") == 5
        assert kodaira_components("I3*") == 8
        assert kodaira_components("IV*") == 7
        assert kodaira_components("III*") == 8
        assert kodaira_components("II*") == 9

    def test_ogg_identity_and_tame_conductors(self):
        for p in (2, 3, 5, 7, 11, 47, 83):
            m = reference_curve(p)
            delta = invariants(m).delta.as_polynomial()
            from ffec.factor import factorize

            for pi, _ in factorize(delta)[1]:
                red = tate_algorithm(m, Place.finite(pi))
                assert red.f_cond == red.v_delta_min - red.m_geom + 1
                additive = red.kodaira.endswith("*") or red.kodaira in ("II", "III", "IV")
                if p > 3 and additive:
                    assert red.f_cond == 2
