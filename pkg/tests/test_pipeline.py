import json

import pytest

from ffec.funcfield import Place
from ffec.gfpoly import Polynomial
from ffec.localred import LocalReduction
from ffec.pipeline import (
    InconsistencyError,
    analyze,
    bad_places,
    conductor_and_l_degree,
    local_reductions,
    reference_curve,
    report_json_dict,
    sha_order_bsd,
    shioda_tate_rank,
    torsion_certificate,
)
from ffec.weierstrass import WeierstrassModel


def P(p, s):
    return Polynomial.parse(p, s)


class TestBadPlaces:
    def test_mod_5(self):
        assert [str(v) for v in bad_places(reference_curve(5))] == ["(t)", "(t^2+2t+4)"]

    def test_mod_83_includes_infinity(self):
        assert [str(v) for v in bad_places(reference_curve(83))] == ["(t)", "(t+2)", "(1/t)"]

    def test_mod_2(self):
        assert [str(v) for v in bad_places(reference_curve(2))] == ["(t)", "(t+1)"]


def _fake_reduction(place, kodaira, v, m, c, f):
    return LocalReduction(place, kodaira, v, m, c, f, None, reference_curve(place.p), 0)


class TestShiodaTate:
    def test_reference_mod_5(self):
        reds = local_reductions(reference_curve(5))
        assert shioda_tate_rank(reds, curve_height=1, isotrivial=False) == 0

    def test_isotrivial_not_computed(self):
        from ffec.pipeline import RankNotComputed

        with pytest.raises(RankNotComputed, match="isotrivial"):
            shioda_tate_rank((), curve_height=1, isotrivial=True)

    def test_height_gate(self):
        from ffec.pipeline import RankNotComputed

        with pytest.raises(RankNotComputed, match="height"):
            shioda_tate_rank((), curve_height=2, isotrivial=False)

    def test_twelve_nodal_fibers_give_rank_eight(self):
        places = [Place.finite(P(13, f"t + {c}")) for c in range(12)]
        reds = [_fake_reduction(v, "I1", 1, 1, 1, 1) for v in places]
        assert shioda_tate_rank(reds, curve_height=1, isotrivial=False) == 8


class TestConductor:
    def test_divisor_strings(self):
        cases = {2: "3(t) + (t+1)", 3: "3(t) + (t+1)", 83: "2(t) + (t+2) + (1/t)", 5: "2(t) + (t^2+2t+4)"}
        for p, expected in cases.items():
            r = analyze(p)
            assert r.conductor_string == expected
            assert r.conductor_degree == 4
            assert r.l_degree == 0

    def test_isotrivial_skips_l_degree(self):
        reds = local_reductions(reference_curve(47))
        divisor, degree, l_degree = conductor_and_l_degree(reds, isotrivial=True)
        assert degree == 4
        assert l_degree is None


class TestTorsion:
    def test_mod_5_both_routes(self):
        m = reference_curve(5)
        order, certs = torsion_certificate(m, local_reductions(m))
        assert order == 1
        assert any("not a p-th power" in c["detail"] for c in certs)
        assert any("II*" in c["detail"] for c in certs)

    def test_mod_47_deuring(self):
        m = reference_curve(47)
        order, certs = torsion_certificate(m, local_reductions(m))
        assert order == 1
        assert any("Deuring" in c["detail"] for c in certs)

    def test_constant_curve_not_certified(self):
        # j = 0 and p = 1 mod 3: neither p-primary route applies, and there
        # is no II/II* fiber to pin the prime-to-p part
        m = WeierstrassModel.from_coefficients(7, 0, 0, 0, 0, 1)
        order, certs = torsion_certificate(m, local_reductions(m))
        assert order is None
        assert all(c["status"] != "certified" or "p_primary" not in c["claim"] for c in certs)


class TestSha:
    def test_reference_values(self):
        for p in (3, 7):
            r = analyze(p)
            assert r.sha_order == 1

    def test_formula_arithmetic(self):
        assert (
            sha_order_bsd(
                curve_height=1, rank_geom=0, l_degree=0, torsion_order=2, tamagawa_numbers=[4]
            )
            == 1
        )

    def test_non_integral_is_inconsistency(self):
        with pytest.raises(InconsistencyError):
            sha_order_bsd(curve_height=1, rank_geom=0, l_degree=0, torsion_order=1, tamagawa_numbers=[3])

    def test_preconditions_reported(self):
        with pytest.raises(ValueError, match="height"):
            sha_order_bsd(curve_height=3, rank_geom=0, l_degree=0, torsion_order=1, tamagawa_numbers=[])
        with pytest.raises(ValueError, match="rank"):
            sha_order_bsd(curve_height=1, rank_geom=1, l_degree=0, torsion_order=1, tamagawa_numbers=[])
        with pytest.raises(ValueError, match="L-degree"):
            sha_order_bsd(curve_height=1, rank_geom=0, l_degree=2, torsion_order=1, tamagawa_numbers=[])


class TestAnalyze:
    def test_mod_11_endpoint(self):
        r = analyze(11)
        assert r.rank_geom == 0
        assert r.torsion_order == 1
        assert r.sha_order == 1
        assert r.conductor_degree == 4
        assert r.globally_minimal

    def test_mod_47_exceptional(self):
        r = analyze(47)
        assert r.isotrivial
        assert r.j.is_zero
        assert r.rank_geom == "not-computed(isotrivial)"
        assert r.torsion_order == 1
        assert isinstance(r.sha_order, str) and r.sha_order.startswith("not-certified")
        assert r.conductor_degree == 4
        assert any(c["status"] == "external" for c in r.certificates)
        kinds = {str(x.place): x.kodaira for x in r.places}
        assert kinds == {"(t)": "II*", "(t+24)": "II"}

    def test_constant_curve(self):
        m = WeierstrassModel.from_coefficients(5, 0, 0, 0, 0, 1)
        r = analyze(5, m)
        assert r.isotrivial
        assert r.height == 0
        assert r.places == ()
        assert r.conductor_degree == 0
        assert r.rank_geom == "not-computed(isotrivial)"
        assert r.torsion_order == "not-certified"

    def test_json_schema_and_determinism(self):
        doc = report_json_dict(analyze(2))
        assert list(doc) == [
            "prime",
            "delta_factored",
            "j",
            "height",
            "isotrivial",
            "places",
            "conductor",
            "l_degree",
            "rank_geom",
            "torsion",
            "sha",
            "certificates",
        ]
        assert list(doc["places"][0]) == ["place", "kodaira", "v_delta", "m_geom", "tamagawa", "f"]
        assert doc["conductor"] == {"divisor": "3(t) + (t+1)", "degree": 4}
        assert doc["delta_factored"] == "(t)^11*(t+1)"
        assert doc["j"] == "t/(t+1)"
        again = report_json_dict(analyze(2))
        assert json.dumps(doc) == json.dumps(again)

    def test_mismatched_characteristic_rejected(self):
        with pytest.raises(ValueError):
            analyze(7, reference_curve(5))

    def test_conductor_degree_two_ways(self):
        for p in (2, 7, 47, 83):
            r = analyze(p)
            recomputed = sum(
                (x.v_delta_min - x.m_geom + 1) * x.place.degree for x in r.places
            )
            assert recomputed == r.conductor_degree

    def test_height_two_gates_the_rank_formula(self):
        m = WeierstrassModel.from_coefficients(5, 0, 0, 0, "t^7", "t")
        r = analyze(5, m)
        assert r.height == 2 and not r.isotrivial
        assert r.rank_geom == "not-computed(height=2)"
        assert isinstance(r.sha_order, str)

    def test_positive_rank_bound_blocks_sha(self):
        # fibers I1* (m=6) at (t), I1 at (t+2), IV (m=3) at 1/t: rank bound 8-5-0-2 = 1
        m = WeierstrassModel.from_coefficients(5, 0, "t", 0, 0, "t^4")
        r = analyze(5, m)
        assert [(str(x.place), x.kodaira) for x in r.places] == [
            ("(t)", "I1*"),
            ("(t+2)", "I1"),
            ("(1/t)", "IV"),
        ]
        assert r.rank_geom == 1
        assert r.conductor_degree == 5
        assert sum(x.v_delta_min * x.place.degree for x in r.places) == 12
        assert isinstance(r.sha_order, str) and r.sha_order.startswith("not-certified")

    def test_rational_coefficients_are_cleared(self):
        from ffec.funcfield import RationalFunction

        m = WeierstrassModel.from_coefficients(
            2, 1, 0, 0, 0, RationalFunction(Polynomial.one(2), P(2, "t^2"))
        )
        r = analyze(2, m)
        assert r.model.is_polynomial
