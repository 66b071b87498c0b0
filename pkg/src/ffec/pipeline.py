"""The full certification pipeline over F_p(t): bad places, component-count
rank bound, conductor and L-degree, torsion certificates, and the order of
Sha through the rank-zero BSD formula.

Everything is exact.  Conclusions that cannot be certified are reported as
tagged strings ("not-computed(...)" / "not-certified(...)"), never guessed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .factor import factorize
from .funcfield import Place, RationalFunction
from .gfpoly import Polynomial
from .localred import LocalReduction, local_at_infinity, tate_algorithm
from .weierstrass import (
    WeierstrassModel,
    height,
    invariants,
    is_isotrivial,
    is_pth_power_j,
    polynomial_model,
)

L_DEGREE_SHIFT = 4  # deg L(E, s) = deg(conductor) - 4 for nonisotrivial curves


class InconsistencyError(RuntimeError):
    """An arithmetic identity that must hold for valid inputs failed."""


class RankNotComputed(ValueError):
    """The component-count rank formula does not apply; carries the reason."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True, slots=True)
class GlobalReport:
    prime: int
    model: WeierstrassModel
    height: int
    isotrivial: bool
    j: RationalFunction
    delta_factored: str
    places: tuple[LocalReduction, ...]
    conductor: tuple[tuple[Place, int], ...]
    conductor_degree: int
    l_degree: int | None
    rank_geom: int | str
    torsion_order: int | str
    sha_order: int | str
    certificates: tuple[dict, ...]
    globally_minimal: bool

    @property
    def conductor_string(self) -> str:
        return format_divisor(self.conductor)


def reference_curve(p: int) -> WeierstrassModel:
    """The built-in height-1 curve y^2 + txy + t^3 y = x^3 + t^2 x^2 + t^4 x + t^5."""
    return WeierstrassModel.from_coefficients(p, "t", "t^2", "t^3", "t^4", "t^5")


def format_divisor(divisor) -> str:
    if not divisor:
        return "0"
    parts = []
    for place, mult in divisor:
        head = "" if mult == 1 else str(mult)
        parts.append(f"{head}{place}")
    return " + ".join(parts)


def format_factored(f: Polynomial) -> str:
    unit, factors = factorize(f)
    parts = [] if unit == 1 and factors else [str(unit)]
    for g, m in factors:
        s = "(" + str(g).replace(" ", "") + ")"
        parts.append(s if m == 1 else f"{s}^{m}")
    return "*".join(parts) if parts else str(unit)


def local_reductions(model: WeierstrassModel) -> tuple[LocalReduction, ...]:
    """Tate data at every bad place: the factors of Delta, plus infinity
    whenever the model at 1/t has bad reduction."""
    if not model.is_polynomial:
        model = polynomial_model(model)
    delta = invariants(model).delta.as_polynomial()
    _, factors = factorize(delta)
    out = []
    for pi, _ in factors:
        red = tate_algorithm(model, Place.finite(pi))
        if red.kodaira != "I0":
            out.append(red)
    inf_red = local_at_infinity(model)
    if inf_red.kodaira != "I0":
        out.append(inf_red)
    return tuple(out)


def bad_places(model: WeierstrassModel) -> list[Place]:
    return [red.place for red in local_reductions(model)]


def shioda_tate_rank(reductions, *, curve_height: int, isotrivial: bool, minimal: bool = True) -> int:
    """The geometric Mordell-Weil rank of a height-1 surface:
    8 - sum (m_v - 1) deg(v) over the bad fibers.

    The rank over F_p(t) is bounded above by this; when it is 0 both ranks
    vanish.  Raises RankNotComputed outside the formula's hypotheses.
    """
    if isotrivial:
        raise RankNotComputed("isotrivial")
    if curve_height != 1:
        raise RankNotComputed(f"height={curve_height}")
    if not minimal:
        raise RankNotComputed("model not globally minimal")
    total = sum((red.m_geom - 1) * red.place.degree for red in reductions)
    rank = 8 - total
    if rank < 0:
        raise InconsistencyError(f"component counts exceed the rational-surface bound: {total}")
    return rank


def conductor_and_l_degree(reductions, *, isotrivial: bool):
    """The conductor divisor sum f_v (v), its degree, and deg L = deg - 4.

    The L-degree formula needs a nonisotrivial curve; for isotrivial input
    the degree is still returned but l_degree is None.
    """
    divisor = tuple((red.place, red.f_cond) for red in reductions)
    degree = sum(f * place.degree for place, f in divisor)
    if isotrivial:
        return divisor, degree, None
    l_degree = degree - L_DEGREE_SHIFT
    if l_degree < 0:
        raise InconsistencyError(f"negative L-degree {l_degree} for a nonisotrivial curve")
    return divisor, degree, l_degree


def torsion_certificate(model: WeierstrassModel, reductions):
    """Certify E(F_p(t))[tors] = 0 when possible.

    p-primary torsion vanishes if j is not a p-th power (a p-torsion point
    makes the dual of the p-isogeny a Frobenius, forcing j into k^p), or if
    j = 0 with p = 2 mod 3 (supersingular by Deuring's criterion).
    Prime-to-p torsion vanishes when some fiber has type II or II*: the
    component group is trivial there, so torsion injects into the p-group
    k_v^+ once the formal-group part is excluded.
    """
    certs = []
    p = model.p
    j = invariants(model).j
    p_primary = False
    if not is_pth_power_j(model):
        p_primary = True
        certs.append(
            {"claim": "p_primary_torsion=0", "status": "certified", "detail": "j is not a p-th power in F_p(t)"}
        )
    elif j.is_zero and p % 3 == 2:
        p_primary = True
        certs.append(
            {
                "claim": "p_primary_torsion=0",
                "status": "certified",
                "detail": f"j=0 and {p} = 2 (mod 3): supersingular by Deuring's criterion",
            }
        )
    else:
        certs.append(
            {"claim": "p_primary_torsion=0", "status": "not-certified", "detail": "j is a p-th power"}
        )
    pinned = next((r for r in reductions if r.kodaira in ("II", "II*")), None)
    if pinned is not None:
        certs.append(
            {
                "claim": "prime_to_p_torsion=0",
                "status": "certified",
                "detail": f"type {pinned.kodaira} at {pinned.place}: trivial component group,"
                " torsion injects into the additive group of the residue field",
            }
        )
    else:
        certs.append(
            {"claim": "prime_to_p_torsion=0", "status": "not-certified", "detail": "no fiber of type II or II*"}
        )
    order = 1 if (p_primary and pinned is not None) else None
    return order, certs


def sha_order_bsd(*, curve_height: int, rank_geom, l_degree, torsion_order, tamagawa_numbers) -> int:
    """#Sha from the BSD formula at rank 0: L(1) * tors^2 / tau with L(1) = 1.

    Preconditions: height <= 2 (BSD is a theorem there), geometric rank 0
    (so r = 0 and the regulator is 1), L-degree 0 (so L is identically 1),
    and a certified torsion order.
    """
    if curve_height > 2:
        raise ValueError(f"not-certified(height={curve_height}>2)")
    if rank_geom != 0:
        raise ValueError("not-certified(rank not zero or not computed)")
    if l_degree != 0:
        raise ValueError(f"not-certified(L-degree {l_degree} != 0)")
    if not isinstance(torsion_order, int):
        raise ValueError("not-certified(torsion unknown)")
    tau = math.prod(tamagawa_numbers)
    num = torsion_order**2
    if num % tau:
        raise InconsistencyError(f"BSD yields non-integral Sha order {num}/{tau}")
    sha = num // tau
    if sha <= 0:
        raise InconsistencyError("BSD yields a nonpositive Sha order")  # pragma: no cover
    return sha


def analyze(p: int, model: WeierstrassModel | None = None) -> GlobalReport:
    """Run the whole pipeline for one prime; model defaults to the reference curve."""
    if model is None:
        model = reference_curve(p)
    if model.p != p:
        raise ValueError("model characteristic does not match p")
    model = polynomial_model(model)
    inv = invariants(model)
    h = height(model)
    isotriv = is_isotrivial(model)
    reductions = local_reductions(model)
    minimal = all(r.restarts == 0 for r in reductions)
    certs: list[dict] = []

    torsion, torsion_certs = torsion_certificate(model, reductions)
    certs.extend(torsion_certs)
    if torsion is None:
        torsion_out: int | str = "not-certified"
        certs.append({"claim": "torsion=1", "status": "not-certified", "detail": "a primary part is unresolved"})
    else:
        torsion_out = torsion
        certs.append({"claim": "torsion=1", "status": "certified", "detail": "both primary parts vanish"})

    try:
        rank: int | str = shioda_tate_rank(
            reductions, curve_height=h, isotrivial=isotriv, minimal=minimal
        )
        detail = "8 - sum (m_v - 1) deg(v) = " + str(rank)
        certs.append({"claim": f"rank_geom={rank}", "status": "certified", "detail": detail})
        if rank == 0:
            certs.append(
                {"claim": "rank=0", "status": "certified", "detail": "geometric rank 0 bounds the rank over F_p(t)"}
            )
    except RankNotComputed as exc:
        rank = f"not-computed({exc.reason})"
        certs.append({"claim": "rank_geom", "status": "not-computed", "detail": exc.reason})
        if exc.reason == "isotrivial":
            certs.append(
                {
                    "claim": "rank=0",
                    "status": "external",
                    "detail": "isotrivial curve: rank must be certified outside this tool",
                }
            )

    conductor, degree, l_degree = conductor_and_l_degree(reductions, isotrivial=isotriv)
    if l_degree == 0:
        certs.append(
            {"claim": "L=1", "status": "certified", "detail": "conductor degree 4: L has degree 0 and constant term 1"}
        )
    elif isotriv:
        certs.append(
            {"claim": "L=1", "status": "conditional", "detail": "L-degree formula needs a nonisotrivial curve"}
        )

    try:
        sha: int | str = sha_order_bsd(
            curve_height=h,
            rank_geom=rank,
            l_degree=l_degree,
            torsion_order=torsion_out,
            tamagawa_numbers=[r.tamagawa for r in reductions],
        )
        certs.append(
            {"claim": f"sha={sha}", "status": "certified", "detail": "BSD at rank 0: sha = L(1)*tors^2/tau"}
        )
    except ValueError as exc:
        sha = str(exc)
        certs.append({"claim": "sha", "status": "not-certified", "detail": str(exc)})

    return GlobalReport(
        prime=p,
        model=model,
        height=h,
        isotrivial=isotriv,
        j=inv.j,
        delta_factored=format_factored(inv.delta.as_polynomial()),
        places=reductions,
        conductor=conductor,
        conductor_degree=degree,
        l_degree=l_degree,
        rank_geom=rank,
        torsion_order=torsion_out,
        sha_order=sha,
        certificates=tuple(certs),
        globally_minimal=minimal,
    )


def report_json_dict(report: GlobalReport) -> dict:
    """The stable JSON form of a report."""
    return {
        "prime": report.prime,
        "delta_factored": report.delta_factored,
        "j": str(report.j).replace(" ", ""),
        "height": report.height,
        "isotrivial": report.isotrivial,
        "places": [
            {
                "place": str(r.place),
                "kodaira": r.kodaira,
                "v_delta": r.v_delta_min,
                "m_geom": r.m_geom,
                "tamagawa": r.tamagawa,
                "f": r.f_cond,
            }
            for r in report.places
        ],
        "conductor": {"divisor": report.conductor_string, "degree": report.conductor_degree},
        "l_degree": report.l_degree,
        "rank_geom": report.rank_geom,
        "torsion": report.torsion_order,
        "sha": report.sha_order,
        "certificates": list(report.certificates),
    }


__all__ = [
    "GlobalReport",
    "InconsistencyError",
    "RankNotComputed",
    "analyze",
    "bad_places",
    "conductor_and_l_degree",
    "format_divisor",
    "format_factored",
    "local_reductions",
    "reference_curve",
    "report_json_dict",
    "sha_order_bsd",
    "shioda_tate_rank",
    "torsion_certificate",
]
