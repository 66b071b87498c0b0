"""ffec: exact arithmetic certification for elliptic curves over F_p(t).

The package certifies, by exact finite-field computation, the local and
global invariants of Weierstrass curves over the rational function field:
Kodaira types and Tamagawa numbers through the full Tate algorithm,
conductors through Ogg-Saito, rank bounds through component counts on
rational elliptic surfaces, torsion through p-power and component-group
certificates, and the order of Sha through the rank-zero BSD formula.
"""

from .factor import factorize, roots_in_field, squarefree_decomposition
from .formal import TruncatedSeries, formal_group_mult_by_p, formal_group_multiple
from .funcfield import Place, RationalFunction, finite_places, residue, valuation
from .gfpoly import FieldElement, FiniteField, Polynomial, is_irreducible, is_prime
from .localred import LocalReduction, kodaira_components, local_at_infinity, tate_algorithm
from .pipeline import (
    GlobalReport,
    InconsistencyError,
    RankNotComputed,
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
from .weierstrass import (
    ModelInvariants,
    SingularModelError,
    WeierstrassModel,
    height,
    invariants,
    is_isotrivial,
    is_pth_power_j,
    model_at_infinity,
    polynomial_model,
    transform,
)
from .wcgroup import (
    FiniteAbelianGroup,
    Homomorphism,
    element_order,
    is_r_li,
    lilemma_extract,
    period_of_sum,
)

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FiniteAbelianGroup",
    "FiniteField",
    "GlobalReport",
    "Homomorphism",
    "InconsistencyError",
    "LocalReduction",
    "ModelInvariants",
    "Place",
    "Polynomial",
    "RankNotComputed",
    "RationalFunction",
    "SingularModelError",
    "TruncatedSeries",
    "WeierstrassModel",
    "analyze",
    "bad_places",
    "conductor_and_l_degree",
    "element_order",
    "factorize",
    "finite_places",
    "formal_group_mult_by_p",
    "formal_group_multiple",
    "height",
    "invariants",
    "is_irreducible",
    "is_isotrivial",
    "is_prime",
    "is_pth_power_j",
    "is_r_li",
    "kodaira_components",
    "lilemma_extract",
    "local_at_infinity",
    "local_reductions",
    "model_at_infinity",
    "period_of_sum",
    "polynomial_model",
    "reference_curve",
    "report_json_dict",
    "residue",
    "roots_in_field",
    "sha_order_bsd",
    "shioda_tate_rank",
    "squarefree_decomposition",
    "tate_algorithm",
    "torsion_certificate",
    "transform",
    "valuation",
]
