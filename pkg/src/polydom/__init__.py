"""Signed (total) Roman domination on convex polytope graph families.

Generators for the six families, admissibility checking for labelings over
{-1, 1, 2}, closed-form upper-bound certificates, two independent exact
solvers, and rational verification of the aggregated-inequality lower
bounds.
"""

from .families import (
    FamilyKind,
    PolytopeGraph,
    VertexId,
    class_sum_coefficients,
    closed_neighborhood,
    generate,
    parse_edgelist,
    to_dot,
    to_edgelist,
)
from .labeling import (
    LabelFunction,
    Variant,
    Violation,
    ViolationKind,
    format_labeling,
    is_admissible,
    neighborhood_sum,
    parse_labeling,
    validate,
    weight,
)
from .certificates import (
    Certificate,
    cert_An_srd,
    cert_Qn_srd,
    cert_Rn_srd,
    cert_Sn_strd,
    cert_Tn_srd,
    cert_Tn_strd,
    cert_TnDoublePrime_srd,
    certificate_for,
    covered_combinations,
)
from .solver import SolveResult, cross_validate, solve_bruteforce, solve_profile_dp
from . import bounds

__version__ = "0.1.0"

__all__ = [
    "FamilyKind",
    "PolytopeGraph",
    "VertexId",
    "generate",
    "closed_neighborhood",
    "class_sum_coefficients",
    "to_edgelist",
    "to_dot",
    "parse_edgelist",
    "LabelFunction",
    "Variant",
    "Violation",
    "ViolationKind",
    "neighborhood_sum",
    "validate",
    "is_admissible",
    "weight",
    "format_labeling",
    "parse_labeling",
    "Certificate",
    "certificate_for",
    "covered_combinations",
    "cert_An_srd",
    "cert_Rn_srd",
    "cert_Sn_strd",
    "cert_Tn_strd",
    "cert_Tn_srd",
    "cert_Qn_srd",
    "cert_TnDoublePrime_srd",
    "SolveResult",
    "solve_bruteforce",
    "solve_profile_dp",
    "cross_validate",
    "bounds",
]
