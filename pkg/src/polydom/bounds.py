"""General-graph bounds, per-family theorem bounds, and mechanical
re-derivation of the aggregated-inequality lower bounds.

All arithmetic is exact rational.  The general bounds take n as the total
vertex count (they are stated for arbitrary graphs); the literature also
quotes them per column for these families, which is the same number scaled
by the row count — both forms are exposed so reports can show the published
constants next to the directly evaluated ones.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .certificates import tn2p_upper_formula
from .errors import CombinationError, DomainError
from .families import FamilyKind, class_sum_coefficients, generate
from .labeling import Variant


@dataclass(frozen=True)
class DegreeProfile:
    """Minimum degree, maximum degree, and vertex count of one graph."""

    delta: int
    Delta: int
    n_vertices: int

    def __post_init__(self):
        if not (1 <= self.delta <= self.Delta):
            raise DomainError(f"need 1 <= delta <= Delta, got {self.delta}, {self.Delta}")
        if self.n_vertices < 0:
            raise DomainError("vertex count must be non-negative")
        if 0 < self.n_vertices <= self.Delta:
            raise DomainError("maximum degree must be below the vertex count")

    @classmethod
    def of_graph(cls, g) -> "DegreeProfile":
        degrees = [g.degree(v) for v in g.vertices]
        return cls(min(degrees), max(degrees), len(degrees))


class BoundKind(enum.Enum):
    LOWER_GENERAL_SRD = "LowerGeneral4"
    LOWER_GENERAL_STRD = "LowerGeneral5"
    UPPER_GENERAL_STRD = "UpperGeneral6"
    THEOREM_LOWER = "TheoremLower"
    THEOREM_UPPER = "TheoremUpper"


@dataclass(frozen=True)
class BoundValue:
    kind: BoundKind
    value: Optional[Fraction]
    applicable: bool
    reason: str


def lb_general_srd(profile: DegreeProfile) -> BoundValue:
    """Published general lower bound on the SRD number, kept rational.

    (-2D^2 + 2Dd + D + 2d + 3) * n / ((D+1)(2D+d+3)), no rounding.
    """
    d, D, n = profile.delta, profile.Delta, profile.n_vertices
    numer = -2 * D * D + 2 * D * d + D + 2 * d + 3
    denom = (D + 1) * (2 * D + d + 3)
    value = Fraction(numer * n, denom)
    return BoundValue(BoundKind.LOWER_GENERAL_SRD, value, True, "always applicable")


def lb_general_strd(profile: DegreeProfile) -> BoundValue:
    """Published general lower bound on the STRD number; needs delta < Delta.

    ceil((2d + 3 - 2D) n / (2D + d)), ceiling as published.
    """
    d, D, n = profile.delta, profile.Delta, profile.n_vertices
    if d >= D:
        return BoundValue(BoundKind.LOWER_GENERAL_STRD, None, False,
                          "requires delta < Delta")
    raw = Fraction((2 * d + 3 - 2 * D) * n, 2 * D + d)
    return BoundValue(BoundKind.LOWER_GENERAL_STRD, Fraction(math.ceil(raw)), True,
                      "delta < Delta")


def ub_general_strd(profile: DegreeProfile) -> BoundValue:
    """gamma_stR <= n - 1 whenever the minimum degree is at least 3."""
    if profile.delta < 3:
        return BoundValue(BoundKind.UPPER_GENERAL_STRD, None, False,
                          "requires delta >= 3")
    return BoundValue(BoundKind.UPPER_GENERAL_STRD,
                      Fraction(profile.n_vertices - 1), True, "delta >= 3")


def general_bounds(profile: DegreeProfile, variant: Variant) -> Tuple[BoundValue, ...]:
    if variant is Variant.SRD:
        return (lb_general_srd(profile),)
    return (lb_general_strd(profile), ub_general_strd(profile))


# Published per-column constants quoted for these families.  They equal the
# general formulas evaluated at the family profile with n taken as the total
# vertex count, re-expressed per column; kept as annotations for reports.
PUBLISHED_PER_COLUMN: Dict[Tuple[FamilyKind, Variant], Tuple[str, Fraction]] = {
    (FamilyKind.AN, Variant.SRD): ("lower", Fraction(-3, 19)),
    (FamilyKind.RN, Variant.SRD): ("lower", Fraction(-3, 16)),
    (FamilyKind.SN, Variant.STRD): ("lower", Fraction(-4, 13)),
    (FamilyKind.TN, Variant.STRD): ("lower", Fraction(2, 7)),
    (FamilyKind.TN, Variant.SRD): ("lower", Fraction(4, 17)),
    (FamilyKind.QN, Variant.SRD): ("lower", Fraction(-1, 4)),
    (FamilyKind.TN2P, Variant.SRD): ("lower", Fraction(-2, 3)),
}


@dataclass(frozen=True)
class TheoremBounds:
    lower: Fraction
    upper: Fraction
    exact: bool
    source: str

    @property
    def lower_int(self) -> int:
        """Integrality sharpening: gamma is an integer, so ceil applies."""
        return math.ceil(self.lower)

    @property
    def upper_int(self) -> int:
        return math.floor(self.upper)


def theorem_bounds(family: FamilyKind, variant: Variant, n: int) -> Optional[TheoremBounds]:
    """The proven interval for (family, variant) at this n, or None.

    Returns None both for combinations no theorem covers and for n outside
    the stated range of the covering theorem.
    """
    if n < 5:
        return None
    key = (family, variant)
    if key == (FamilyKind.AN, Variant.SRD):
        return TheoremBounds(Fraction(0), Fraction(0), True, "Thm1")
    if key == (FamilyKind.RN, Variant.SRD):
        k, rem = divmod(n, 3)
        if rem == 0:
            return TheoremBounds(Fraction(2 * k), Fraction(2 * k), True, "Thm2")
        if rem == 1:
            return TheoremBounds(Fraction(2 * k + 1), Fraction(2 * k + 2), False, "Thm2")
        return TheoremBounds(Fraction(2 * k + 2), Fraction(2 * k + 2), True, "Thm2")
    if key == (FamilyKind.SN, Variant.STRD):
        return TheoremBounds(Fraction(n), Fraction(n), True, "Thm3")
    if key == (FamilyKind.TN, Variant.STRD):
        if n % 2 == 0:
            return TheoremBounds(Fraction(n), Fraction(n), True, "Thm4")
        return TheoremBounds(Fraction(n), Fraction(n + 1), False, "Thm4")
    if key == (FamilyKind.TN, Variant.SRD):
        return TheoremBounds(Fraction(3 * n, 4), Fraction(n), False, "Thm5")
    if key == (FamilyKind.QN, Variant.SRD):
        if n < 12:
            return None
        return TheoremBounds(Fraction(2 * n, 3), Fraction(n), False, "Thm6")
    if key == (FamilyKind.TN2P, Variant.SRD):
        return TheoremBounds(Fraction(7 * n, 15), Fraction(tn2p_upper_formula(n)),
                             False, "Thm7")
    return None


# Aggregated-inequality machinery -----------------------------------------

_LABELS = (-1, 1, 2)


def available_rows(family: FamilyKind, variant: Variant) -> Dict[str, Dict[str, Fraction]]:
    """Left-hand sides usable in a multiplier combination.

    Three row types per vertex class X (label-sum variables W_Y denote the
    sum of f over class Y):

      agg:X   sum over class-X vertices of the per-vertex condition,
              sum_Y coeff[X][Y] * W_Y >= n
      card:X  |X_-1| + |X_1| + |X_2| = n  (an equality; multiplier may be
              negative)
      cap:X   -W_X >= -2n  (every label is at most 2)
    """
    coeffs = class_sum_coefficients(generate(family, 7), variant)
    return {klass: {k2: Fraction(v) for k2, v in row.items()}
            for klass, row in coeffs.items()}


def verify_multiplier_combination(family: FamilyKind, variant: Variant,
                                  multipliers: Mapping[str, Fraction]) -> Fraction:
    """Combine aggregated rows and return the implied per-n bound coefficient.

    Keys are "agg:<class>", "card:<class>", "cap:<class>".  Inequality rows
    (agg, cap) must carry non-negative multipliers; cardinality rows are
    equalities and may be negative.

    The combination succeeds when the per-class coefficients telescope to a
    common positive multiple lam of the weight: every class contributes
    exactly -lam per -1 label, and at most lam (resp. 2*lam) per 1 (resp. 2)
    label, so the combined left side is dominated by lam * f(V).  The result
    is rhs / lam, the coefficient of n in the proven bound f(V) >= coeff * n.
    """
    classes = family.classes
    agg = available_rows(family, variant)

    # Per (class, label) coefficients of the combined left side.
    coeff = {klass: {lab: Fraction(0) for lab in _LABELS} for klass in classes}
    rhs = Fraction(0)

    for key, mult in multipliers.items():
        mult = Fraction(mult)
        if mult == 0:
            continue
        try:
            row_type, klass = key.split(":")
        except ValueError:
            raise DomainError(f"bad row key {key!r}; expected e.g. 'agg:a'") from None
        if klass not in classes:
            raise DomainError(f"class {klass!r} not in family {family.value}")
        if row_type == "agg":
            if mult < 0:
                raise DomainError(f"inequality row {key} needs a non-negative multiplier")
            for k2, c in agg[klass].items():
                for lab in _LABELS:
                    coeff[k2][lab] += mult * c * lab
            rhs += mult
        elif row_type == "card":
            for lab in _LABELS:
                coeff[klass][lab] += mult
            rhs += mult
        elif row_type == "cap":
            if mult < 0:
                raise DomainError(f"inequality row {key} needs a non-negative multiplier")
            for lab in _LABELS:
                coeff[klass][lab] -= mult * lab
            rhs += mult * -2
        else:
            raise DomainError(f"unknown row type {row_type!r} in {key!r}")

    lams = {klass: -coeff[klass][-1] for klass in classes}
    lam = lams[classes[0]]
    residual = {klass: lams[klass] - lam for klass in classes}
    if any(residual.values()):
        raise CombinationError(
            f"combination does not telescope: per-class weight multiples differ "
            f"({ {k: str(v) for k, v in lams.items()} })",
            residual={k: v for k, v in residual.items()})
    if lam <= 0:
        raise CombinationError(
            f"combination does not telescope: non-positive weight multiple {lam}",
            residual=residual)

    excess = {}
    for klass in classes:
        if coeff[klass][1] > lam:
            excess[f"{klass}:1"] = coeff[klass][1] - lam
        if coeff[klass][2] > 2 * lam:
            excess[f"{klass}:2"] = coeff[klass][2] - 2 * lam
    if excess:
        raise CombinationError(
            "combination does not telescope: left side is not dominated by the "
            f"weight (excess {excess})",
            residual=excess)

    return rhs / lam


# The multiplier vectors used by the per-family proofs.
PROOF_MULTIPLIERS: Dict[Tuple[FamilyKind, Variant], Dict[str, Fraction]] = {
    (FamilyKind.AN, Variant.SRD): {
        "agg:a": Fraction(1), "agg:c": Fraction(1), "cap:b": Fraction(1)},
    (FamilyKind.RN, Variant.SRD): {
        "agg:a": Fraction(1), "agg:c": Fraction(1)},
    (FamilyKind.SN, Variant.STRD): {
        "agg:b": Fraction(1), "agg:d": Fraction(1)},
    (FamilyKind.TN, Variant.STRD): {
        "agg:a": Fraction(1), "agg:d": Fraction(1)},
    (FamilyKind.TN, Variant.SRD): {
        "agg:a": Fraction(1, 4), "agg:b": Fraction(1, 8),
        "agg:c": Fraction(1, 8), "agg:d": Fraction(1, 4)},
    (FamilyKind.QN, Variant.SRD): {
        "card:c": Fraction(-1, 6), "agg:a": Fraction(1, 4),
        "agg:b": Fraction(1, 4), "agg:d": Fraction(1, 3)},
    (FamilyKind.TN2P, Variant.SRD): {
        "card:c": Fraction(-4, 15), "agg:a": Fraction(1, 5),
        "agg:b": Fraction(1, 5), "agg:d": Fraction(1, 3)},
}

# Bound coefficients those combinations must reproduce.
EXPECTED_COMBINATION: Dict[Tuple[FamilyKind, Variant], Fraction] = {
    (FamilyKind.AN, Variant.SRD): Fraction(0),
    (FamilyKind.RN, Variant.SRD): Fraction(2, 3),
    (FamilyKind.SN, Variant.STRD): Fraction(1),
    (FamilyKind.TN, Variant.STRD): Fraction(1),
    (FamilyKind.TN, Variant.SRD): Fraction(3, 4),
    (FamilyKind.QN, Variant.SRD): Fraction(2, 3),
    (FamilyKind.TN2P, Variant.SRD): Fraction(7, 15),
}


def rational_repr(value: Optional[Fraction]):
    """JSON-friendly form: int when integral, 'p/q' string otherwise."""
    if value is None:
        return None
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"
