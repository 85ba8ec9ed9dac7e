"""Two independent exact solvers plus their cross-validation harness."""

from __future__ import annotations

import os

# Pick the OpenMP threading layer up front; probing TBB first only produces
# a version warning on this toolchain.
os.environ.setdefault("NUMBA_THREADING_LAYER", "omp")

from dataclasses import dataclass
from typing import Iterable, List

from ..errors import DomainError, SolverDisagreementError
from ..families import FamilyKind, generate
from ..labeling import Variant
from .bruteforce import DEFAULT_NODE_BUDGET, solve_bruteforce
from .profile_dp import solve_profile_dp
from .result import SolveResult

BRUTEFORCE_MAX_N = 6


@dataclass
class CrossValidationRow:
    n: int
    gamma_bruteforce: int | None
    gamma_dp: int
    agree: str  # "yes", "no", or "skipped"


def cross_validate(family: FamilyKind, variant: Variant,
                   n_range: Iterable[int],
                   budget: int = DEFAULT_NODE_BUDGET) -> List[CrossValidationRow]:
    """Run both solvers over a range of n and insist they agree.

    A brute-force budget exhaustion marks the row "skipped"; an actual
    disagreement raises, because one of the two exact methods must then be
    wrong and nothing downstream should trust either.
    """
    ns = list(n_range)
    for n in ns:
        if n > BRUTEFORCE_MAX_N:
            raise DomainError(
                f"cross-validation is limited to n <= {BRUTEFORCE_MAX_N} "
                f"(brute-force feasibility); got n={n}")

    rows: List[CrossValidationRow] = []
    for n in ns:
        g = generate(family, n)
        dp = solve_profile_dp(g, variant)
        bf = solve_bruteforce(g, variant, budget=budget)
        if bf.status == "inconclusive":
            rows.append(CrossValidationRow(n, None, dp.gamma, "skipped"))
            continue
        agree = "yes" if bf.gamma == dp.gamma else "no"
        rows.append(CrossValidationRow(n, bf.gamma, dp.gamma, agree))

    bad = [r for r in rows if r.agree == "no"]
    if bad:
        detail = ", ".join(f"n={r.n}: bf={r.gamma_bruteforce} dp={r.gamma_dp}"
                           for r in bad)
        raise SolverDisagreementError(
            f"solver disagreement on {family.value}/{variant.value}: {detail}",
            report=rows)
    return rows


__all__ = [
    "SolveResult",
    "solve_bruteforce",
    "solve_profile_dp",
    "cross_validate",
    "CrossValidationRow",
    "DEFAULT_NODE_BUDGET",
    "BRUTEFORCE_MAX_N",
]
