"""Result record shared by both exact solvers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from ..labeling import LabelFunction


@dataclass
class SolveResult:
    """Outcome of one exact solve.

    For status == "exact", gamma is the optimum and witness is an admissible
    labeling of that weight.  For status == "inconclusive" (brute force ran
    out of node budget) both are None; an inconclusive result never carries
    a number.

    stats is deterministic across runs and thread counts; elapsed is not
    part of that contract.
    """

    gamma: Optional[int]
    witness: Optional[LabelFunction]
    method: str
    stats: Dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0
    status: str = "exact"
