"""Label functions over {-1, 1, 2} and the two admissibility conditions.

A labeling is admissible (SRD) when every closed neighborhood sums to at
least 1 and every -1 vertex has a 2-labeled neighbor.  The total variant
(STRD) uses the open neighborhood for the sum; the witness condition is the
same in both.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from .errors import DomainError
from .families import VertexId

LABELS = (-1, 1, 2)


class Variant(enum.Enum):
    SRD = "srd"
    STRD = "strd"

    @classmethod
    def from_tag(cls, tag: str) -> "Variant":
        for member in cls:
            if member.value == tag:
                return member
        raise DomainError(f"unknown variant {tag!r}; expected srd or strd")


class ViolationKind(enum.Enum):
    SUM_TOO_LOW = "SumTooLow"
    UNCOVERED_MINUS_ONE = "UncoveredMinusOne"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    vertex: VertexId
    observed_sum: Optional[int] = None

    def render(self) -> str:
        if self.kind is ViolationKind.SUM_TOO_LOW:
            return f"{self.kind.value} {self.vertex.name} sum={self.observed_sum}"
        return f"{self.kind.value} {self.vertex.name} no 2-labeled neighbor"


@dataclass(frozen=True)
class LabelFunction:
    """Total map from the vertices of one (family, n) graph to {-1, 1, 2}."""

    family_tag: str
    n: int
    assignment: Mapping[VertexId, int]

    def __post_init__(self):
        for v, value in self.assignment.items():
            if value not in LABELS:
                raise DomainError(f"label {value} at {v.name} is not in {LABELS}")

    def __getitem__(self, v: VertexId) -> int:
        try:
            return self.assignment[v]
        except KeyError:
            raise DomainError(f"vertex {v.name} has no label") from None

    def __iter__(self) -> Iterator[VertexId]:
        return iter(sorted(self.assignment))

    def weight(self) -> int:
        return sum(self.assignment.values())

    def partition_sizes(self) -> Dict[int, int]:
        sizes = {-1: 0, 1: 0, 2: 0}
        for value in self.assignment.values():
            sizes[value] += 1
        return sizes


def weight(f: LabelFunction) -> int:
    """Sum of all labels; equals -|V_-1| + |V_1| + 2|V_2|."""
    return f.weight()


def _check_identity(g, f: LabelFunction) -> None:
    if f.family_tag != g.family_tag or f.n != g.n:
        raise DomainError(
            f"labeling is for {f.family_tag} n={f.n}, graph is "
            f"{g.family_tag} n={g.n}")
    missing = [v for v in g.vertices if v not in f.assignment]
    if missing:
        raise DomainError(f"labeling misses {len(missing)} vertices, e.g. {missing[0].name}")
    if len(f.assignment) != len(g.vertices):
        extra = sorted(set(f.assignment) - set(g.vertices))
        raise DomainError(f"labeling has {len(extra)} unknown vertices, e.g. {extra[0].name}")


def neighborhood_sum(g, f: LabelFunction, v: VertexId, variant: Variant) -> int:
    """Sum of labels over N[v] (SRD) or N(v) (STRD)."""
    s = sum(f[u] for u in g.neighbors(v))
    if variant is Variant.SRD:
        s += f[v]
    return s


def validate(g, f: LabelFunction, variant: Variant) -> List[Violation]:
    """Exhaustive admissibility diagnosis; empty result means admissible.

    Every violating vertex appears: SumTooLow whenever its neighborhood sum
    is below 1, UncoveredMinusOne whenever it carries -1 without a 2-labeled
    neighbor.  Output is in canonical vertex order regardless of the graph's
    internal iteration order.
    """
    _check_identity(g, f)
    out: List[Violation] = []
    for v in sorted(g.vertices):
        s = neighborhood_sum(g, f, v, variant)
        if s < 1:
            out.append(Violation(ViolationKind.SUM_TOO_LOW, v, s))
        if f[v] == -1 and not any(f[u] == 2 for u in g.neighbors(v)):
            out.append(Violation(ViolationKind.UNCOVERED_MINUS_ONE, v))
    return out


def is_admissible(g, f: LabelFunction, variant: Variant) -> bool:
    """Short-circuiting admissibility check; agrees with validate() == []."""
    _check_identity(g, f)
    for v in g.vertices:
        if neighborhood_sum(g, f, v, variant) < 1:
            return False
        if f[v] == -1 and not any(f[u] == 2 for u in g.neighbors(v)):
            return False
    return True


# Text format --------------------------------------------------------------

def format_labeling(f: LabelFunction, variant: Variant,
                    source: Optional[str] = None) -> str:
    header = f"# family={f.family_tag} n={f.n} variant={variant.value}"
    if source:
        header += f" source={source}"
    lines = [header]
    for v in sorted(f.assignment):
        lines.append(f"{v.name} {f.assignment[v]}")
    return "\n".join(lines) + "\n"


def parse_labeling(text: str) -> Tuple[LabelFunction, Variant, Optional[str]]:
    """Parse the labeling text format.

    Rejects duplicate vertices, label values outside {-1, 1, 2} (in
    particular 0), and, once matched against a graph, omissions.
    """
    from .families import _parse_header

    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("empty labeling input")
    header = _parse_header(lines[0], ("family", "n", "variant"))
    try:
        n = int(header["n"])
    except ValueError:
        raise DomainError(f"bad n in header: {header['n']!r}") from None
    variant = Variant.from_tag(header["variant"])

    assignment: Dict[VertexId, int] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise DomainError(f"bad labeling line {ln!r}")
        v = VertexId.parse(parts[0])
        try:
            value = int(parts[1])
        except ValueError:
            raise DomainError(f"bad label in line {ln!r}") from None
        if value not in LABELS:
            raise DomainError(f"label {value} at {v.name} is not in {LABELS}")
        if v in assignment:
            raise DomainError(f"duplicate label line for {v.name}")
        assignment[v] = value

    f = LabelFunction(header["family"], n, assignment)
    return f, variant, header.get("source")


def all_constant(g, value: int) -> LabelFunction:
    """Constant labeling, mostly useful in tests and as a trivial upper bound."""
    if value not in LABELS:
        raise DomainError(f"label {value} is not in {LABELS}")
    return LabelFunction(g.family_tag, g.n, {v: value for v in g.vertices})
