"""Generators for the six convex-polytope graph families.

Each family lives on 3 or 4 concentric cyclic rows of vertices (classes
``a``, ``b``, ``c``, ``d``), n vertices per row, with all edges joining
columns at cyclic distance <= 1.  That band structure is what the profile
solver relies on, so the generator asserts it.

Column indices are always reduced modulo n.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .errors import DomainError, InternalConsistencyError

MIN_N = 5

CLASSES = "abcd"


class FamilyKind(enum.Enum):
    """The six supported families, tagged as they appear on the CLI."""

    AN = "An"
    RN = "Rn"
    SN = "Sn"
    TN = "Tn"
    QN = "Qn"
    TN2P = "Tn2p"

    @property
    def rows(self) -> int:
        return 3 if self in (FamilyKind.AN, FamilyKind.RN) else 4

    @property
    def classes(self) -> str:
        return CLASSES[: self.rows]

    @classmethod
    def from_tag(cls, tag: str) -> "FamilyKind":
        for member in cls:
            if member.value == tag:
                return member
        raise DomainError(f"unknown family tag {tag!r}; expected one of "
                          f"{[m.value for m in cls]}")


@dataclass(frozen=True, order=True)
class VertexId:
    """A vertex, addressed by row class and column index.

    Ordering is canonical: class a < b < c < d, then index ascending.
    """

    klass: str
    index: int

    def __post_init__(self):
        if self.klass not in CLASSES:
            raise DomainError(f"vertex class must be one of {CLASSES!r}, got {self.klass!r}")
        if self.index < 0:
            raise DomainError("vertex index must be non-negative (store it reduced mod n)")

    @property
    def name(self) -> str:
        return f"{self.klass}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "VertexId":
        m = re.fullmatch(r"([a-d])(\d+)", text)
        if m is None:
            raise DomainError(f"bad vertex name {text!r}; expected e.g. a0, b12")
        return cls(m.group(1), int(m.group(2)))


# Neighborhoods written as (class, column offset) pairs, offsets in {-1, 0, +1}.
# Transcribed from the per-vertex adjacency descriptions of each family; the
# generator cross-checks symmetry and the per-class degree table below, and the
# test suite re-derives the same graphs from the edge-orbit form independently.
_NEIGHBOR_OFFSETS: Dict[FamilyKind, Dict[str, Tuple[Tuple[str, int], ...]]] = {
    FamilyKind.AN: {
        "a": (("a", -1), ("a", 1), ("b", -1), ("b", 0)),
        "b": (("a", 0), ("a", 1), ("b", -1), ("b", 1), ("c", -1), ("c", 0)),
        "c": (("b", 0), ("b", 1), ("c", -1), ("c", 1)),
    },
    FamilyKind.RN: {
        "a": (("a", -1), ("a", 1), ("b", -1), ("b", 0)),
        "b": (("a", 0), ("a", 1), ("b", -1), ("b", 1), ("c", 0)),
        "c": (("b", 0), ("c", -1), ("c", 1)),
    },
    # S_n is R_n plus an outer d-row hanging off the c-row.
    FamilyKind.SN: {
        "a": (("a", -1), ("a", 1), ("b", -1), ("b", 0)),
        "b": (("a", 0), ("a", 1), ("b", -1), ("b", 1), ("c", 0)),
        "c": (("b", 0), ("c", -1), ("c", 1), ("d", 0)),
        "d": (("c", 0), ("d", -1), ("d", 1)),
    },
    FamilyKind.TN: {
        "a": (("a", -1), ("a", 1), ("b", -1), ("b", 0)),
        "b": (("a", 0), ("a", 1), ("b", -1), ("b", 1), ("c", 0)),
        "c": (("b", 0), ("c", -1), ("c", 1), ("d", 0), ("d", 1)),
        "d": (("c", -1), ("c", 0), ("d", -1), ("d", 1)),
    },
    FamilyKind.QN: {
        "a": (("a", -1), ("a", 1), ("b", 0)),
        "b": (("a", 0), ("b", -1), ("b", 1), ("c", -1), ("c", 0)),
        "c": (("b", 0), ("b", 1), ("d", 0)),
        "d": (("c", 0), ("d", -1), ("d", 1)),
    },
    FamilyKind.TN2P: {
        "a": (("a", -1), ("a", 1), ("b", -1), ("b", 0)),
        "b": (("a", 0), ("a", 1), ("b", -1), ("b", 1), ("c", -1), ("c", 0)),
        "c": (("b", 0), ("b", 1), ("d", 0)),
        "d": (("c", 0), ("d", -1), ("d", 1)),
    },
}

DEGREE_TABLE: Dict[FamilyKind, Dict[str, int]] = {
    fam: {k: len(offs) for k, offs in table.items()}
    for fam, table in _NEIGHBOR_OFFSETS.items()
}

EDGE_ORBITS: Dict[FamilyKind, int] = {
    fam: sum(DEGREE_TABLE[fam].values()) // 2 for fam in FamilyKind
}


class PolytopeGraph:
    """Immutable simple graph for one (family, n) instance.

    Construction goes through :func:`generate`; after that the object is a
    read-only value safe to share between threads.
    """

    def __init__(self, family: FamilyKind, n: int,
                 adjacency: Dict[VertexId, Tuple[VertexId, ...]]):
        self._family = family
        self._n = n
        self._adj = adjacency
        self._vertices = tuple(sorted(adjacency))

    @property
    def family(self) -> FamilyKind:
        return self._family

    @property
    def family_tag(self) -> str:
        return self._family.value

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def vertex(self, klass: str, index: int) -> VertexId:
        return VertexId(klass, index % self._n)

    def has_vertex(self, v: VertexId) -> bool:
        return v in self._adj

    def neighbors(self, v: VertexId) -> Tuple[VertexId, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise DomainError(f"vertex {v.name} is not in {self.family_tag} n={self._n}") from None

    def closed_neighborhood(self, v: VertexId) -> frozenset:
        return frozenset(self.neighbors(v)) | {v}

    def degree(self, v: VertexId) -> int:
        return len(self.neighbors(v))

    def edges(self) -> List[Tuple[VertexId, VertexId]]:
        """All edges as canonically ordered pairs, sorted."""
        out = []
        for u in self._vertices:
            for w in self._adj[u]:
                if u < w:
                    out.append((u, w))
        out.sort()
        return out

    def __repr__(self):
        return f"PolytopeGraph({self.family_tag}, n={self._n})"


def generate(family: FamilyKind, n: int) -> PolytopeGraph:
    """Build the (family, n) polytope graph.

    Requires n >= 5: below that the cyclic wrap-around can merge edge
    orbits, which would break the per-class degree table.
    """
    if not isinstance(family, FamilyKind):
        family = FamilyKind.from_tag(str(family))
    if n < MIN_N:
        raise DomainError(f"n below minimum {MIN_N} (got {n})")

    offsets = _NEIGHBOR_OFFSETS[family]
    adjacency: Dict[VertexId, Tuple[VertexId, ...]] = {}
    for klass in family.classes:
        for i in range(n):
            nbrs = [VertexId(k2, (i + d) % n) for (k2, d) in offsets[klass]]
            if len(set(nbrs)) != len(nbrs):
                raise InternalConsistencyError(
                    f"wrap-around collision at {klass}{i} in {family.value} n={n}")
            adjacency[VertexId(klass, i)] = tuple(sorted(nbrs))

    # Symmetry self-check: u in N(v) iff v in N(u).
    for v, nbrs in adjacency.items():
        for u in nbrs:
            if v not in adjacency[u]:
                raise InternalConsistencyError(
                    f"asymmetric adjacency {v.name}->{u.name} in {family.value}")

    return PolytopeGraph(family, n, adjacency)


def closed_neighborhood(g: PolytopeGraph, v: VertexId) -> frozenset:
    """N[v] = N(v) union {v}."""
    return g.closed_neighborhood(v)


def class_sum_coefficients(g, variant) -> Dict[str, Dict[str, int]]:
    """Per-class neighborhood composition counts.

    entry[X][Y] is the number of class-Y vertices in the closed (SRD) or
    open (STRD) neighborhood of any class-X vertex.  Summing the per-vertex
    domination condition over all class-X vertices yields the aggregated
    inequality sum_Y entry[X][Y] * f(Y-row) >= n, which is what the
    lower-bound machinery consumes.

    The count must be identical for every representative of the class; a
    mismatch means the generator is broken, not the caller.
    """
    from .labeling import Variant  # local import to avoid a cycle

    if not isinstance(variant, Variant):
        variant = Variant.from_tag(str(variant))
    closed = variant is Variant.SRD
    classes = g.family.classes
    table: Dict[str, Dict[str, int]] = {}
    for klass in classes:
        reference = None
        for i in range(g.n):
            v = g.vertex(klass, i)
            hood = list(g.neighbors(v))
            if closed:
                hood.append(v)
            counts = {k2: 0 for k2 in classes}
            for u in hood:
                counts[u.klass] += 1
            if reference is None:
                reference = counts
            elif counts != reference:
                raise InternalConsistencyError(
                    f"non-uniform neighborhood composition in class {klass} "
                    f"of {g.family_tag} n={g.n}: {counts} vs {reference}")
        table[klass] = reference
    return table


# Text formats -----------------------------------------------------------

def to_edgelist(g: PolytopeGraph) -> str:
    lines = [f"# family={g.family_tag} n={g.n}"]
    for u, w in g.edges():
        lines.append(f"{u.name} {w.name}")
    return "\n".join(lines) + "\n"


def to_dot(g: PolytopeGraph) -> str:
    lines = [f"graph {g.family_tag}_{g.n} {{"]
    for v in g.vertices:
        lines.append(f"  {v.name};")
    for u, w in g.edges():
        lines.append(f"  {u.name} -- {w.name};")
    lines.append("}")
    return "\n".join(lines) + "\n"


class EdgeListGraph:
    """A graph parsed back from the edge-list text format.

    Quacks like :class:`PolytopeGraph` where the verification path needs it
    (vertices, neighbors, identity header).  No structural invariants are
    promised for externally supplied lists.
    """

    def __init__(self, family_tag: str, n: int,
                 adjacency: Dict[VertexId, Tuple[VertexId, ...]]):
        self.family_tag = family_tag
        self.n = n
        self._adj = adjacency
        self.vertices = tuple(sorted(adjacency))

    def neighbors(self, v: VertexId) -> Tuple[VertexId, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise DomainError(f"vertex {v.name} is not in the parsed graph") from None

    def has_vertex(self, v: VertexId) -> bool:
        return v in self._adj

    def closed_neighborhood(self, v: VertexId) -> frozenset:
        return frozenset(self.neighbors(v)) | {v}

    def degree(self, v: VertexId) -> int:
        return len(self.neighbors(v))

    def edges(self) -> List[Tuple[VertexId, VertexId]]:
        out = []
        for u in self.vertices:
            for w in self._adj[u]:
                if u < w:
                    out.append((u, w))
        out.sort()
        return out


def _parse_header(line: str, expected_keys: Iterable[str]) -> Dict[str, str]:
    if not line.startswith("#"):
        raise DomainError("missing header line (expected '# key=value ...')")
    fields: Dict[str, str] = {}
    for token in line[1:].split():
        if "=" not in token:
            raise DomainError(f"bad header token {token!r}")
        key, value = token.split("=", 1)
        fields[key] = value
    for key in expected_keys:
        if key not in fields:
            raise DomainError(f"header is missing {key}=")
    return fields


def parse_edgelist(text: str) -> EdgeListGraph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("empty edge-list input")
    header = _parse_header(lines[0], ("family", "n"))
    try:
        n = int(header["n"])
    except ValueError:
        raise DomainError(f"bad n in header: {header['n']!r}") from None

    adjacency: Dict[VertexId, set] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise DomainError(f"bad edge line {ln!r}")
        u, w = VertexId.parse(parts[0]), VertexId.parse(parts[1])
        if u == w:
            raise DomainError(f"self-loop {ln!r} not allowed")
        adjacency.setdefault(u, set()).add(w)
        adjacency.setdefault(w, set()).add(u)
    frozen = {v: tuple(sorted(nbrs)) for v, nbrs in adjacency.items()}
    return EdgeListGraph(header["family"], n, frozen)
