"""Generator tests, cross-checked against an independent edge-orbit oracle."""

import pytest

from polydom.errors import DomainError, InternalConsistencyError
from polydom.families import (
    DEGREE_TABLE,
    FamilyKind,
    VertexId,
    class_sum_coefficients,
    closed_neighborhood,
    generate,
    parse_edgelist,
    to_dot,
    to_edgelist,
)
from polydom.labeling import Variant

# Edge orbits {(k1, i), (k2, i+delta)}, transcribed separately from the
# per-vertex neighbor lists the generator uses.  Two independent readings of
# the same definitions must produce identical graphs.
ORBITS = {
    FamilyKind.AN: [("a", "a", 1), ("b", "b", 1), ("c", "c", 1),
                    ("a", "b", 0), ("b", "c", 0), ("b", "a", 1), ("c", "b", 1)],
    FamilyKind.RN: [("a", "a", 1), ("b", "b", 1), ("c", "c", 1),
                    ("a", "b", 0), ("b", "c", 0), ("b", "a", 1)],
    FamilyKind.SN: [("a", "a", 1), ("b", "b", 1), ("c", "c", 1), ("d", "d", 1),
                    ("a", "b", 0), ("b", "c", 0), ("c", "d", 0), ("b", "a", 1)],
    FamilyKind.TN: [("a", "a", 1), ("b", "b", 1), ("c", "c", 1), ("d", "d", 1),
                    ("a", "b", 0), ("b", "c", 0), ("c", "d", 0),
                    ("b", "a", 1), ("c", "d", 1)],
    FamilyKind.QN: [("a", "a", 1), ("b", "b", 1), ("d", "d", 1),
                    ("a", "b", 0), ("b", "c", 0), ("c", "d", 0), ("c", "b", 1)],
    FamilyKind.TN2P: [("a", "a", 1), ("b", "b", 1), ("d", "d", 1),
                      ("a", "b", 0), ("b", "c", 0), ("c", "d", 0),
                      ("c", "b", 1), ("b", "a", 1)],
}

EXPECTED_EDGE_COUNT = {
    FamilyKind.AN: 7, FamilyKind.RN: 6, FamilyKind.SN: 8,
    FamilyKind.TN: 9, FamilyKind.QN: 7, FamilyKind.TN2P: 8,
}


def orbit_edges(family, n):
    edges = set()
    for k1, k2, delta in ORBITS[family]:
        for i in range(n):
            edges.add(frozenset({(k1, i), (k2, (i + delta) % n)}))
    return edges


@pytest.mark.parametrize("family", list(FamilyKind))
@pytest.mark.parametrize("n", [5, 6, 7, 10, 13])
def test_generator_matches_orbit_oracle(family, n):
    g = generate(family, n)
    got = {frozenset({(u.klass, u.index), (w.klass, w.index)}) for u, w in g.edges()}
    assert got == orbit_edges(family, n)
    assert g.edge_count == EXPECTED_EDGE_COUNT[family] * n


def test_an5_vertex_and_edge_counts():
    g = generate(FamilyKind.AN, 5)
    assert g.vertex_count == 15
    assert g.edge_count == 35
    for klass, want in (("a", 4), ("b", 6), ("c", 4)):
        assert all(g.degree(g.vertex(klass, i)) == want for i in range(5))


def test_rn6_counts():
    g = generate(FamilyKind.RN, 6)
    assert g.vertex_count == 18
    assert g.edge_count == 36


def test_minimum_n_rejected():
    with pytest.raises(DomainError, match="minimum 5"):
        generate(FamilyKind.AN, 4)
    with pytest.raises(DomainError, match="minimum 5"):
        generate(FamilyKind.QN, 0)


def test_closed_neighborhood_an():
    g = generate(FamilyKind.AN, 6)
    got = closed_neighborhood(g, g.vertex("a", 2))
    want = {g.vertex("a", 1), g.vertex("a", 2), g.vertex("a", 3),
            g.vertex("b", 1), g.vertex("b", 2)}
    assert got == want


def test_closed_neighborhood_sn_d0():
    g = generate(FamilyKind.SN, 8)
    got = closed_neighborhood(g, g.vertex("d", 0))
    want = {g.vertex("c", 0), g.vertex("d", 7), g.vertex("d", 0), g.vertex("d", 1)}
    assert got == want


def test_closed_neighborhood_tn_d3():
    g = generate(FamilyKind.TN, 9)
    got = closed_neighborhood(g, g.vertex("d", 3))
    want = {g.vertex("c", 2), g.vertex("c", 3),
            g.vertex("d", 2), g.vertex("d", 3), g.vertex("d", 4)}
    assert got == want


def test_closed_neighborhood_unknown_vertex():
    g = generate(FamilyKind.AN, 6)
    with pytest.raises(DomainError):
        closed_neighborhood(g, VertexId("d", 0))
    with pytest.raises(DomainError):
        closed_neighborhood(g, VertexId("a", 6))  # not reduced mod n


def test_class_sum_rows_an_srd():
    g = generate(FamilyKind.AN, 7)
    table = class_sum_coefficients(g, Variant.SRD)
    assert table["a"] == {"a": 3, "b": 2, "c": 0}


def test_class_sum_rows_tn_strd():
    g = generate(FamilyKind.TN, 7)
    table = class_sum_coefficients(g, Variant.STRD)
    assert table["a"] == {"a": 2, "b": 2, "c": 0, "d": 0}


def test_class_sum_rows_qn_srd_row_d():
    g = generate(FamilyKind.QN, 8)
    table = class_sum_coefficients(g, Variant.SRD)
    assert table["d"] == {"a": 0, "b": 0, "c": 1, "d": 3}


@pytest.mark.parametrize("family", list(FamilyKind))
def test_srd_diagonal_is_strd_plus_one(family):
    g = generate(family, 9)
    srd = class_sum_coefficients(g, Variant.SRD)
    strd = class_sum_coefficients(g, Variant.STRD)
    for klass in family.classes:
        assert srd[klass][klass] == strd[klass][klass] + 1
        for other in family.classes:
            if other != klass:
                assert srd[klass][other] == strd[klass][other]


@pytest.mark.parametrize("family", list(FamilyKind))
@pytest.mark.parametrize("n", [5, 6, 7, 8, 9, 10, 11, 12, 20, 35, 50])
def test_band_structure_and_degree_table(family, n):
    g = generate(family, n)
    for u, w in g.edges():
        assert (w.index - u.index) % n in (0, 1, n - 1)
    for klass, want in DEGREE_TABLE[family].items():
        assert all(g.degree(g.vertex(klass, i)) == want for i in range(n))


def test_generate_is_pure():
    a = generate(FamilyKind.TN2P, 11)
    b = generate(FamilyKind.TN2P, 11)
    assert a.edges() == b.edges()


def test_edgelist_format_and_roundtrip():
    g = generate(FamilyKind.RN, 7)
    text = to_edgelist(g)
    lines = text.split("\n")
    assert lines[0] == "# family=Rn n=7"
    assert text.endswith("\n") and "\r" not in text
    body = [ln for ln in lines[1:] if ln]
    assert len(body) == g.edge_count
    # endpoints in canonical order, lines sorted
    pairs = [tuple(ln.split()) for ln in body]
    parsed_pairs = [(VertexId.parse(u), VertexId.parse(w)) for u, w in pairs]
    assert all(u < w for u, w in parsed_pairs)
    assert parsed_pairs == sorted(parsed_pairs)

    back = parse_edgelist(text)
    assert back.family_tag == "Rn" and back.n == 7
    assert set(back.vertices) == set(g.vertices)
    for v in g.vertices:
        assert set(back.neighbors(v)) == set(g.neighbors(v))


def test_dot_export():
    g = generate(FamilyKind.RN, 5)
    text = to_dot(g)
    assert text.startswith("graph Rn_5 {")
    node_lines = [ln for ln in text.splitlines() if ln.endswith(";") and "--" not in ln]
    assert len(node_lines) == 15
    edge_lines = [ln for ln in text.splitlines() if "--" in ln]
    assert len(edge_lines) == g.edge_count


def test_parse_edgelist_rejects_garbage():
    with pytest.raises(DomainError):
        parse_edgelist("a0 a1\n")          # missing header
    with pytest.raises(DomainError):
        parse_edgelist("# family=An n=5\na0\n")
    with pytest.raises(DomainError):
        parse_edgelist("# family=An n=5\na0 a0\n")
    with pytest.raises(DomainError):
        parse_edgelist("# family=An n=x\na0 a1\n")


def test_vertex_canonical_order():
    vs = [VertexId("b", 0), VertexId("a", 11), VertexId("a", 2), VertexId("d", 1)]
    assert sorted(vs) == [VertexId("a", 2), VertexId("a", 11),
                          VertexId("b", 0), VertexId("d", 1)]


def test_vertex_parse_and_validation():
    assert VertexId.parse("b12") == VertexId("b", 12)
    with pytest.raises(DomainError):
        VertexId.parse("e0")
    with pytest.raises(DomainError):
        VertexId("a", -1)


def test_class_sum_uniformity_guard():
    # A deliberately non-uniform duck graph must trip the consistency error.
    g = generate(FamilyKind.AN, 6)

    class Lopsided:
        family = g.family
        family_tag = g.family_tag
        n = g.n
        vertices = g.vertices

        def neighbors(self, v):
            nbrs = g.neighbors(v)
            if v == g.vertex("a", 0):
                return nbrs[:-1]   # drop one neighbor at a single vertex
            return nbrs

        def vertex(self, klass, i):
            return g.vertex(klass, i)

    with pytest.raises(InternalConsistencyError):
        class_sum_coefficients(Lopsided(), Variant.SRD)
