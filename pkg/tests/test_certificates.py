"""Certificate constructions: admissibility, claimed weights, per-vertex sums."""

import pytest

from polydom.certificates import (
    cert_An_srd,
    cert_Qn_srd,
    cert_Rn_srd,
    cert_Sn_strd,
    cert_Tn_srd,
    cert_Tn_strd,
    cert_TnDoublePrime_srd,
    certificate_for,
    covered_combinations,
    is_covered,
    tn2p_upper_formula,
    upper_bound_hint,
)
from polydom.errors import DomainError
from polydom.families import FamilyKind, generate
from polydom.labeling import Variant, neighborhood_sum, validate, weight

BUILDERS = [
    (cert_An_srd, 5, lambda n: 0),
    (cert_Rn_srd, 5, lambda n: 2 * (n // 3) + (0 if n % 3 == 0 else 2)),
    (cert_Sn_strd, 5, lambda n: n),
    (cert_Tn_strd, 5, lambda n: n if n % 2 == 0 else n + 1),
    (cert_Tn_srd, 5, lambda n: n),
    (cert_Qn_srd, 12, lambda n: n),
    (cert_TnDoublePrime_srd, 5, tn2p_upper_formula),
]


@pytest.mark.parametrize("builder,lo,formula", BUILDERS,
                         ids=[b[0].__name__ for b in BUILDERS])
def test_admissible_and_weight_over_full_domain(builder, lo, formula):
    for n in range(lo, 61):
        cert = builder(n)
        assert cert.claimed_weight == formula(n)
        # Certificate constructors self-verify; re-check independently anyway.
        g = generate(FamilyKind.from_tag(cert.family_tag), n)
        assert validate(g, cert.labeling, cert.variant) == []
        assert weight(cert.labeling) == cert.claimed_weight


@pytest.mark.parametrize("builder,lo", [(b, lo) for b, lo, _ in BUILDERS],
                         ids=[b[0].__name__ for b in BUILDERS])
def test_below_domain_rejected(builder, lo):
    with pytest.raises(DomainError, match=f"minimum {lo}"):
        builder(lo - 1)


def test_an_certificate_shape():
    cert = cert_An_srd(5)
    sizes = cert.labeling.partition_sizes()
    assert sizes == {-1: 10, 1: 0, 2: 5}
    assert cert.claimed_weight == 0


def test_rn_certificate_sums():
    n = 8
    g = generate(FamilyKind.RN, n)
    f = cert_Rn_srd(n).labeling
    for j in range(0, n, 3):
        assert neighborhood_sum(g, f, g.vertex("c", j), Variant.SRD) == 1
    assert cert_Rn_srd(8).claimed_weight == 6
    assert cert_Rn_srd(7).claimed_weight == 6
    assert cert_Rn_srd(6).claimed_weight == 4


def test_sn_certificate_sums():
    for n in (6, 7):
        g = generate(FamilyKind.SN, n)
        f = cert_Sn_strd(n).labeling
        for i in range(n):
            assert neighborhood_sum(g, f, g.vertex("b", i), Variant.STRD) == 1
            assert neighborhood_sum(g, f, g.vertex("a", i), Variant.STRD) == 2


def test_tn_strd_certificate_sums_even():
    n = 8
    g = generate(FamilyKind.TN, n)
    f = cert_Tn_strd(n).labeling
    for i in range(n // 2):
        assert neighborhood_sum(g, f, g.vertex("b", 2 * i + 1), Variant.STRD) == 4
    assert cert_Tn_strd(6).claimed_weight == 6
    assert cert_Tn_strd(7).claimed_weight == 8


def test_tn_srd_certificate_sums():
    for n in (6, 7):
        g = generate(FamilyKind.TN, n)
        f = cert_Tn_srd(n).labeling
        for i in range(n):
            assert neighborhood_sum(g, f, g.vertex("c", i), Variant.SRD) == 3
            assert neighborhood_sum(g, f, g.vertex("d", i), Variant.SRD) == 1
    assert cert_Tn_srd(5).claimed_weight == 5


def test_qn_certificate_residue_sums_n12():
    n = 12
    g = generate(FamilyKind.QN, n)
    f = cert_Qn_srd(n).labeling
    for i in range(n):
        r = i % 3
        assert neighborhood_sum(g, f, g.vertex("a", i), Variant.SRD) == (2 if r == 1 else 1)
        assert neighborhood_sum(g, f, g.vertex("b", i), Variant.SRD) == (4 if r == 0 else 1)
        assert neighborhood_sum(g, f, g.vertex("c", i), Variant.SRD) == (1 if r == 1 else 3)
        assert neighborhood_sum(g, f, g.vertex("d", i), Variant.SRD) == 1


def _coverage(g, f, v):
    """V_2 intersected with the open neighborhood of v."""
    return {u for u in g.neighbors(v) if f[u] == 2}


@pytest.mark.parametrize("n", [13, 16])
def test_qn_coverage_table_3k_plus_1(n):
    k = n // 3
    g = generate(FamilyKind.QN, n)
    f = cert_Qn_srd(n).labeling
    expected = {
        ("a", 3 * k - 4): {("a", 3 * k - 3)},
        ("c", 3 * k - 4): {("d", 3 * k - 4)},
        ("a", 3 * k - 2): {("a", 3 * k - 3)},
        ("a", 3 * k): {("a", 0)},
        ("b", 3 * k - 2): {("b", 3 * k - 1)},
        ("b", 3 * k): {("b", 3 * k - 1)},
        ("c", 3 * k - 3): {("d", 3 * k - 3)},
        ("d", 3 * k - 2): {("d", 3 * k - 3)},
        ("c", 3 * k): {("d", 3 * k)},
        ("d", 3 * k - 1): {("d", 3 * k)},
    }
    for (klass, i), witnesses in expected.items():
        v = g.vertex(klass, i)
        assert f[v] == -1
        assert _coverage(g, f, v) == {g.vertex(k2, j) for k2, j in witnesses}


@pytest.mark.parametrize("n", [14, 17])
def test_qn_coverage_table_3k_plus_2(n):
    k = n // 3
    g = generate(FamilyKind.QN, n)
    f = cert_Qn_srd(n).labeling
    expected = {
        ("a", 3 * k - 6): {("a", 3 * k - 5)},
        ("b", 3 * k - 6): {("b", 3 * k - 7)},
        ("c", 3 * k - 6): {("d", 3 * k - 6)},
        ("a", 3 * k - 4): {("a", 3 * k - 5), ("b", 3 * k - 4)},
        ("c", 3 * k - 5): {("b", 3 * k - 4)},
        ("c", 3 * k - 4): {("b", 3 * k - 4)},
        ("c", 3 * k - 3): {("d", 3 * k - 3)},
        ("d", 3 * k - 4): {("d", 3 * k - 3)},
        ("a", 3 * k - 1): {("a", 3 * k - 2)},
        ("a", 3 * k + 1): {("a", 0)},
        ("b", 3 * k - 1): {("b", 3 * k)},
        ("b", 3 * k + 1): {("b", 3 * k)},
        ("c", 3 * k - 2): {("d", 3 * k - 2)},
        ("d", 3 * k - 1): {("d", 3 * k - 2)},
        ("c", 3 * k + 1): {("d", 3 * k + 1)},
        ("d", 3 * k): {("d", 3 * k + 1)},
    }
    for (klass, i), witnesses in expected.items():
        v = g.vertex(klass, i)
        assert f[v] == -1
        assert _coverage(g, f, v) == {g.vertex(k2, j) for k2, j in witnesses}


def test_tn2p_certificate_sums():
    for n in (9, 10, 11):
        g = generate(FamilyKind.TN2P, n)
        f = cert_TnDoublePrime_srd(n).labeling
        per_residue = {0: 5, 1: 4, 2: 2}
        for i in range(n):
            assert neighborhood_sum(g, f, g.vertex("c", i), Variant.SRD) == per_residue[i % 3]
        d0 = neighborhood_sum(g, f, g.vertex("d", 0), Variant.SRD)
        dl = neighborhood_sum(g, f, g.vertex("d", n - 1), Variant.SRD)
        assert d0 == {0: 1, 1: 4, 2: 3}[n % 3]
        assert dl == {0: 1, 1: 2, 2: 4}[n % 3]
        for i in range(1, n - 1):
            s = neighborhood_sum(g, f, g.vertex("d", i), Variant.SRD)
            assert s >= 1
    assert cert_TnDoublePrime_srd(6).claimed_weight == 4
    assert cert_TnDoublePrime_srd(7).claimed_weight == 6
    assert cert_TnDoublePrime_srd(5).claimed_weight == 5


def test_registry_and_hints():
    assert ("An", "srd") in covered_combinations()
    assert ("Qn", "strd") not in covered_combinations()
    cert = certificate_for(FamilyKind.SN, Variant.STRD, 9)
    assert cert.claimed_weight == 9 and cert.source == "Thm3"
    with pytest.raises(DomainError, match="covered combinations"):
        certificate_for(FamilyKind.QN, Variant.STRD, 12)
    with pytest.raises(DomainError):
        certificate_for(FamilyKind.QN, Variant.SRD, 11)

    assert is_covered(FamilyKind.QN, Variant.SRD, 12)
    assert not is_covered(FamilyKind.QN, Variant.SRD, 11)
    assert upper_bound_hint(FamilyKind.QN, Variant.SRD, 11) is None
    for builder, lo, formula in BUILDERS:
        for n in (lo, lo + 1, lo + 7, 30):
            cert = builder(n)
            fam = FamilyKind.from_tag(cert.family_tag)
            assert upper_bound_hint(fam, cert.variant, n) == formula(n)


def test_certificate_source_tags():
    assert cert_Rn_srd(6).source == "Thm2/n=3k"
    assert cert_Rn_srd(7).source == "Thm2/n=3k+1"
    assert cert_Tn_strd(8).source == "Thm4/n=2k"
    assert cert_Qn_srd(14).source == "Thm6/n=3k+2"
