"""Shared helpers for the test suite."""

from __future__ import annotations

import random

from polydom.families import FamilyKind, generate
from polydom.labeling import LabelFunction, Variant, is_admissible


class ShuffledGraph:
    """View of a graph with randomized iteration order, same semantics."""

    def __init__(self, g, seed: int):
        rng = random.Random(seed)
        self._g = g
        self.family_tag = g.family_tag
        self.n = g.n
        vs = list(g.vertices)
        rng.shuffle(vs)
        self.vertices = tuple(vs)
        self._nbrs = {}
        for v in g.vertices:
            nbrs = list(g.neighbors(v))
            rng.shuffle(nbrs)
            self._nbrs[v] = tuple(nbrs)

    def neighbors(self, v):
        return self._nbrs[v]

    def degree(self, v):
        return len(self._nbrs[v])


def random_labeling(g, rng: random.Random) -> LabelFunction:
    return LabelFunction(g.family_tag, g.n,
                         {v: rng.choice((-1, 1, 2)) for v in g.vertices})


def random_admissible(family: FamilyKind, variant: Variant, n: int,
                      rng: random.Random) -> tuple:
    """An admissible labeling with some randomness.

    Starts from the all-ones labeling (admissible on every family: minimum
    degree is 3, so open sums are at least 3) and applies random monotone
    upgrades 1 -> 2 and downgrades guarded by a re-check, keeping the result
    admissible while visiting varied label patterns.
    """
    g = generate(family, n)
    labels = {v: 1 for v in g.vertices}
    vs = list(g.vertices)
    for v in rng.sample(vs, k=len(vs) // 3):
        labels[v] = 2
    # Random downgrade attempts to -1, kept only if still admissible.
    for v in rng.sample(vs, k=len(vs) // 2):
        old = labels[v]
        labels[v] = -1
        f = LabelFunction(g.family_tag, g.n, dict(labels))
        if not is_admissible(g, f, variant):
            labels[v] = old
    return g, LabelFunction(g.family_tag, g.n, labels)


ALL_FAMILIES = tuple(FamilyKind)
ALL_VARIANTS = (Variant.SRD, Variant.STRD)
