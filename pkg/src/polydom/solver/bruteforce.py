"""Pruned backtracking enumeration, the independent oracle solver.

Vertices are assigned column by column (a_0, b_0, c_0, d_0, a_1, ...) so
that neighborhoods complete quickly and the local prunes bite early.  All
three pruning rules are admissible: they only cut branches that cannot
contain an optimal completion, so an exhausted search returns the exact
minimum.

  (a) a vertex whose neighborhood sum cannot reach 1 even if every
      unassigned neighbor takes 2 kills the branch;
  (b) a -1 vertex whose open neighborhood is fully assigned without a 2
      kills the branch;
  (c) once an incumbent exists, partial weight minus the number of
      unassigned vertices (each contributes at least -1) must stay below it.

The node budget turns an over-long search into an explicit "inconclusive"
result, never a wrong number.
"""

from __future__ import annotations

import time

import numpy as np
from numba import njit

from ..families import PolytopeGraph, VertexId
from ..labeling import LabelFunction, Variant, validate
from ..errors import InternalConsistencyError
from .result import SolveResult

DEFAULT_NODE_BUDGET = 10 ** 9

_BIG = 2 ** 30


@njit(cache=True)
def _search(nbr_ptr, nbr_idx, closed_sums, node_budget):
    n_vertices = nbr_ptr.size - 1
    try_labels = (-1, 1, 2)

    label = np.zeros(n_vertices, dtype=np.int8)
    sum_asg = np.zeros(n_vertices, dtype=np.int32)
    open_unassigned = np.empty(n_vertices, dtype=np.int32)
    has2 = np.zeros(n_vertices, dtype=np.int32)
    for v in range(n_vertices):
        open_unassigned[v] = nbr_ptr[v + 1] - nbr_ptr[v]

    best_w = _BIG
    best_labels = np.zeros(n_vertices, dtype=np.int8)
    next_choice = np.zeros(n_vertices, dtype=np.int8)

    partial_w = 0
    nodes = 0
    depth = 0
    while depth >= 0:
        if depth == n_vertices:
            # Complete and, by the incremental checks, admissible.
            if partial_w < best_w:
                best_w = partial_w
                best_labels[:] = label
            depth -= 1
            val = label[depth]
            label[depth] = 0
            partial_w -= val
            for t in range(nbr_ptr[depth], nbr_ptr[depth + 1]):
                u = nbr_idx[t]
                sum_asg[u] -= val
                open_unassigned[u] += 1
                if val == 2:
                    has2[u] -= 1
            if closed_sums:
                sum_asg[depth] -= val
            continue

        choice = next_choice[depth]
        if choice == 3:
            next_choice[depth] = 0
            depth -= 1
            if depth >= 0:
                val = label[depth]
                label[depth] = 0
                partial_w -= val
                for t in range(nbr_ptr[depth], nbr_ptr[depth + 1]):
                    u = nbr_idx[t]
                    sum_asg[u] -= val
                    open_unassigned[u] += 1
                    if val == 2:
                        has2[u] -= 1
                if closed_sums:
                    sum_asg[depth] -= val
            continue

        next_choice[depth] = choice + 1
        val = try_labels[choice]
        nodes += 1
        if nodes > node_budget:
            return _BIG, best_labels, nodes, False

        # Tentatively assign.
        label[depth] = val
        partial_w += val
        for t in range(nbr_ptr[depth], nbr_ptr[depth + 1]):
            u = nbr_idx[t]
            sum_asg[u] += val
            open_unassigned[u] -= 1
            if val == 2:
                has2[u] += 1
        if closed_sums:
            sum_asg[depth] += val

        ok = True
        if best_w < _BIG and partial_w - (n_vertices - depth - 1) >= best_w:
            ok = False
        if ok:
            lo = nbr_ptr[depth]
            hi = nbr_ptr[depth + 1]
            for t in range(lo, hi + 1):
                v = depth if t == hi else nbr_idx[t]
                potential = open_unassigned[v]
                if closed_sums and label[v] == 0:
                    potential += 1
                if sum_asg[v] + 2 * potential < 1:
                    ok = False
                    break
                if label[v] == -1 and has2[v] == 0 and open_unassigned[v] == 0:
                    ok = False
                    break

        if ok:
            depth += 1
        else:
            label[depth] = 0
            partial_w -= val
            for t in range(nbr_ptr[depth], nbr_ptr[depth + 1]):
                u = nbr_idx[t]
                sum_asg[u] -= val
                open_unassigned[u] += 1
                if val == 2:
                    has2[u] -= 1
            if closed_sums:
                sum_asg[depth] -= val

    return best_w, best_labels, nodes, True


def _column_major_csr(g: PolytopeGraph):
    classes = g.family.classes
    rows = len(classes)
    n_vertices = rows * g.n

    def vid(v: VertexId) -> int:
        return v.index * rows + classes.index(v.klass)

    ptr = np.zeros(n_vertices + 1, dtype=np.int64)
    order = sorted(g.vertices, key=vid)
    for v in order:
        ptr[vid(v) + 1] = g.degree(v)
    np.cumsum(ptr, out=ptr)
    idx = np.empty(ptr[-1], dtype=np.int32)
    for v in order:
        base = ptr[vid(v)]
        for off, u in enumerate(sorted(g.neighbors(v), key=vid)):
            idx[base + off] = vid(u)
    return ptr, idx


def solve_bruteforce(g: PolytopeGraph, variant: Variant,
                     budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Exact minimum by pruned total enumeration; intended for n <= 6."""
    started = time.monotonic()
    ptr, idx = _column_major_csr(g)
    best_w, best_labels, nodes, completed = _search(
        ptr, idx, variant is Variant.SRD, budget)
    elapsed = time.monotonic() - started

    if not completed:
        return SolveResult(gamma=None, witness=None, method="BruteForce",
                           stats={"nodes": int(nodes)}, elapsed=elapsed,
                           status="inconclusive")
    if best_w >= _BIG:
        raise InternalConsistencyError(
            f"no admissible labeling exists for {g.family_tag} n={g.n} {variant.value}")

    classes = g.family.classes
    rows = len(classes)
    assignment = {}
    for col in range(g.n):
        for k, klass in enumerate(classes):
            assignment[VertexId(klass, col)] = int(best_labels[col * rows + k])
    witness = LabelFunction(g.family_tag, g.n, assignment)
    if witness.weight() != best_w or validate(g, witness, variant):
        raise InternalConsistencyError("brute-force witness failed validation")

    return SolveResult(gamma=int(best_w), witness=witness, method="BruteForce",
                       stats={"nodes": int(nodes)}, elapsed=elapsed)
