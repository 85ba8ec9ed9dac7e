"""Exact cyclic profile dynamic program over column states.

The chain state is the label pair of two consecutive columns.  Choosing the
next column finalizes all checks for the middle one, since its closed
neighborhood sits inside the three-column window.  Cyclic closure is
handled by seeding the chain with every feasible (column 0, column 1) pair
and finishing each seed by checking columns n-1 and 0 against the wrap.

Two soundness-preserving accelerations:

* All seeds advance simultaneously: the DP value table is a matrix indexed
  by (chain state, seed), and one column step is a min-plus relaxation over
  the precomputed valid-predecessor lists.
* Column 0 may be restricted to low-weight column states.  Some optimal
  labeling has a column of weight at most floor(UB / n) for any proven
  upper bound UB (average argument), and rotating it to position 0 is an
  automorphism of every family, so the restricted seed set still contains
  an optimal solution.

The witness is reconstructed for the winning seed only, by a backward value
pass and a greedy forward walk that always picks the numerically smallest
column state, which makes the reported labeling deterministic.
"""

from __future__ import annotations

import os
import time
from typing import List, Optional

import numpy as np
from numba import njit, prange

from ..errors import DomainError, InternalConsistencyError
from ..families import PolytopeGraph, VertexId
from ..labeling import LabelFunction, Variant, validate
from .result import SolveResult
from .tables import TransitionTables, check_band_structure, get_tables

INF16 = 30000
INF32 = 2 ** 30
CUT = 20000


def _apply_thread_cap() -> None:
    import numba

    env = os.environ.get("POLYDOM_THREADS")
    if not env:
        return
    try:
        requested = int(env)
    except ValueError:
        raise DomainError(f"POLYDOM_THREADS must be an integer, got {env!r}") from None
    limit = numba.config.NUMBA_NUM_THREADS
    numba.set_num_threads(max(1, min(requested, limit)))


@njit(parallel=True, cache=True)
def _relax_step(D, ND, pair_ptr, pair_x, col_weight, L):
    """One column transition: ND[(y,z)] = min_x valid D[(x,y)] + w(z)."""
    npairs = ND.shape[0]
    ns = D.shape[1]
    for p in prange(npairs):
        y = p // L
        z = p - y * L
        lo = pair_ptr[p]
        hi = pair_ptr[p + 1]
        out = ND[p]
        if lo == hi:
            for s in range(ns):
                out[s] = INF16
            continue
        src = D[pair_x[lo] * L + y]
        for s in range(ns):
            out[s] = src[s]
        for t in range(lo + 1, hi):
            src = D[pair_x[t] * L + y]
            for s in range(ns):
                v = src[s]
                if v < out[s]:
                    out[s] = v
        wz = col_weight[z]
        for s in range(ns):
            if out[s] < CUT:
                out[s] = out[s] + wz
            else:
                out[s] = INF16


def _seed_columns(tables: TransitionTables, n: int, ub: int) -> np.ndarray:
    cap = ub // n  # floor; sound for negative UB too
    allowed = np.nonzero(tables.col_weight <= cap)[0].astype(np.int64)
    if allowed.size == 0:
        # Degenerate cap (cannot happen for a true UB, but stay safe).
        allowed = np.arange(tables.n_states, dtype=np.int64)
    return allowed


def _closure_minima(D: np.ndarray, tables: TransitionTables,
                    allowed_c0: np.ndarray) -> np.ndarray:
    """Per-seed optimum after checking the two wrap-around columns."""
    L = tables.n_states
    S = L * L
    valid3 = tables.valid3
    y_of_state = (np.arange(S) % L)
    out = np.empty(allowed_c0.size * L, dtype=np.int32)
    for i, c0 in enumerate(allowed_c0):
        # column n-1 check: valid3[x, y, c0]; column 0 check: valid3[y, c0, c1]
        m1 = valid3[:, :, c0].reshape(S)
        m2 = valid3[:, c0, :][y_of_state, :]          # (S, L) over c1
        block = D[:, i * L:(i + 1) * L].astype(np.int32)
        block = np.where(m1[:, None] & m2, block, INF32)
        out[i * L:(i + 1) * L] = block.min(axis=0)
    return out


def _reconstruct_witness(g: PolytopeGraph, tables: TransitionTables,
                         c0: int, c1: int, gamma: int) -> LabelFunction:
    n = g.n
    L = tables.n_states
    w32 = tables.col_weight.astype(np.int32)
    valid3 = tables.valid3

    # Backward values B[j][(x, y)]: cheapest completion of columns j+1..n-1
    # plus the wrap checks, for the fixed seed (c0, c1).
    blist: List[Optional[np.ndarray]] = [None] * n
    mask_end = valid3[:, :, c0] & valid3[:, c0, c1][None, :]
    blist[n - 1] = np.where(mask_end, 0, INF32).astype(np.int32)
    for j in range(n - 2, 0, -1):
        tmp = w32[None, :] + blist[j + 1]             # (y, z)
        stepped = np.where(valid3, tmp[None, :, :], INF32)
        blist[j] = stepped.min(axis=2).astype(np.int32)

    expected = int(w32[c0] + w32[c1] + blist[1][c0, c1])
    if expected != gamma:
        raise InternalConsistencyError(
            f"witness reconstruction mismatch: {expected} != {gamma}")

    cols = [c0, c1]
    x, y = c0, c1
    for j in range(1, n - 1):
        row = np.where(valid3[x, y, :], w32 + blist[j + 1][y, :], INF32)
        target = int(blist[j][x, y])
        candidates = np.nonzero(row == target)[0]
        if candidates.size == 0:
            raise InternalConsistencyError("witness walk lost the optimal path")
        z = int(candidates[0])
        cols.append(z)
        x, y = y, z

    classes = g.family.classes
    assignment = {}
    for i, state in enumerate(cols):
        for k, klass in enumerate(classes):
            assignment[VertexId(klass, i)] = int(tables.state_labels[state, k])
    return LabelFunction(g.family_tag, n, assignment)


def solve_profile_dp(g: PolytopeGraph, variant: Variant) -> SolveResult:
    """Exact gamma via the cyclic profile DP; agrees with brute force."""
    from ..certificates import upper_bound_hint

    started = time.monotonic()
    check_band_structure(g)
    _apply_thread_cap()

    tables = get_tables(g.family, variant)
    n = g.n
    L = tables.n_states
    S = L * L

    # Proven upper bound: theorem certificate when available, else the
    # all-ones labeling (admissible here because minimum degree >= 3).
    ub = g.vertex_count
    hint = upper_bound_hint(g.family, variant, n)
    if hint is not None:
        ub = min(ub, hint)

    allowed_c0 = _seed_columns(tables, n, ub)
    ns = int(allowed_c0.size) * L

    D = np.full((S, ns), INF16, dtype=np.int16)
    for i, c0 in enumerate(allowed_c0):
        for c1 in range(L):
            D[c0 * L + c1, i * L + c1] = tables.col_weight[c0] + tables.col_weight[c1]

    states_touched = int(np.count_nonzero(D < CUT))
    ND = np.empty_like(D)
    for _ in range(n - 2):
        _relax_step(D, ND, tables.pair_ptr, tables.pair_x, tables.col_weight, L)
        D, ND = ND, D
        states_touched += int(np.count_nonzero(D < CUT))

    per_seed = _closure_minima(D, tables, allowed_c0)
    best = int(per_seed.min())
    if best >= INF32:
        raise InternalConsistencyError(
            f"no admissible labeling found for {g.family_tag} n={n} {variant.value}")

    seed_index = int(np.argmin(per_seed))  # first optimum: lexicographic seed
    c0 = int(allowed_c0[seed_index // L])
    c1 = seed_index % L

    witness = _reconstruct_witness(g, tables, c0, c1, best)
    if witness.weight() != best or validate(g, witness, variant):
        raise InternalConsistencyError("witness failed the independent validator")

    return SolveResult(
        gamma=best,
        witness=witness,
        method="ProfileDP",
        stats={"dp_states": states_touched, "seeds": ns},
        elapsed=time.monotonic() - started,
    )
