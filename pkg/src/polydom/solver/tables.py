"""Column-state encoding and transition tables for the profile solver.

A column state packs the labels of one column (3 or 4 vertices) into an
integer in [0, 3^rows), row a in the most significant digit, with digit
order -1 < 1 < 2.  Numeric order on states therefore matches lexicographic
order on label tuples, which the deterministic tie-breaking relies on.

valid3[x, y, z] answers: with columns (i-1, i, i+1) labeled by states
(x, y, z), does every vertex of column i satisfy both admissibility
conditions?  Because all edges stay within one column of each other, a
window of three consecutive columns always contains the full closed
neighborhood of the middle one, so checking each column exactly once
against its window covers the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from ..errors import DomainError
from ..families import FamilyKind, VertexId, generate
from ..labeling import Variant

LABEL_VALUES = (-1, 1, 2)


@dataclass
class TransitionTables:
    family: FamilyKind
    variant: Variant
    rows: int
    n_states: int
    state_labels: np.ndarray   # (L, rows) int8, decoded labels
    col_weight: np.ndarray     # (L,) int16, sum of labels per state
    valid3: np.ndarray         # (L, L, L) bool, indexed [x, y, z]
    pair_ptr: np.ndarray       # CSR over pairs p = y*L + z
    pair_x: np.ndarray         # valid predecessor states x per pair


def encode_column(labels: Tuple[int, ...]) -> int:
    state = 0
    for value in labels:
        state = state * 3 + LABEL_VALUES.index(value)
    return state


def decode_column(state: int, rows: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(rows):
        digits.append(LABEL_VALUES[state % 3])
        state //= 3
    return tuple(reversed(digits))


def check_band_structure(g) -> None:
    """Refuse any graph whose edges span more than one column."""
    n = g.n
    for v in g.vertices:
        for u in g.neighbors(v):
            d = (u.index - v.index) % n
            if d not in (0, 1, n - 1):
                raise DomainError(
                    f"graph violates band structure at edge {v.name}-{u.name}; "
                    "the profile solver only handles generated families")


def _row_offsets(family: FamilyKind) -> List[Tuple[List[int], List[int], List[int]]]:
    """For each row: open-neighborhood row indices in columns (i-1, i, i+1).

    Extracted from a reference instance rather than re-transcribed, so the
    tables agree with the generator by construction.
    """
    ref = generate(family, 7)
    classes = family.classes
    out = []
    for klass in classes:
        v = VertexId(klass, 1)
        prev_rows: List[int] = []
        own_rows: List[int] = []
        next_rows: List[int] = []
        for u in ref.neighbors(v):
            delta = u.index - 1
            row = classes.index(u.klass)
            if delta == -1:
                prev_rows.append(row)
            elif delta == 0:
                own_rows.append(row)
            elif delta == 1:
                next_rows.append(row)
            else:  # pragma: no cover - generator guarantees the band
                raise DomainError(f"non-band neighbor {u.name} of {v.name}")
        out.append((prev_rows, own_rows, next_rows))
    return out


_CACHE: Dict[Tuple[FamilyKind, Variant], TransitionTables] = {}


def get_tables(family: FamilyKind, variant: Variant) -> TransitionTables:
    key = (family, variant)
    if key in _CACHE:
        return _CACHE[key]

    rows = family.rows
    L = 3 ** rows
    values = np.array(LABEL_VALUES, dtype=np.int8)
    digits = np.zeros((L, rows), dtype=np.int64)
    span = np.arange(L)
    for k in range(rows):
        digits[:, k] = (span // (3 ** (rows - 1 - k))) % 3
    state_labels = values[digits]                      # (L, rows)
    col_weight = state_labels.sum(axis=1).astype(np.int16)

    valid = np.ones((L, L, L), dtype=bool)
    closed = variant is Variant.SRD
    offsets = _row_offsets(family)
    for k, (prev_rows, own_rows, next_rows) in enumerate(offsets):
        sum_prev = state_labels[:, prev_rows].sum(axis=1).astype(np.int16)
        own_cols = list(own_rows) + ([k] if closed else [])
        sum_own = state_labels[:, own_cols].sum(axis=1).astype(np.int16)
        sum_next = state_labels[:, next_rows].sum(axis=1).astype(np.int16)
        total = (sum_prev[:, None, None] + sum_own[None, :, None]
                 + sum_next[None, None, :])
        valid &= total >= 1

        # Witness condition: a -1 vertex needs a 2 somewhere in its open
        # neighborhood, which also lives inside the window.
        has2_prev = (state_labels[:, prev_rows] == 2).any(axis=1)
        has2_own = (state_labels[:, own_rows] == 2).any(axis=1)
        has2_next = (state_labels[:, next_rows] == 2).any(axis=1)
        needs = state_labels[:, k] == -1
        ok = (~needs[None, :, None]
              | has2_prev[:, None, None]
              | has2_own[None, :, None]
              | has2_next[None, None, :])
        valid &= ok

    # CSR of valid predecessors x per output pair (y, z).
    by_pair = valid.transpose(1, 2, 0).reshape(L * L, L)
    counts = by_pair.sum(axis=1)
    pair_ptr = np.zeros(L * L + 1, dtype=np.int64)
    np.cumsum(counts, out=pair_ptr[1:])
    pair_x = np.nonzero(by_pair)[1].astype(np.int32)

    tables = TransitionTables(
        family=family,
        variant=variant,
        rows=rows,
        n_states=L,
        state_labels=state_labels,
        col_weight=col_weight,
        valid3=valid,
        pair_ptr=pair_ptr,
        pair_x=pair_x,
    )
    _CACHE[key] = tables
    return tables
