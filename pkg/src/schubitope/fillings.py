"""Greedy column fillings and the Schubert-matroid rank functions they compute.

A filling of a column is a dict mapping row index to the value placed in
that row.  Fillings produced here are always column-strict (distinct
values) and flagged (the value in row i never exceeds i).

The same rank is computed three independent ways: by the greedy filling
(`rank_filling`), by enumerating matroid bases (`rank_brute`), and by
exhaustive search over flagged fillings (`rank_max_filling`).  The brute
variants exist as oracles; they agree with the greedy one on every input
small enough to enumerate.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

from .diagrams import Box, Diagram
from .perms import check_permutation

# cap for the oracle enumerations: C(n, k) bases stay small at desk scale
ENUMERATION_CAP = 12


def fill_column(rows: Iterable[int], values: Sequence[int]) -> dict[int, int]:
    """Greedy filling of one column.

    Values are processed left to right; each value lands in the topmost
    empty box whose row index is >= the value, and is skipped when no such
    box remains.

    >>> fill_column({2, 3, 4, 6}, (3, 1, 5, 6, 2, 4))
    {3: 3, 2: 1, 6: 5, 4: 2}
    """
    order = sorted(rows)
    if len(set(values)) != len(values):
        raise ValueError(f"filling values must be distinct: {tuple(values)!r}")
    filled: dict[int, int] = {}
    for v in values:
        if v < 1:
            raise ValueError(f"filling values must be positive integers, got {v}")
        for r in order:
            if r >= v and r not in filled:
                filled[r] = v
                break
    return filled


def fill_diagram(d: Diagram, w: Sequence[int]) -> dict[Box, int]:
    """Apply the greedy filling to every column independently, with the entries of w."""
    w = check_permutation(w)
    if len(w) != d.n:
        raise ValueError(f"permutation degree {len(w)} does not match grid size {d.n}")
    out: dict[Box, int] = {}
    for j in range(1, d.n + 1):
        for r, v in fill_column(d.columns[j - 1], w).items():
            out[(r, j)] = v
    return out


def vertex_vector(d: Diagram, w: Sequence[int]) -> tuple[int, ...]:
    """Count of each value 1..n in the greedy filling; the coordinates sum to the box count.

    >>> vertex_vector(Diagram(3, {(1, 1), (3, 1), (3, 2), (3, 3)}), (2, 1, 3))
    (1, 3, 0)
    """
    counts = [0] * d.n
    for v in fill_diagram(d, w).values():
        counts[v - 1] += 1
    return tuple(counts)


def rank_filling(rows: Iterable[int], subset: Iterable[int]) -> int:
    """Rank of a subset in the column's Schubert matroid, via the greedy filling.

    The filling size is independent of the order in which the subset is
    processed; a reversed-order recomputation is kept as a debug tripwire.
    """
    order = tuple(sorted(subset))
    r = len(fill_column(rows, order))
    if __debug__ and len(order) > 1:
        assert r == len(fill_column(rows, order[::-1])), (tuple(rows), order)
    return r


def _check_enumeration_size(rows: Sequence[int]) -> None:
    if len(rows) > ENUMERATION_CAP or (rows and rows[-1] > ENUMERATION_CAP):
        raise ValueError(
            f"column {tuple(rows)} too large for oracle enumeration (cap {ENUMERATION_CAP})"
        )


def rank_brute(rows: Iterable[int], subset: Iterable[int]) -> int:
    """Oracle rank: max |subset ∩ B| over all bases B of the column's Schubert matroid.

    A basis is any set of the same size whose sorted entries are dominated
    entrywise by the sorted column rows (Gale order).
    """
    rows = sorted(rows)
    _check_enumeration_size(rows)
    if not rows:
        return 0
    want = set(subset)
    best = 0
    for basis in itertools.combinations(range(1, rows[-1] + 1), len(rows)):
        if all(a <= b for a, b in zip(basis, rows)):
            best = max(best, len(want.intersection(basis)))
    return best


def rank_max_filling(rows: Iterable[int], subset: Iterable[int]) -> int:
    """Oracle rank: the largest column-strict flagged filling drawing values from the subset.

    Exhaustive backtracking over all partial assignments; independent of
    both the greedy algorithm and the basis enumeration.
    """
    rows = sorted(rows)
    _check_enumeration_size(rows)
    values = sorted(subset)
    best = 0

    def search(vi: int, occupied: frozenset[int], count: int) -> None:
        nonlocal best
        if vi == len(values):
            best = max(best, count)
            return
        search(vi + 1, occupied, count)
        v = values[vi]
        for r in rows:
            if r >= v and r not in occupied:
                search(vi + 1, occupied | {r}, count + 1)

    search(0, frozenset(), 0)
    return best


def rank_diagram(d: Diagram, subset: Iterable[int]) -> int:
    """Sum of the column ranks over all columns of the diagram."""
    s = tuple(sorted(subset))
    return sum(rank_filling(col, s) for col in d.columns)


def _check_column_filling(filling: Mapping[int, int]) -> None:
    vals = list(filling.values())
    if len(set(vals)) != len(vals):
        raise ValueError(f"filling is not column-strict: {dict(filling)!r}")
    for r, v in filling.items():
        if not 1 <= v <= r:
            raise ValueError(f"value {v} in row {r} violates the flag condition")


def sort_filling(filling: Mapping[int, int]) -> dict[int, int]:
    """Rearrange the entries increasingly from top to bottom over the same boxes.

    The input must be column-strict and flagged; the output is again
    flagged (sorting can only move small values up).

    >>> sort_filling({3: 3, 4: 1, 7: 6, 8: 2})
    {3: 1, 4: 2, 7: 3, 8: 6}
    """
    _check_column_filling(filling)
    out = dict(zip(sorted(filling), sorted(filling.values())))
    assert all(v <= r for r, v in out.items())  # sorting preserves the flag condition
    return out


def standardize(rows: Iterable[int], filling: Mapping[int, int]) -> dict[int, int]:
    """Move entries as high as the flag condition allows, smallest entry first.

    The input must be an increasing (top to bottom) column-strict flagged
    filling of the given column.  Each entry a_t, taken in increasing
    order, moves to the topmost currently empty box strictly above it with
    row index >= a_t, if one exists.  The result is again increasing.

    >>> standardize({1, 3, 4, 5, 7, 8}, {3: 1, 4: 2, 7: 3, 8: 6})
    {1: 1, 3: 2, 4: 3, 7: 6}
    """
    rows = sorted(rows)
    boxset = set(rows)
    for r in filling:
        if r not in boxset:
            raise ValueError(f"filled row {r} is not a box of the column {tuple(rows)}")
    _check_column_filling(filling)
    by_row = sorted(filling.items())
    if [v for _, v in by_row] != sorted(filling.values()):
        raise ValueError(f"entries must increase from top to bottom: {dict(filling)!r}")
    current = dict(filling)
    for v in sorted(filling.values()):
        at = next(r for r, x in current.items() if x == v)
        target = next((r for r in rows if v <= r < at and r not in current), None)
        if target is not None:
            del current[at]
            current[target] = v
    result = dict(sorted(current.items()))
    assert [v for _, v in sorted(result.items())] == sorted(result.values())
    return result
