"""Box diagrams in an n x n grid, with Rothe and skyline constructors.

Rows and columns are numbered 1..n, rows from top to bottom.  The grid
size n is explicit and may exceed the largest occupied row or column:
the polytope built from a diagram lives in R^n, so n matters even for
empty rows.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import perms

Box = tuple[int, int]


@dataclass(frozen=True)
class Diagram:
    """An immutable set of boxes (row, col) inside an n x n grid."""

    n: int
    boxes: frozenset[Box]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"grid size must be a non-negative integer, got {self.n!r}")
        normalized = frozenset((int(r), int(c)) for r, c in self.boxes)
        object.__setattr__(self, "boxes", normalized)
        for r, c in normalized:
            if not (1 <= r <= self.n and 1 <= c <= self.n):
                raise ValueError(f"box ({r},{c}) lies outside the {self.n}x{self.n} grid")

    @property
    def size(self) -> int:
        """Number of boxes."""
        return len(self.boxes)

    def sorted_boxes(self) -> list[Box]:
        """Boxes in row-major order (canonical serialization order)."""
        return sorted(self.boxes)

    @functools.cached_property
    def columns(self) -> tuple[frozenset[int], ...]:
        """Per-column row sets: columns[j-1] = {i : (i, j) is a box}."""
        cols: list[set[int]] = [set() for _ in range(self.n)]
        for r, c in self.boxes:
            cols[c - 1].add(r)
        return tuple(frozenset(s) for s in cols)

    def column(self, j: int) -> frozenset[int]:
        """Row indices of the boxes in column j."""
        if not 1 <= j <= self.n:
            raise ValueError(f"column {j} out of range 1..{self.n}")
        return self.columns[j - 1]


def rothe(w: Sequence[int]) -> Diagram:
    """Rothe diagram of a permutation: boxes (i, j) with j < w_i and w^-1(j) > i.

    The box count equals the Coxeter length of w.

    >>> sorted(rothe((1, 4, 3, 2)).boxes)
    [(2, 2), (2, 3), (3, 2)]
    """
    w = perms.check_permutation(w)
    n = len(w)
    winv = perms.inverse(w)
    boxes = {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, w[i - 1])
        if winv[j - 1] > i
    }
    return Diagram(n, frozenset(boxes))


def skyline(alpha: Sequence[int]) -> Diagram:
    """Skyline diagram of a composition: the first alpha_i boxes of row i.

    >>> sorted(skyline((1, 0, 3)).boxes)
    [(1, 1), (3, 1), (3, 2), (3, 3)]
    """
    alpha = perms.check_composition(alpha)
    n = len(alpha)
    for i, a in enumerate(alpha, 1):
        if a > n:
            raise ValueError(f"part {a} in row {i} exceeds the grid size {n}")
    boxes = {(i, j) for i, a in enumerate(alpha, 1) for j in range(1, a + 1)}
    return Diagram(n, frozenset(boxes))


def to_json_dict(d: Diagram) -> dict:
    """JSON form: {"n": 5, "boxes": [[1, 1], [2, 4], ...]}, boxes row-major."""
    return {"n": d.n, "boxes": [list(b) for b in d.sorted_boxes()]}


def from_json_dict(data) -> Diagram:
    """Inverse of :func:`to_json_dict`, with field-naming diagnostics."""
    if not isinstance(data, dict):
        raise ValueError("diagram document must be a JSON object")
    for field in ("n", "boxes"):
        if field not in data:
            raise ValueError(f"diagram document is missing field '{field}'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"field 'n' must be a non-negative integer, got {n!r}")
    raw = data["boxes"]
    if not isinstance(raw, list):
        raise ValueError("field 'boxes' must be a list of [row, col] pairs")
    boxes = set()
    for entry in raw:
        if not isinstance(entry, list) or len(entry) != 2 or not all(isinstance(x, int) for x in entry):
            raise ValueError(f"field 'boxes': bad entry {entry!r}, expected [row, col]")
        boxes.add((entry[0], entry[1]))
    return Diagram(n, frozenset(boxes))


def to_text(d: Diagram) -> str:
    """One line per row, a white square for a box and '.' for an empty cell."""
    lines = []
    for i in range(1, d.n + 1):
        lines.append("".join("□" if (i, j) in d.boxes else "." for j in range(1, d.n + 1)))
    return "\n".join(lines)


def filling_text(d: Diagram, filling: Mapping[Box, int]) -> str:
    """The diagram grid with each box showing its value, or a middle dot when empty."""
    lines = []
    for i in range(1, d.n + 1):
        row = []
        for j in range(1, d.n + 1):
            if (i, j) in d.boxes:
                row.append(str(filling[(i, j)]) if (i, j) in filling else "·")
            else:
                row.append(".")
        lines.append(row)
    sep = "" if d.n <= 9 else " "
    return "\n".join(sep.join(row) for row in lines)
