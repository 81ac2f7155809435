"""The Schubitope of a diagram: halfspace description, vertices, certification.

The polytope of a diagram D in the n x n grid lives in the hyperplane
sum(x) = #D and is cut out by one inequality sum_{i in S} x_i <= theta(D, S)
per proper nonempty subset S.  The bound theta(D, S) is read off column by
column from a parenthesis word.  Vertices come from the greedy fillings
(one per permutation); `certify_vertices` re-derives them independently
with exact rational arithmetic and reports any discrepancy with a witness.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from . import lp
from .diagrams import Diagram
from .fillings import ENUMERATION_CAP, vertex_vector
from .perms import check_permutation

STAR = "★"

HREP_CAP = 12        # 2^n - 2 stored inequalities
SWEEP_CAP = 8        # full S_n sweep for vertex enumeration
CERTIFY_CAP = 6      # exact certification
INTERSECT_CAP = 5    # tight-constraint enumeration fallback


def _check_subset(subset: Iterable[int], n: int) -> frozenset[int]:
    s = frozenset(subset)
    for i in s:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise ValueError(f"subset element {i!r} out of range 1..{n}")
    return s


def column_word(d: Diagram, j: int, subset: Iterable[int]) -> str:
    """Parenthesis word of column j: scan rows top to bottom and record
    '(' for an empty cell in a subset row, ')' for a box outside the
    subset rows, and a star for a box in a subset row.

    >>> d9 = Diagram(5, {(1,1),(2,4),(2,5),(3,2),(3,4),(4,1),(5,1),(5,3),(5,4)})
    >>> column_word(d9, 1, {1, 3})
    '★())'
    """
    if not 1 <= j <= d.n:
        raise ValueError(f"column {j} out of range 1..{d.n}")
    s = _check_subset(subset, d.n)
    col = d.columns[j - 1]
    out = []
    for i in range(1, d.n + 1):
        inside = i in col
        if not inside and i in s:
            out.append("(")
        elif inside and i not in s:
            out.append(")")
        elif inside and i in s:
            out.append(STAR)
    return "".join(out)


def matched_pairs(word: str) -> int:
    """Number of '()' pairs under the inside-out matching (stack scan)."""
    depth = 0
    pairs = 0
    for ch in word:
        if ch == "(":
            depth += 1
        elif ch == ")" and depth:
            depth -= 1
            pairs += 1
    return pairs


def theta_column(word: str) -> int:
    """Matched pairs plus stars of one column word."""
    return matched_pairs(word) + word.count(STAR)


def theta_columns(d: Diagram, subset: Iterable[int]) -> list[int]:
    """Per-column bound contributions."""
    s = _check_subset(subset, d.n)
    return [theta_column(column_word(d, j, s)) for j in range(1, d.n + 1)]


def theta(d: Diagram, subset: Iterable[int]) -> int:
    """Upper bound for sum_{i in subset} x_i over the diagram's polytope."""
    return sum(theta_columns(d, subset))


def _subset_mask(s: Iterable[int]) -> int:
    return sum(1 << (i - 1) for i in s)


def _mask_subset(mask: int, n: int) -> frozenset[int]:
    return frozenset(i for i in range(1, n + 1) if (mask >> (i - 1)) & 1)


@dataclass
class HRep:
    """Equality sum(x) == total plus sum_{i in S} x_i <= bounds[S] for every
    proper nonempty subset S of [n].  Bounds are stored exactly as given."""

    n: int
    total: int
    bounds: dict[frozenset[int], int]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"dimension must be a non-negative integer, got {self.n!r}")
        if not isinstance(self.total, int):
            raise ValueError(f"total must be an integer, got {self.total!r}")
        normalized: dict[frozenset[int], int] = {}
        for s, b in self.bounds.items():
            key = _check_subset(s, self.n)
            if not isinstance(b, int) or b < 0:
                raise ValueError(f"bound for {sorted(key)} must be a non-negative integer, got {b!r}")
            normalized[key] = b
        expected = max(2 ** self.n - 2, 0)
        if len(normalized) != expected:
            raise ValueError(
                f"bounds must cover all {expected} proper nonempty subsets of [{self.n}], got {len(normalized)}"
            )
        self.bounds = normalized

    def sorted_bounds(self) -> list[tuple[frozenset[int], int]]:
        """Bounds in increasing-bitmask order (canonical iteration order)."""
        return sorted(self.bounds.items(), key=lambda kv: _subset_mask(kv[0]))


def hrep(d: Diagram) -> HRep:
    """The full halfspace description of the diagram's polytope."""
    if d.n > HREP_CAP:
        raise ValueError(f"halfspace description needs 2^{d.n}-2 rows; cap is n <= {HREP_CAP}")
    bounds = {}
    for mask in range(1, max(2 ** d.n - 1, 1)):
        s = _mask_subset(mask, d.n)
        bounds[s] = theta(d, s)
    return HRep(d.n, d.size, bounds)


def violated_constraint(h: HRep, point: Sequence) -> str | None:
    """Name of the first violated constraint, or None when the point is inside."""
    if len(point) != h.n:
        raise ValueError(f"point has dimension {len(point)}, expected {h.n}")
    total = sum(point)
    if total != h.total:
        return f"coordinate sum {total} != {h.total}"
    for s, b in h.sorted_bounds():
        got = sum(point[i - 1] for i in s)
        if got > b:
            return f"sum over {sorted(s)} is {got} > {b}"
    return None


def member(h: HRep, point: Sequence) -> bool:
    """Exact membership test; accepts integer or rational coordinates."""
    return violated_constraint(h, point) is None


def schubert_matroid_bases(subset: Iterable[int], n: int) -> set[frozenset[int]]:
    """All subsets of [n] dominated by the given one in the Gale order.

    T <= S means |T| = |S| and, after sorting both increasingly, each entry
    of T is <= the matching entry of S.

    >>> sorted(sorted(b) for b in schubert_matroid_bases({1, 3}, 3))
    [[1, 2], [1, 3]]
    """
    s = sorted(_check_subset(subset, n))
    if n > ENUMERATION_CAP:
        raise ValueError(f"basis enumeration capped at n <= {ENUMERATION_CAP}")
    return {
        frozenset(t)
        for t in itertools.combinations(range(1, n + 1), len(s))
        if all(a <= b for a, b in zip(t, s))
    }


def edmonds_vertex(f: Callable[[frozenset[int]], int], w: Sequence[int]) -> tuple:
    """Greedy vertex of the base polytope of a set function, along the order w.

    Coordinate w_k receives f({w_1..w_k}) - f({w_1..w_{k-1}}).  The caller
    guarantees f(empty) = 0 and submodularity when vertex semantics are
    claimed.
    """
    w = check_permutation(w)
    x: list = [0] * len(w)
    prefix: set[int] = set()
    prev = f(frozenset())
    for k in w:
        prefix.add(k)
        cur = f(frozenset(prefix))
        x[k - 1] = cur - prev
        prev = cur
    return tuple(x)


def vertices(d: Diagram) -> set[tuple[int, ...]]:
    """All distinct greedy-filling vectors over the full symmetric group.

    >>> sorted(vertices(Diagram(3, {(1, 1), (3, 1), (3, 2), (3, 3)})))
    [(1, 0, 3), (1, 3, 0), (3, 0, 1), (3, 1, 0)]
    """
    if d.n > SWEEP_CAP:
        raise ValueError(f"full S_{d.n} sweep exceeds the enumeration budget (n <= {SWEEP_CAP})")
    return {vertex_vector(d, w) for w in itertools.permutations(range(1, d.n + 1))}


@dataclass
class Certification:
    """Outcome of the exact vertex certification.

    ``failures`` holds one human-readable witness per defect; empty means
    the claimed points are exactly the vertex set.  ``method`` records how
    the polytope's own vertices were enumerated for part (c).
    """

    ok: bool
    method: str
    points: int
    failures: tuple[str, ...]


def _bound_table(h: HRep) -> list[int]:
    table = [0] * (2 ** h.n)
    table[-1] = h.total
    for s, b in h.bounds.items():
        table[_subset_mask(s)] = b
    return table


def _is_submodular(table: Sequence[int], n: int) -> bool:
    # local exchange condition: f(S+i) + f(S+j) >= f(S+i+j) + f(S)
    for m in range(2 ** n):
        free = [i for i in range(n) if not (m >> i) & 1]
        for a in range(len(free)):
            for b in range(a + 1, len(free)):
                bi, bj = 1 << free[a], 1 << free[b]
                if table[m | bi] + table[m | bj] < table[m | bi | bj] + table[m]:
                    return False
    return True


def _greedy_from_table(table: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    x = [0] * len(w)
    mask = 0
    prev = 0
    for k in w:
        mask |= 1 << (k - 1)
        cur = table[mask]
        x[k - 1] = cur - prev
        prev = cur
    return tuple(x)


def _intersection_vertices(h: HRep) -> set[tuple]:
    """Vertices by brute force: every feasible unique solution of the equality
    plus n-1 bound rows picked tight."""
    rows = [
        ([1 if i in s else 0 for i in range(1, h.n + 1)], b)
        for s, b in h.sorted_bounds()
    ]
    eq_row = ([1] * h.n, h.total)
    found: set[tuple] = set()
    for combo in itertools.combinations(rows, h.n - 1):
        mat = [eq_row[0]] + [r[0] for r in combo]
        rhs = [eq_row[1]] + [r[1] for r in combo]
        x = lp.solve_unique(mat, rhs)
        if x is not None and member(h, x):
            found.add(tuple(x))
    return found


def certify_vertices(h: HRep, points: Iterable[Sequence]) -> Certification:
    """Certify that ``points`` is exactly the vertex set of the polytope.

    Three exact checks run in order: (a) every claimed point satisfies the
    halfspace description, (b) no claimed point is a convex combination of
    the others, (c) every vertex of the polytope appears among the claimed
    points.  For (c), submodular bound systems are swept with the greedy
    rule (which provably reaches every vertex); otherwise vertices are
    enumerated from tight-constraint intersections.
    """
    if h.n > CERTIFY_CAP:
        raise ValueError(f"certification capped at n <= {CERTIFY_CAP}")
    pts = sorted({tuple(p) for p in points})
    failures: list[str] = []

    for p in pts:
        bad = violated_constraint(h, p)
        if bad is not None:
            failures.append(f"claimed vertex {p} violates the description: {bad}")

    for idx, p in enumerate(pts):
        others = pts[:idx] + pts[idx + 1:]
        lam = lp.convex_combination(p, others)
        if lam is not None:
            combo = " + ".join(f"{c}*{q}" for c, q in zip(lam, others) if c)
            failures.append(f"claimed vertex {p} is not a vertex: {p} = {combo}")

    table = _bound_table(h)
    claimed = set(pts)
    if _is_submodular(table, h.n):
        method = "greedy"
        seen: set[tuple[int, ...]] = set()
        for w in itertools.permutations(range(1, h.n + 1)):
            v = _greedy_from_table(table, w)
            if v in seen:
                continue
            seen.add(v)
            if v not in claimed:
                failures.append(f"vertex {v} (greedy order {w}) is missing from the claimed set")
    else:
        method = "intersection"
        if h.n > INTERSECT_CAP:
            raise ValueError(
                f"vertex enumeration for non-submodular bounds capped at n <= {INTERSECT_CAP}"
            )
        for v in sorted(_intersection_vertices(h)):
            if v not in claimed:
                failures.append(f"vertex {v} is missing from the claimed set")

    return Certification(ok=not failures, method=method, points=len(pts), failures=tuple(failures))


def hrep_to_json_dict(h: HRep) -> dict:
    """JSON form: {"n": 3, "total": 4, "bounds": [{"S": [1], "b": 3}, ...]},
    subsets as sorted 1-indexed lists in increasing-bitmask order."""
    return {
        "n": h.n,
        "total": h.total,
        "bounds": [{"S": sorted(s), "b": b} for s, b in h.sorted_bounds()],
    }


def hrep_from_json_dict(data) -> HRep:
    """Inverse of :func:`hrep_to_json_dict`, with field-naming diagnostics."""
    if not isinstance(data, dict):
        raise ValueError("h-representation document must be a JSON object")
    for field in ("n", "total", "bounds"):
        if field not in data:
            raise ValueError(f"h-representation document is missing field '{field}'")
    if not isinstance(data["bounds"], list):
        raise ValueError("field 'bounds' must be a list of objects")
    bounds: dict[frozenset[int], int] = {}
    for entry in data["bounds"]:
        if not isinstance(entry, dict) or "S" not in entry or "b" not in entry:
            raise ValueError(f"field 'bounds': bad entry {entry!r}, expected {{'S': [...], 'b': int}}")
        s = entry["S"]
        if not isinstance(s, list) or not all(isinstance(i, int) for i in s):
            raise ValueError(f"field 'bounds': subset {s!r} must be a list of integers")
        key = frozenset(s)
        if key in bounds:
            raise ValueError(f"field 'bounds': duplicate subset {sorted(key)}")
        bounds[key] = entry["b"]
    return HRep(data["n"], data["total"], bounds)


def hrep_to_hform(h: HRep) -> str:
    """Plain-text form: first line "n total", then one "bitmask bound" line
    per subset in increasing-bitmask order."""
    lines = [f"{h.n} {h.total}"]
    for s, b in h.sorted_bounds():
        lines.append(f"{_subset_mask(s)} {b}")
    return "\n".join(lines)


def vertex_set_to_json_dict(points: Iterable[Sequence[int]]) -> dict:
    """JSON form: {"vertices": [[3, 1, 0], ...]} sorted lexicographically."""
    return {"vertices": [list(p) for p in sorted(tuple(p) for p in points)]}


def vertex_set_from_json_dict(data) -> set[tuple[int, ...]]:
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValueError("vertex-set document must be a JSON object with field 'vertices'")
    raw = data["vertices"]
    if not isinstance(raw, list):
        raise ValueError("field 'vertices' must be a list of integer vectors")
    out = set()
    for p in raw:
        if not isinstance(p, list) or not all(isinstance(x, int) for x in p):
            raise ValueError(f"field 'vertices': bad entry {p!r}")
        out.add(tuple(p))
    return out
