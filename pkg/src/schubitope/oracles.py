"""Independent reference implementations used to cross-check the fast paths.

Everything here is deliberately naive: subword enumeration for the Bruhat
order, breadth-first swap closure for the composition order, chain
recursions re-run with different choices.  Slow, obvious, and independent
of the code they vouch for.
"""
from __future__ import annotations

import itertools
from typing import Callable, Sequence

from . import polyoracle
from .perms import (
    Composition,
    Perm,
    check_composition,
    identity,
    length,
    lambda_of,
    perm_from_word,
    reduced_word,
    swap_adjacent,
)


def bruhat_lower_interval(w: Sequence[int]) -> set[Perm]:
    """{u : u <= w}, via the subword property on one fixed reduced word of w.

    A subexpression whose product has length equal to its letter count is a
    reduced expression of that product.
    """
    word = reduced_word(w)
    n = len(w)
    found: set[Perm] = set()
    for k in range(len(word) + 1):
        for picks in itertools.combinations(range(len(word)), k):
            u = perm_from_word([word[p] for p in picks], n)
            if length(u) == k:
                found.add(u)
    return found


def swap_reachable_set(alpha: Sequence[int]) -> set[Composition]:
    """Compositions reachable by repeatedly swapping a larger later part earlier.

    One move exchanges positions i < j when the part at i is strictly
    smaller than the part at j.
    """
    start = check_composition(alpha)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for i in range(len(cur)):
            for j in range(i + 1, len(cur)):
                if cur[i] < cur[j]:
                    nxt = list(cur)
                    nxt[i], nxt[j] = nxt[j], nxt[i]
                    t = tuple(nxt)
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
    return seen


def descent_violations(alpha: Sequence[int]) -> list[int]:
    """Positions r with alpha_r < alpha_{r+1} (1-based)."""
    return [r for r in range(1, len(alpha)) if alpha[r - 1] < alpha[r]]


def vertex_compositions_recursive(alpha: Sequence[int], pick: Callable = min) -> set[Composition]:
    """Lower interval of a composition by the swap recursion.

    Sorting one violated adjacent pair at position r reduces the problem:
    the interval of alpha is the interval of the sorted neighbour together
    with its image under the swap at r.  ``pick`` chooses which violation
    to recurse on; the result does not depend on the choice.
    """
    alpha = check_composition(alpha)
    rs = descent_violations(alpha)
    if not rs:
        return {alpha}
    r = pick(rs)
    below = vertex_compositions_recursive(swap_adjacent(alpha, r), pick)
    return below | {swap_adjacent(v, r) for v in below}


def w_of_recursive(alpha: Sequence[int]) -> tuple[Perm, tuple[int, ...]]:
    """Sorting permutation of a composition built swap by swap.

    Returns the permutation together with the accumulated swap positions,
    which form a reduced word for it.
    """
    alpha = check_composition(alpha)
    rs = descent_violations(alpha)
    if not rs:
        return identity(len(alpha)), ()
    r = rs[0]
    w, word = w_of_recursive(swap_adjacent(alpha, r))
    return swap_adjacent(w, r), word + (r,)


def shortest_sorting_perms(alpha: Sequence[int]) -> list[Perm]:
    """All minimum-length permutations sending lambda_of(alpha) to alpha, by full search."""
    from .perms import act

    alpha = check_composition(alpha)
    lam = lambda_of(alpha)
    hits = [
        sigma
        for sigma in itertools.permutations(range(1, len(alpha) + 1))
        if act(lam, sigma) == alpha
    ]
    best = min(length(s) for s in hits)
    return [s for s in hits if length(s) == best]


def schubert_by_last_ascent(w: Sequence[int]) -> polyoracle.Polynomial:
    """Schubert recursion along the last ascent instead of the first, unmemoized."""
    w = tuple(w)
    n = len(w)
    ascents = [i for i in range(1, n) if w[i - 1] < w[i]]
    if not ascents:
        return polyoracle.monomial(n, tuple(n - k for k in range(1, n + 1)))
    i = ascents[-1]
    return polyoracle.divided_difference(schubert_by_last_ascent(swap_adjacent(w, i)), i)


def key_by_last_ascent(alpha: Sequence[int]) -> polyoracle.Polynomial:
    """Key recursion along the last ascent instead of the first, unmemoized."""
    alpha = tuple(alpha)
    n = len(alpha)
    ascents = [i for i in range(1, n) if alpha[i - 1] < alpha[i]]
    if not ascents:
        return polyoracle.monomial(n, alpha)
    i = ascents[-1]
    return polyoracle.demazure(key_by_last_ascent(swap_adjacent(alpha, i)), i)
