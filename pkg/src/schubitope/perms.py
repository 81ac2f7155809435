"""Permutations, compositions, the Bruhat order, and composition lower intervals.

Permutations are plain tuples in one-line notation with values 1..n, so
2641375 is written ``(2, 6, 4, 1, 3, 7, 5)``.  Compositions are tuples of
non-negative integers.  All functions are pure and never mutate their
arguments; values are safe to share between workers.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

Perm = tuple[int, ...]
Composition = tuple[int, ...]


def check_permutation(w: Sequence[int]) -> Perm:
    """Return ``w`` as a tuple after checking it is a bijection on 1..n."""
    t = tuple(w)
    if sorted(t) != list(range(1, len(t) + 1)):
        raise ValueError(f"not a permutation of 1..{len(t)}: {t!r}")
    return t


def check_composition(alpha: Sequence[int]) -> Composition:
    """Return ``alpha`` as a tuple after checking all parts are >= 0."""
    t = tuple(alpha)
    if any(not isinstance(a, int) or a < 0 for a in t):
        raise ValueError(f"composition parts must be non-negative integers: {t!r}")
    return t


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inverse(w: Sequence[int]) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def length(w: Sequence[int]) -> int:
    """Coxeter length, i.e. the number of inversions."""
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def act(v: Sequence, w: Sequence[int]) -> tuple:
    """Right action of a permutation on a vector: entry k of the result is v[w_k].

    >>> act((3, 2, 2, 1, 1, 0, 0), (2, 6, 4, 1, 3, 7, 5))
    (2, 0, 1, 3, 2, 0, 1)
    """
    w = check_permutation(w)
    if len(v) != len(w):
        raise ValueError(f"vector length {len(v)} does not match permutation degree {len(w)}")
    return tuple(v[k - 1] for k in w)


def swap_adjacent(v: Sequence, i: int) -> tuple:
    """Exchange entries i and i+1 (1-based).  For a permutation this is w*s_i."""
    if not 1 <= i < len(v):
        raise ValueError(f"adjacent-swap index {i} out of range 1..{len(v) - 1}")
    out = list(v)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def swap_values(w: Sequence[int], i: int) -> Perm:
    """Exchange the values i and i+1 wherever they occur; for a permutation this is s_i*w."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def bruhat_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """Strong Bruhat order test, by prefix dominance.

    u <= w iff for every i the increasingly sorted prefix u_1..u_i is
    entrywise <= the sorted prefix w_1..w_i.  This is equivalent to the
    subword criterion on reduced expressions but runs in polynomial time.

    >>> bruhat_leq((3, 1, 2), (3, 2, 1))
    True
    >>> bruhat_leq((3, 2, 1), (3, 1, 2))
    False
    """
    if len(u) != len(w):
        raise ValueError(f"permutation degrees differ: {len(u)} vs {len(w)}")
    for i in range(1, len(u)):
        for a, b in zip(sorted(u[:i]), sorted(w[:i])):
            if a > b:
                return False
    return True


def reduced_word(w: Sequence[int]) -> tuple[int, ...]:
    """One reduced word (i_1, ..., i_k) with w = s_{i_1} * ... * s_{i_k}.

    Built by repeatedly removing the leftmost descent; the word length
    equals length(w).
    """
    u = list(check_permutation(w))
    word = []
    while True:
        i = next((i for i in range(len(u) - 1) if u[i] > u[i + 1]), None)
        if i is None:
            break
        u[i], u[i + 1] = u[i + 1], u[i]
        word.append(i + 1)
    word.reverse()
    return tuple(word)


def perm_from_word(word: Iterable[int], n: int) -> Perm:
    """Evaluate the product s_{i_1} * ... * s_{i_k} in S_n."""
    u = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"word letter {i} out of range 1..{n - 1}")
        u[i - 1], u[i] = u[i], u[i - 1]
    return tuple(u)


def lambda_of(alpha: Sequence[int]) -> Composition:
    """The parts of ``alpha`` rearranged weakly decreasingly."""
    return tuple(sorted(check_composition(alpha), reverse=True))


def w_of(alpha: Sequence[int]) -> Perm:
    """The shortest permutation w with act(lambda_of(alpha), w) == alpha.

    Positions holding the largest part receive the labels 1, 2, ... in
    left-to-right order, then the positions of the next largest part, and
    so on; equal parts therefore get consecutive labels.

    >>> w_of((2, 0, 1, 3, 2, 0, 1))
    (2, 6, 4, 1, 3, 7, 5)
    """
    alpha = check_composition(alpha)
    w = [0] * len(alpha)
    label = 1
    for part in sorted(set(alpha), reverse=True):
        for pos, a in enumerate(alpha):
            if a == part:
                w[pos] = label
                label += 1
    return tuple(w)


def composition_leq(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """Composition order: same part multiset and w_of(beta) <= w_of(alpha) in Bruhat order.

    Compositions compare only at equal length; pad with trailing zeros
    before calling if needed.
    """
    beta, alpha = check_composition(beta), check_composition(alpha)
    if len(beta) != len(alpha):
        raise ValueError(f"composition lengths differ: {len(beta)} vs {len(alpha)}")
    if lambda_of(beta) != lambda_of(alpha):
        return False
    return bruhat_leq(w_of(beta), w_of(alpha))


def vertex_compositions(alpha: Sequence[int]) -> list[Composition]:
    """All compositions beta <= alpha, as a lexicographically sorted list.

    Computed as {lambda_of(alpha) acted on by sigma : sigma <= w_of(alpha)},
    deduplicated.

    >>> vertex_compositions((1, 0, 3))
    [(1, 0, 3), (1, 3, 0), (3, 0, 1), (3, 1, 0)]
    """
    alpha = check_composition(alpha)
    lam = lambda_of(alpha)
    wa = w_of(alpha)
    found = {
        act(lam, sigma)
        for sigma in itertools.permutations(range(1, len(alpha) + 1))
        if bruhat_leq(sigma, wa)
    }
    return sorted(found)


def parse_perm(text: str) -> Perm:
    """Parse one-line notation: "2641375" for n <= 9, comma-separated otherwise."""
    text = text.strip()
    if "," in text:
        pieces = text.split(",")
    elif text.isdigit():
        pieces = list(text)
    else:
        raise ValueError(f"bad permutation {text!r}: use a digit string or comma-separated integers")
    try:
        entries = [int(p) for p in pieces]
    except ValueError:
        raise ValueError(f"bad permutation {text!r}: entries must be integers") from None
    return check_permutation(entries)


def perm_to_str(w: Sequence[int]) -> str:
    return "".join(map(str, w)) if len(w) <= 9 else ",".join(map(str, w))


def parse_composition(text: str) -> Composition:
    """Parse a comma-separated composition, e.g. "1,0,3"."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"bad composition {text!r}: parts must be integers") from None
    return check_composition(parts)


def composition_to_str(alpha: Sequence[int]) -> str:
    return ",".join(map(str, alpha))
