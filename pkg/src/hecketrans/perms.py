"""
Permutations of ``range(m)`` in one-line notation and minimal-length
representatives of the left cosets ``S_m / (S_{m1} x S_{m2})``.

Conventions: ``w[i]`` is the image of ``i``; the simple transposition
``s_k`` (0-based, ``0 <= k < m-1``) swaps ``k`` and ``k+1``.  Left
multiplication ``s_k w`` swaps the *values* k and k+1, right multiplication
``w s_k`` swaps the *positions* k and k+1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

Perm = tuple[int, ...]

__all__ = [
    "Perm", "identity", "length", "left_mul", "right_mul", "inverse",
    "reduced_word", "longest_word", "CosetBasis", "coset_basis",
]


def identity(m: int) -> Perm:
    return tuple(range(m))


def length(w: Perm) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def left_mul(k: int, w: Perm) -> Perm:
    return tuple(k + 1 if x == k else k if x == k + 1 else x for x in w)


def right_mul(w: Perm, k: int) -> Perm:
    out = list(w)
    out[k], out[k + 1] = out[k + 1], out[k]
    return tuple(out)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x] = i
    return tuple(out)


def left_descent(w: Perm):
    """Some k with ``l(s_k w) < l(w)``, or None for the identity."""
    inv = inverse(w)
    for k in range(len(w) - 1):
        if inv[k] > inv[k + 1]:
            return k
    return None


def reduced_word(w: Perm) -> tuple[int, ...]:
    """Generators ``(k1, ..., kr)`` with ``w = s_k1 s_k2 ... s_kr``, reduced."""
    word = []
    while True:
        k = left_descent(w)
        if k is None:
            return tuple(word)
        word.append(k)
        w = left_mul(k, w)


def longest_word(m: int) -> tuple[int, ...]:
    return reduced_word(tuple(range(m - 1, -1, -1)))


def is_minimal_left(w: Perm, m1: int) -> bool:
    """Whether w is the shortest element of ``w (S_m1 x S_m2)``."""
    return all(w[k] < w[k + 1] for k in range(len(w) - 1) if k != m1 - 1)


@dataclass(frozen=True)
class CosetBasis:
    m1: int
    m2: int
    reps: tuple[Perm, ...]
    words: tuple[tuple[int, ...], ...]
    index: dict

    def __len__(self) -> int:
        return len(self.reps)


@lru_cache(maxsize=None)
def coset_basis(m1: int, m2: int) -> CosetBasis:
    """Minimal left-coset representatives, sorted by (length, one-line)."""
    m = m1 + m2
    reps = []
    for first in itertools.combinations(range(m), m1):
        rest = [x for x in range(m) if x not in first]
        reps.append(tuple(first) + tuple(rest))
    reps.sort(key=lambda w: (length(w), w))
    assert len(reps) == comb(m, m1)
    words = tuple(reduced_word(w) for w in reps)
    return CosetBasis(m1, m2, tuple(reps), words, {w: k for k, w in enumerate(reps)})
