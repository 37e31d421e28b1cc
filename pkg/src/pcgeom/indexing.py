"""Lexicographic pair and triad bookkeeping.

Everything in this module is 0-based; the public API converts from the
1-based labels used everywhere else. Results are cached per dimension and
the returned arrays are read-only, so they can be shared freely.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np


def pair_count(n: int) -> int:
    return comb(n, 2)


def triad_count(n: int) -> int:
    return comb(n, 3)


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs (k, l) with k < l, lexicographically ordered."""
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def triads(n: int) -> tuple[tuple[int, int, int], ...]:
    """All triads (i, j, k) with i < j < k, lexicographically ordered."""
    return tuple(combinations(range(n), 3))


@lru_cache(maxsize=None)
def pair_position(n: int) -> dict[tuple[int, int], int]:
    return {pair: idx for idx, pair in enumerate(pairs(n))}


@lru_cache(maxsize=None)
def triad_position(n: int) -> dict[tuple[int, int, int], int]:
    return {triad: idx for idx, triad in enumerate(triads(n))}


def _frozen(values: list[int]) -> np.ndarray:
    arr = np.asarray(values, dtype=np.intp)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def triad_pair_positions(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pair positions (i,j), (j,k), (i,k) for every triad, as index arrays.

    These three arrays realize the signed triad-to-pair incidence: the
    deviation of triad t reads entry[ij] + entry[jk] - entry[ik].
    """
    pos = pair_position(n)
    ij = [pos[(i, j)] for i, j, k in triads(n)]
    jk = [pos[(j, k)] for i, j, k in triads(n)]
    ik = [pos[(i, k)] for i, j, k in triads(n)]
    return _frozen(ij), _frozen(jk), _frozen(ik)


@lru_cache(maxsize=None)
def quad_pair_positions(
    n: int,
) -> tuple[tuple[tuple[int, int, int, int], ...], tuple[np.ndarray, ...]]:
    """4-subsets of 0..n-1 and the six pair positions entering each
    quadratic relation: (k,l)(m,o), (k,m)(l,o), (k,o)(l,m)."""
    pos = pair_position(n)
    quads = tuple(combinations(range(n), 4))
    cols: list[list[int]] = [[] for _ in range(6)]
    for k, l, m, o in quads:
        for slot, pair in enumerate(
            [(k, l), (m, o), (k, m), (l, o), (k, o), (l, m)]
        ):
            cols[slot].append(pos[pair])
    return quads, tuple(_frozen(c) for c in cols)
