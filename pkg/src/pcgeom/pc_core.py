"""Additive and multiplicative pairwise-comparison matrices.

An additive matrix stores preference differences and is skew-symmetric;
its multiplicative twin stores preference ratios and is reciprocal. The
two are linked entrywise by exp/log. Consistency of an additive matrix
means every triad satisfies a_ij + a_jk = a_ik, i.e. the entries are
differences of a single score vector.

Alternative indices in the public API are 1-based, matching the usual
notation for comparison matrices; array layouts are plain 0-based numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import indexing
from .errors import (
    IndexOutOfRangeError,
    NonFiniteEntryError,
    NonIncreasingTriadError,
    NonPositiveEntryError,
    NonSquareError,
    NotReciprocalError,
    NotSkewSymmetricError,
    TooSmallError,
)

#: Default absolute tolerance for validating input matrices. Large enough
#: to absorb formatting round-off in text files, small enough not to mask
#: genuine asymmetry.
DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class AdditiveMatrix:
    """Skew-symmetric matrix of pairwise preference differences.

    Only the strict upper triangle is stored (flat, lexicographic pair
    order); the lower triangle is recovered by negation. Skew-symmetry is
    therefore structural, not a runtime check.
    """

    n: int
    upper: np.ndarray

    def entry(self, i: int, j: int) -> float:
        """Entry a_ij for 1-based indices i, j."""
        _check_index(self.n, i)
        _check_index(self.n, j)
        if i == j:
            return 0.0
        pos = indexing.pair_position(self.n)
        if i < j:
            return float(self.upper[pos[(i - 1, j - 1)]])
        return -float(self.upper[pos[(j - 1, i - 1)]])

    def to_array(self) -> np.ndarray:
        """Full n-by-n skew-symmetric matrix."""
        full = np.zeros((self.n, self.n))
        rows, cols = np.triu_indices(self.n, k=1)
        full[rows, cols] = self.upper
        full[cols, rows] = -self.upper
        return full

    def pair_labels(self) -> tuple[tuple[int, int], ...]:
        """1-based (i, j) labels aligned with ``upper``."""
        return tuple((i + 1, j + 1) for i, j in indexing.pairs(self.n))


@dataclass(frozen=True)
class MultiplicativeMatrix:
    """Positive reciprocal matrix of pairwise preference ratios."""

    n: int
    entries: np.ndarray

    def entry(self, i: int, j: int) -> float:
        _check_index(self.n, i)
        _check_index(self.n, j)
        return float(self.entries[i - 1, j - 1])


@dataclass(frozen=True)
class ScoreVector:
    """One scalar score per alternative; differences generate a matrix."""

    n: int
    values: np.ndarray


@dataclass(frozen=True)
class DeviationVector:
    """Triad deviations a_ij + a_jk - a_ik, lexicographic over i<j<k."""

    n: int
    values: np.ndarray

    def triad_labels(self) -> tuple[tuple[int, int, int], ...]:
        """1-based (i, j, k) labels aligned with ``values``."""
        return tuple(
            (i + 1, j + 1, k + 1) for i, j, k in indexing.triads(self.n)
        )

    def max_abs(self) -> float:
        if self.values.size == 0:
            return 0.0
        return float(np.max(np.abs(self.values)))


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"index {i} outside 1..{n}")


def _readonly(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.setflags(write=False)
    return out


def _from_upper(n: int, upper: np.ndarray) -> AdditiveMatrix:
    return AdditiveMatrix(n=n, upper=_readonly(upper))


def _square(raw, what: str) -> np.ndarray:
    arr = np.asarray(raw, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquareError(f"{what} must be square, got shape {arr.shape}")
    if arr.shape[0] < 2:
        raise TooSmallError(f"{what} needs at least 2 alternatives")
    return arr


def new_additive(raw, tol: float = DEFAULT_TOLERANCE) -> AdditiveMatrix:
    """Validate a raw square matrix as additive and build it.

    The upper triangle of ``raw`` is kept verbatim; the lower triangle is
    replaced by its exact negation after checking that the input was
    skew-symmetric within ``tol``.

    Raises:
        NonSquareError, TooSmallError, NonFiniteEntryError,
        NotSkewSymmetricError.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    arr = _square(raw, "additive matrix")
    n = arr.shape[0]
    if not np.all(np.isfinite(arr)):
        i, j = np.argwhere(~np.isfinite(arr))[0]
        raise NonFiniteEntryError(f"entry ({i + 1},{j + 1}) is not finite")
    diag = np.abs(np.diagonal(arr))
    if np.any(diag > tol):
        i = int(np.argmax(diag > tol))
        raise NotSkewSymmetricError(
            f"diagonal entry ({i + 1},{i + 1}) = {arr[i, i]!r} exceeds "
            f"tolerance {tol:g}"
        )
    asym = arr + arr.T
    if np.any(np.abs(asym) > tol):
        i, j = np.argwhere(np.abs(asym) > tol)[0]
        raise NotSkewSymmetricError(
            f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}): "
            f"a[{i + 1},{j + 1}] + a[{j + 1},{i + 1}] = {asym[i, j]!r} "
            f"exceeds tolerance {tol:g}"
        )
    rows, cols = np.triu_indices(n, k=1)
    return _from_upper(n, arr[rows, cols])


def _as_score_array(s) -> np.ndarray:
    values = np.asarray(getattr(s, "values", s), dtype=float).ravel()
    if not np.all(np.isfinite(values)):
        i = int(np.flatnonzero(~np.isfinite(values))[0])
        raise NonFiniteEntryError(f"score {i + 1} is not finite")
    return values


def from_scores(s) -> AdditiveMatrix:
    """Additive matrix a_ij = s_i - s_j; consistent by construction."""
    values = _as_score_array(s)
    n = values.size
    if n < 2:
        raise TooSmallError("need at least 2 scores")
    rows, cols = np.triu_indices(n, k=1)
    return _from_upper(n, values[rows] - values[cols])


def to_multiplicative(a: AdditiveMatrix) -> MultiplicativeMatrix:
    """Elementwise exponential, m_ij = exp(a_ij).

    Raises:
        OverflowError: if any entry exponentiates to infinity.
    """
    with np.errstate(over="ignore"):
        entries = np.exp(a.to_array())
    if not np.all(np.isfinite(entries)):
        i, j = np.argwhere(~np.isfinite(entries))[0]
        raise OverflowError(
            f"exp overflow at entry ({i + 1},{j + 1}); additive value "
            f"{a.to_array()[i, j]!r} is too large"
        )
    return MultiplicativeMatrix(n=a.n, entries=_readonly(entries))


def new_multiplicative(
    raw, tol: float = DEFAULT_TOLERANCE
) -> MultiplicativeMatrix:
    """Validate a raw square matrix as multiplicative and build it.

    Raises:
        NonSquareError, TooSmallError, NonFiniteEntryError,
        NonPositiveEntryError, NotReciprocalError.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    arr = _square(raw, "multiplicative matrix")
    if not np.all(np.isfinite(arr)):
        i, j = np.argwhere(~np.isfinite(arr))[0]
        raise NonFiniteEntryError(f"entry ({i + 1},{j + 1}) is not finite")
    if np.any(arr <= 0):
        i, j = np.argwhere(arr <= 0)[0]
        raise NonPositiveEntryError(
            f"entry ({i + 1},{j + 1}) = {arr[i, j]!r} must be positive"
        )
    diag_err = np.abs(np.diagonal(arr) - 1.0)
    if np.any(diag_err > tol):
        i = int(np.argmax(diag_err > tol))
        raise NotReciprocalError(
            f"diagonal entry ({i + 1},{i + 1}) = {arr[i, i]!r} differs "
            f"from 1 beyond tolerance {tol:g}"
        )
    recip = np.abs(arr * arr.T - 1.0)
    if np.any(recip > tol):
        i, j = np.argwhere(recip > tol)[0]
        raise NotReciprocalError(
            f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}): "
            f"m[{i + 1},{j + 1}] * m[{j + 1},{i + 1}] = {arr[i, j] * arr[j, i]!r} "
            f"differs from 1 beyond tolerance {tol:g}"
        )
    return MultiplicativeMatrix(n=arr.shape[0], entries=_readonly(arr))


def to_additive(m: MultiplicativeMatrix) -> AdditiveMatrix:
    """Elementwise logarithm, a_ij = ln(m_ij).

    Only the upper triangle of the logarithm is kept, so the result is
    exactly skew-symmetric even when the input is reciprocal only within
    tolerance.
    """
    if np.any(m.entries <= 0):
        i, j = np.argwhere(m.entries <= 0)[0]
        raise NonPositiveEntryError(
            f"entry ({i + 1},{j + 1}) = {m.entries[i, j]!r} must be positive"
        )
    rows, cols = np.triu_indices(m.n, k=1)
    return _from_upper(m.n, np.log(m.entries[rows, cols]))


def _check_triad(n: int, i: int, j: int, k: int) -> tuple[int, int, int]:
    for idx in (i, j, k):
        _check_index(n, idx)
    if not i < j < k:
        raise NonIncreasingTriadError(
            f"triad ({i},{j},{k}) must satisfy i < j < k"
        )
    return i - 1, j - 1, k - 1


def triad_deviation(a: AdditiveMatrix, i: int, j: int, k: int) -> float:
    """Deviation a_ij + a_jk - a_ik of the 1-based triad i < j < k."""
    i0, j0, k0 = _check_triad(a.n, i, j, k)
    pos = indexing.pair_position(a.n)
    u = a.upper
    return float(u[pos[(i0, j0)]] + u[pos[(j0, k0)]] - u[pos[(i0, k0)]])


def all_triad_deviations(a: AdditiveMatrix) -> DeviationVector:
    """Every triad deviation, lexicographic over i < j < k."""
    ij, jk, ik = indexing.triad_pair_positions(a.n)
    values = a.upper[ij] + a.upper[jk] - a.upper[ik]
    return DeviationVector(n=a.n, values=_readonly(values))


def algebraic_inconsistency(a: AdditiveMatrix) -> float:
    """Sum of squared triad deviations. Zero exactly when consistent."""
    d = all_triad_deviations(a).values
    return float(np.dot(d, d))


def is_consistent(a: AdditiveMatrix, tol: float = DEFAULT_TOLERANCE) -> bool:
    """True when every triad deviation is within ``tol`` in magnitude."""
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    return all_triad_deviations(a).max_abs() <= tol


def recover_scores(a: AdditiveMatrix) -> tuple[ScoreVector, AdditiveMatrix]:
    """Row-mean scores and the remainder the scores cannot explain.

    Returns (s, r) with s_i the mean of row i and r = a - (s_i - s_j).
    The residual r is skew-symmetric by construction; it vanishes exactly
    when the matrix is consistent, in which case ``from_scores(s)``
    rebuilds the input.
    """
    s = a.to_array().mean(axis=1)
    rows, cols = np.triu_indices(a.n, k=1)
    residual_upper = a.upper - (s[rows] - s[cols])
    return (
        ScoreVector(n=a.n, values=_readonly(s)),
        _from_upper(a.n, residual_upper),
    )


def permute(a: AdditiveMatrix, order: Sequence[int]) -> AdditiveMatrix:
    """Relabel alternatives: entry (i, j) of the result is a[order_i, order_j].

    ``order`` is a 1-based permutation of 1..n.
    """
    perm = np.asarray(order, dtype=int) - 1
    if sorted(perm.tolist()) != list(range(a.n)):
        raise ValueError(f"order must be a permutation of 1..{a.n}")
    full = a.to_array()[np.ix_(perm, perm)]
    rows, cols = np.triu_indices(a.n, k=1)
    return _from_upper(a.n, full[rows, cols])
