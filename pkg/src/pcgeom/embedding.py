"""Vector embeddings of alternatives and geometric triad deviations.

Each alternative i gets a vector v_i in R^n; each pair spans the 2-vector
w_ij = v_i ^ v_j. For a triad i < j < k the geometric deviation combines
the three pair 2-vectors under one of two conventions:

    cyclic      w_ij + w_jk + w_ki   (closes the loop i -> j -> k -> i)
    anticyclic  w_ij + w_jk - w_ki   (closing edge taken with opposite sign)

Two embedding families are built in. The planar family v_i = (s_i, 1, 0,
..., 0) reproduces score differences as the leading wedge coordinate, so
its cyclic deviation vanishes exactly on consistent data. The orthogonal
family v_i = b_i e_i puts every pair wedge on its own coordinate axis;
its deviations can never cancel and are reported as a structural
diagnostic rather than a consistency test.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import indexing
from .errors import (
    DegeneratePairWarning,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NonFiniteEntryError,
    ZeroCoefficientError,
)
from .exterior import TwoVector, wedge
from .pc_core import AdditiveMatrix, _as_score_array

ORTHOGONAL = "orthogonal"
PLANAR = "planar"
CUSTOM = "custom"

CONVENTIONS = ("cyclic", "anticyclic")


@dataclass(frozen=True)
class Embedding:
    """One vector per alternative, all of dimension n."""

    n: int
    vectors: np.ndarray
    kind: str

    def vector(self, i: int) -> np.ndarray:
        """Vector of alternative i (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRangeError(f"index {i} outside 1..{self.n}")
        return self.vectors[i - 1]


@dataclass(frozen=True)
class GeometricDeviation:
    """Triad (1-based) together with its deviation 2-vector."""

    triad: tuple[int, int, int]
    value: TwoVector

    def norm_squared(self) -> float:
        return self.value.norm_squared()


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(
            f"unknown convention {convention!r}; expected one of {CONVENTIONS}"
        )


def _embedding(n: int, rows: np.ndarray, kind: str) -> Embedding:
    arr = np.array(rows, dtype=float)
    arr.setflags(write=False)
    return Embedding(n=n, vectors=arr, kind=kind)


def orthogonal_embedding(b) -> Embedding:
    """Embedding v_i = b_i e_i along the coordinate axes.

    Every coefficient must be nonzero, otherwise an alternative would
    collapse to the zero vector and span nothing.
    """
    coeffs = np.asarray(b, dtype=float).ravel()
    if coeffs.size < 2:
        raise DimensionMismatchError("need at least 2 coefficients")
    if not np.all(np.isfinite(coeffs)):
        raise NonFiniteEntryError("coefficients must be finite")
    if np.any(coeffs == 0.0):
        i = int(np.flatnonzero(coeffs == 0.0)[0])
        raise ZeroCoefficientError(f"coefficient {i + 1} is zero")
    return _embedding(coeffs.size, np.diag(coeffs), ORTHOGONAL)


def planar_embedding(s) -> Embedding:
    """Embedding v_i = (s_i, 1, 0, ..., 0), zero-padded to length n.

    The wedge of two such vectors has s_i - s_j as its leading coordinate
    and zeros elsewhere, so score differences survive as wedge data.
    """
    values = _as_score_array(s)
    n = values.size
    if n < 2:
        raise DimensionMismatchError("need at least 2 scores")
    rows = np.zeros((n, n))
    rows[:, 0] = values
    rows[:, 1] = 1.0
    return _embedding(n, rows, PLANAR)


def custom_embedding(vectors) -> Embedding:
    """Embedding from an explicit n-by-n array of row vectors."""
    arr = np.asarray(vectors, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError(
            f"need one length-n vector per alternative, got shape {arr.shape}"
        )
    if arr.shape[0] < 2:
        raise DimensionMismatchError("need at least 2 vectors")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError("vectors must be finite")
    return _embedding(arr.shape[0], arr, CUSTOM)


def scores_to_coefficients(s) -> np.ndarray:
    """Map scores to orthogonal coefficients b_i = exp(s_i / 2).

    Strictly positive and monotone in the score, so the nonzero
    requirement of the orthogonal family holds automatically.
    """
    return np.exp(_as_score_array(s) / 2.0)


def pair_subspace(e: Embedding, i: int, j: int) -> TwoVector:
    """Wedge v_i ^ v_j for 1-based i != j.

    Emits DegeneratePairWarning (and still returns the zero 2-vector)
    when the two vectors are parallel; downstream sums stay well defined.
    """
    for idx in (i, j):
        if not 1 <= idx <= e.n:
            raise IndexOutOfRangeError(f"index {idx} outside 1..{e.n}")
    if i == j:
        raise IndexOutOfRangeError(f"pair indices must differ, got ({i},{j})")
    w = wedge(e.vectors[i - 1], e.vectors[j - 1])
    if w.is_zero():
        warnings.warn(
            f"pair ({i},{j}) spans no plane (parallel vectors)",
            DegeneratePairWarning,
            stacklevel=2,
        )
    return w


def _pair_wedges(e: Embedding) -> np.ndarray:
    """Matrix of all pair wedges, row p = coords of v_i ^ v_j for pair p."""
    upper = np.triu_indices(e.n, k=1)
    out = np.empty((upper[0].size, indexing.pair_count(e.n)))
    for p, (i, j) in enumerate(zip(*upper)):
        minors = np.outer(e.vectors[i], e.vectors[j]) - np.outer(
            e.vectors[j], e.vectors[i]
        )
        out[p] = minors[upper]
    return out


def geometric_deviation(
    e: Embedding, i: int, j: int, k: int, convention: str = "cyclic"
) -> GeometricDeviation:
    """Deviation 2-vector of the 1-based triad i < j < k."""
    _check_convention(convention)
    if not i < j < k:
        raise IndexOutOfRangeError(
            f"triad ({i},{j},{k}) must satisfy i < j < k"
        )
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegeneratePairWarning)
        w_ij = pair_subspace(e, i, j)
        w_jk = pair_subspace(e, j, k)
        w_ki = pair_subspace(e, k, i)
    if convention == "cyclic":
        value = w_ij + w_jk + w_ki
    else:
        value = w_ij + w_jk - w_ki
    return GeometricDeviation(triad=(i, j, k), value=value)


def geometric_inconsistency(e: Embedding, convention: str = "cyclic") -> float:
    """Sum of squared deviation norms over lexicographic triads."""
    _check_convention(convention)
    if e.n < 3:
        return 0.0
    w = _pair_wedges(e)
    ij, jk, ik = indexing.triad_pair_positions(e.n)
    # wedge(v_k, v_i) = -wedge(v_i, v_k), so the cyclic +w_ki becomes -W_ik
    # on the lexicographic pair rows.
    if convention == "cyclic":
        devs = w[ij] + w[jk] - w[ik]
    else:
        devs = w[ij] + w[jk] + w[ik]
    return float(np.sum(devs * devs))


def planar_pair_subspaces(a: AdditiveMatrix) -> list[TwoVector]:
    """Per-pair planar 2-vectors carrying the matrix entries.

    Pair (i, j) gets the wedge of the local vectors (a_ij, 1, 0, ...) and
    (0, 1, 0, ...), whose only nonzero coordinate is a_ij at position
    (1, 2). Unlike a single global embedding, this pairwise family
    represents an inconsistent matrix faithfully.
    """
    out = []
    base = np.zeros(a.n)
    base[1] = 1.0
    for value in a.upper:
        u = base.copy()
        u[0] = value
        out.append(wedge(u, base))
    return out


def planar_matrix_inconsistency(
    a: AdditiveMatrix, convention: str = "cyclic"
) -> float:
    """Geometric inconsistency of the pairwise planar family of a matrix.

    All coordinates of the per-pair wedges other than the leading one
    vanish identically, so the triad sums reduce to scalar combinations of
    the entries; under the cyclic convention this equals the sum of
    squared triad deviations.
    """
    _check_convention(convention)
    if a.n < 3:
        return 0.0
    ij, jk, ik = indexing.triad_pair_positions(a.n)
    u = a.upper
    if convention == "cyclic":
        lead = u[ij] + u[jk] - u[ik]
    else:
        lead = u[ij] + u[jk] + u[ik]
    return float(np.dot(lead, lead))
