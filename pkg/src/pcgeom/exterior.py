"""Wedge products of vectors in R^n and their quadratic coordinate relations.

A 2-vector is stored as its coordinate list over the basis e_k ^ e_l with
k < l in lexicographic order; the coordinate of a wedge u ^ v at (k, l) is
the 2-by-2 minor u_k v_l - u_l v_k. A 2-vector that equals some single
wedge is called decomposable; those are exactly the coordinate vectors
satisfying every quadratic relation

    p_kl p_mo - p_km p_lo + p_ko p_lm = 0

over the 4-subsets {k < l < m < o}, and the nonzero ones are in bijection
with 2-dimensional subspaces of R^n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import indexing
from .errors import (
    DimensionMismatchError,
    NonFiniteEntryError,
    ZeroTwoVectorError,
)


@dataclass(frozen=True)
class TwoVector:
    """Coordinates of a 2-vector over the lexicographic pair basis."""

    n: int
    coords: np.ndarray

    def coord(self, k: int, l: int) -> float:
        """Coordinate p_kl for 1-based k < l."""
        pos = indexing.pair_position(self.n)
        if not (1 <= k < l <= self.n):
            raise DimensionMismatchError(
                f"pair ({k},{l}) invalid for dimension {self.n}"
            )
        return float(self.coords[pos[(k - 1, l - 1)]])

    def pair_labels(self) -> tuple[tuple[int, int], ...]:
        return tuple((k + 1, l + 1) for k, l in indexing.pairs(self.n))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    def norm_squared(self) -> float:
        return float(np.dot(self.coords, self.coords))

    def is_zero(self) -> bool:
        return bool(np.all(self.coords == 0.0))

    def _same_space(self, other: "TwoVector") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(
                f"2-vectors live in different dimensions "
                f"({self.n} vs {other.n})"
            )

    def __add__(self, other: "TwoVector") -> "TwoVector":
        self._same_space(other)
        return _new(self.n, self.coords + other.coords)

    def __sub__(self, other: "TwoVector") -> "TwoVector":
        self._same_space(other)
        return _new(self.n, self.coords - other.coords)

    def __neg__(self) -> "TwoVector":
        return _new(self.n, -self.coords)

    def __mul__(self, scalar: float) -> "TwoVector":
        return _new(self.n, self.coords * float(scalar))

    __rmul__ = __mul__


@dataclass(frozen=True)
class PluckerResidualSet:
    """Residual of the quadratic relation for every 4-subset (1-based)."""

    n: int
    residuals: dict[tuple[int, int, int, int], float]

    def max_abs(self) -> float:
        if not self.residuals:
            return 0.0
        return max(abs(v) for v in self.residuals.values())


def _new(n: int, coords: np.ndarray) -> TwoVector:
    arr = np.array(coords, dtype=float)
    arr.setflags(write=False)
    return TwoVector(n=n, coords=arr)


def new_two_vector(n: int, coords) -> TwoVector:
    """Build a TwoVector from raw coordinates, validating the length."""
    arr = np.asarray(coords, dtype=float).ravel()
    if n < 2:
        raise DimensionMismatchError("dimension must be at least 2")
    if arr.size != indexing.pair_count(n):
        raise DimensionMismatchError(
            f"expected {indexing.pair_count(n)} coordinates for n={n}, "
            f"got {arr.size}"
        )
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError("2-vector coordinates must be finite")
    return _new(n, arr)


def _as_vector(u, name: str) -> np.ndarray:
    arr = np.asarray(u, dtype=float).ravel()
    if arr.size < 2:
        raise DimensionMismatchError(f"{name} needs at least 2 components")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError(f"{name} has a non-finite component")
    return arr


def wedge(u, v) -> TwoVector:
    """Wedge product u ^ v; coordinate (k, l) is the minor u_k v_l - u_l v_k."""
    uu = _as_vector(u, "u")
    vv = _as_vector(v, "v")
    if uu.size != vv.size:
        raise DimensionMismatchError(
            f"vectors have different dimensions ({uu.size} vs {vv.size})"
        )
    minors = np.outer(uu, vv) - np.outer(vv, uu)
    rows, cols = np.triu_indices(uu.size, k=1)
    return _new(uu.size, minors[rows, cols])


def _residual_values(p: TwoVector) -> np.ndarray:
    """Vector of quadratic-relation residuals, one per 4-subset."""
    _, (a, b, c, d, e, f) = indexing.quad_pair_positions(p.n)
    q = p.coords
    return q[a] * q[b] - q[c] * q[d] + q[e] * q[f]


def plucker_residuals(p: TwoVector) -> PluckerResidualSet:
    """Residual p_kl p_mo - p_km p_lo + p_ko p_lm for each 4-subset.

    Empty for n < 4, where the relations are vacuous.
    """
    quads, _ = indexing.quad_pair_positions(p.n)
    values = _residual_values(p)
    residuals = {
        (k + 1, l + 1, m + 1, o + 1): float(values[idx])
        for idx, (k, l, m, o) in enumerate(quads)
    }
    return PluckerResidualSet(n=p.n, residuals=residuals)


def is_decomposable(p: TwoVector, tol: float = 1e-9) -> bool:
    """Whether p equals a single wedge, up to a scale-aware tolerance.

    Residuals are quadratic in p, so they are compared against
    tol * max(1, |p|^2); a raw absolute threshold would make the verdict
    depend on an arbitrary overall scale.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    values = _residual_values(p)
    if values.size == 0:
        return True
    bound = tol * max(1.0, p.norm_squared())
    return bool(np.max(np.abs(values)) <= bound)


def normalize_grassmann(p: TwoVector) -> TwoVector:
    """Canonical projective representative: unit norm, first nonzero
    coordinate positive.

    A vector already within a few ulp of unit norm is not rescaled, which
    makes the operation idempotent. Raises ZeroTwoVectorError on the zero
    2-vector, which names no subspace.
    """
    nrm = float(np.linalg.norm(p.coords))
    if nrm == 0.0:
        raise ZeroTwoVectorError("cannot normalize the zero 2-vector")
    if abs(nrm - 1.0) <= 4 * np.finfo(float).eps:
        coords = p.coords
    else:
        coords = p.coords / nrm
    nonzero = np.nonzero(coords)[0]
    if nonzero.size and coords[nonzero[0]] < 0:
        coords = -coords + 0.0  # + 0.0 turns -0.0 into +0.0
    return _new(p.n, coords)


def chordal_distance(p: TwoVector, q: TwoVector) -> float:
    """Distance between the sign-fixed unit representatives of p and q.

    Zero exactly when p and q name the same projective point; symmetric.
    """
    p._same_space(q)
    a = normalize_grassmann(p)
    b = normalize_grassmann(q)
    return float(np.linalg.norm(a.coords - b.coords))
