"""Inconsistency reduction: projection and iterative descent.

The consistent matrices form the linear subspace of score differences;
the Frobenius-nearest consistent matrix is obtained by differencing the
row-mean scores. The iterative route descends on the upper-triangle
entries, pushing each entry against the signed sum of the deviations of
the triads containing it. On the complete comparison structure that
update contracts the inconsistent component by the factor 1 - eta*n per
step, so eta = 1/n lands exactly on the projection in a single step and
any 0 < eta < 2/n descends monotonically.

A brute-force grid search over score vectors is included as an
independent optimality check for small n; it is meant for tests, not for
production use.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coupling import CouplingMap, coupling_coefficients
from .errors import NonPositiveLambdaError, NonPositiveStepError, UnsupportedSizeError
from .pc_core import (
    AdditiveMatrix,
    ScoreVector,
    _from_upper,
    from_scores,
    recover_scores,
)


@dataclass(frozen=True)
class ReductionStep:
    """Snapshot after a descent step (step 0 is the input)."""

    index: int
    matrix: AdditiveMatrix
    i_alg: float
    i_geom: float


@dataclass(frozen=True)
class ReductionTrajectory:
    """Descent history; i_alg is non-increasing along the steps."""

    steps: tuple[ReductionStep, ...]
    converged: bool

    @property
    def final(self) -> AdditiveMatrix:
        return self.steps[-1].matrix

    def records(self) -> list[dict]:
        """One plain dict per step, ready for line-oriented export."""
        return [
            {"step": s.index, "I_alg": s.i_alg, "I_geom": s.i_geom}
            for s in self.steps
        ]


def project_consistent(
    a: AdditiveMatrix,
) -> tuple[AdditiveMatrix, ScoreVector]:
    """Frobenius-nearest consistent matrix and its generating scores.

    Row-mean scores minimize the squared entry distance over all score
    vectors, so the returned matrix is the orthogonal projection of the
    input onto the consistent subspace; the operation is idempotent and
    the residual has zero row sums.
    """
    scores, _ = recover_scores(a)
    return from_scores(scores), scores


def _deviation_state(cmap: CouplingMap | None, upper: np.ndarray):
    """(deviations, i_alg, i_geom) for the current upper triangle."""
    if cmap is None:
        return np.zeros(0), 0.0, 0.0
    d = cmap.apply_transpose(upper)
    image = cmap.apply(d)
    return d, float(np.dot(d, d)), float(np.dot(image, image))


def reduce_iterative(
    a: AdditiveMatrix,
    lam: float = 0.0,
    eta: float | None = None,
    max_steps: int = 1000,
    tol: float = 1e-12,
) -> ReductionTrajectory:
    """Gradient descent on the entries until i_alg falls below tol.

    Each entry a_ij moves against eta times the signed sum of the
    deviations of the triads through (i, j). With lam > 0 the descent
    direction instead comes from the regularized deviation-space form
    (quadratic form plus lam times the identity), rescaled by 1/n so that
    lam = 0 reproduces the plain update; the minimizers coincide either
    way, only the contraction factor changes from 1 - eta*n to
    1 - eta*(n + lam).

    eta defaults to 1/n, which reaches the exact projection in one step.
    Failure to converge within max_steps is reported through the
    ``converged`` flag, not as an error.
    """
    n = a.n
    if eta is None:
        eta = 1.0 / n
    if not eta > 0:
        raise NonPositiveStepError(f"step size must be positive, got {eta!r}")
    if lam < 0:
        raise NonPositiveLambdaError(
            f"regularization weight must be nonnegative, got {lam!r}"
        )
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    if not tol > 0:
        raise ValueError("tolerance must be positive")

    cmap = coupling_coefficients(n) if n >= 3 else None
    upper = a.upper.copy()
    d, i_alg, i_geom = _deviation_state(cmap, upper)
    steps = [ReductionStep(0, _from_upper(n, upper), i_alg, i_geom)]
    converged = i_alg <= tol
    taken = 0
    while not converged and taken < max_steps:
        if lam == 0.0:
            upper = upper - eta * cmap.apply(d)
        else:
            # (M + lam I) d without materializing M: M d = C^T (C d).
            md = cmap.apply_transpose(cmap.apply(d)) + lam * d
            upper = upper - (eta / n) * cmap.apply(md)
        taken += 1
        d, i_alg, i_geom = _deviation_state(cmap, upper)
        steps.append(ReductionStep(taken, _from_upper(n, upper), i_alg, i_geom))
        converged = i_alg <= tol
    return ReductionTrajectory(steps=tuple(steps), converged=converged)


def nearest_consistent_oracle(
    a: AdditiveMatrix, grid_radius: float, grid_steps: int
) -> AdditiveMatrix:
    """Brute-force nearest consistent matrix over a score grid.

    Exhaustively evaluates every score vector on a uniform grid of
    half-width grid_radius per axis centred at the row-mean scores and
    returns the score-difference matrix closest in Frobenius norm. Only
    n = 3 and n = 4 are supported; cost grows as grid_steps**n.
    """
    if a.n not in (3, 4):
        raise UnsupportedSizeError(
            f"grid oracle supports n = 3 or 4, got n = {a.n}"
        )
    if grid_steps < 11:
        raise ValueError("grid_steps must be at least 11")
    if not grid_radius > 0:
        raise ValueError("grid_radius must be positive")
    center, _ = recover_scores(a)
    axes = [
        np.linspace(c - grid_radius, c + grid_radius, grid_steps)
        for c in center.values
    ]
    grids = np.meshgrid(*axes, indexing="ij")
    dist_sq = np.zeros(grids[0].shape)
    rows, cols = np.triu_indices(a.n, k=1)
    for value, i, j in zip(a.upper, rows, cols):
        dist_sq += (value - (grids[i] - grids[j])) ** 2
    best = np.unravel_index(np.argmin(dist_sq), dist_sq.shape)
    scores = np.array([axis[idx] for axis, idx in zip(axes, best)])
    return from_scores(scores)
