import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcgeom import (
    DimensionMismatchError,
    ZeroTwoVectorError,
    chordal_distance,
    is_decomposable,
    new_two_vector,
    normalize_grassmann,
    plucker_residuals,
    wedge,
)


def vectors(n, max_size=None):
    return st.lists(
        st.floats(-10, 10, allow_nan=False, allow_infinity=False),
        min_size=n,
        max_size=max_size or n,
    )


def minor_oracle(u, v):
    """2x2 determinants, computed independently of the library layout."""
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    out = {}
    for k in range(len(u)):
        for l in range(k + 1, len(u)):
            out[(k + 1, l + 1)] = np.linalg.det(
                np.array([[u[k], u[l]], [v[k], v[l]]])
            )
    return out


# ----------------------------------------------------------------------- wedge


def test_wedge_basis_example():
    w = wedge([1, 0, 0], [0, 1, 0])
    assert w.coords.tolist() == [1.0, 0.0, 0.0]
    assert w.pair_labels() == ((1, 2), (1, 3), (2, 3))


def test_wedge_of_equal_vectors_is_zero():
    w = wedge([2.0, -1.0, 3.0, 0.5], [2.0, -1.0, 3.0, 0.5])
    assert w.is_zero()


def test_wedge_hand_example_against_determinant_oracle():
    u, v = [1, 2, 3, 4], [5, 6, 7, 8]
    w = wedge(u, v)
    assert w.coords.tolist() == [-4.0, -8.0, -12.0, -4.0, -8.0, -4.0]
    oracle = minor_oracle(u, v)
    for (k, l), value in oracle.items():
        assert w.coord(k, l) == pytest.approx(value, abs=1e-12)


def test_wedge_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        wedge([1, 2, 3], [1, 2])


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6), st.data())
def test_wedge_antisymmetry_exact(n, data):
    u = data.draw(vectors(n))
    v = data.draw(vectors(n))
    assert np.array_equal(wedge(u, v).coords, -wedge(v, u).coords)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 5), st.data())
def test_wedge_bilinearity(n, data):
    u = np.array(data.draw(vectors(n)))
    w = np.array(data.draw(vectors(n)))
    v = np.array(data.draw(vectors(n)))
    alpha = data.draw(st.floats(-5, 5))
    beta = data.draw(st.floats(-5, 5))
    left = wedge(alpha * u + beta * w, v).coords
    right = alpha * wedge(u, v).coords + beta * wedge(w, v).coords
    np.testing.assert_allclose(left, right, rtol=1e-10, atol=1e-10)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 5), st.data())
def test_wedge_scaling(n, data):
    """One scaled vector multiplies coordinates by c, both by c^2."""
    u = np.array(data.draw(vectors(n)))
    v = np.array(data.draw(vectors(n)))
    c = data.draw(st.floats(-4, 4))
    np.testing.assert_allclose(
        wedge(c * u, v).coords, c * wedge(u, v).coords, rtol=1e-10, atol=1e-12
    )
    np.testing.assert_allclose(
        wedge(c * u, c * v).coords,
        c * c * wedge(u, v).coords,
        rtol=1e-10,
        atol=1e-12,
    )


# ------------------------------------------------------------------- residuals


def test_residuals_of_decomposable_vanish():
    w = wedge([1, 2, 3, 4], [5, 6, 7, 8])
    res = plucker_residuals(w)
    assert set(res.residuals) == {(1, 2, 3, 4)}
    assert res.residuals[(1, 2, 3, 4)] == 0.0


def test_residuals_empty_for_n3():
    res = plucker_residuals(new_two_vector(3, [1.0, 2.0, 3.0]))
    assert res.residuals == {}
    assert res.max_abs() == 0.0


def test_nondecomposable_witness_residual_is_one():
    p = new_two_vector(4, [1, 0, 0, 0, 0, 1])
    res = plucker_residuals(p)
    assert res.residuals[(1, 2, 3, 4)] == 1.0


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_random_decomposables_satisfy_relations(n):
    rng = np.random.default_rng(100 + n)
    for _ in range(100):
        w = wedge(rng.uniform(-10, 10, n), rng.uniform(-10, 10, n))
        bound = 1e-9 * max(1.0, w.norm_squared())
        assert plucker_residuals(w).max_abs() <= bound


# --------------------------------------------------------------- decomposable


def test_wedges_are_decomposable():
    rng = np.random.default_rng(2)
    for n in range(2, 7):
        w = wedge(rng.uniform(-10, 10, n), rng.uniform(-10, 10, n))
        assert is_decomposable(w)


def test_witness_is_not_decomposable():
    assert not is_decomposable(new_two_vector(4, [1, 0, 0, 0, 0, 1]))


def test_zero_two_vector_is_decomposable():
    assert is_decomposable(new_two_vector(5, np.zeros(10)))


def skew_matrix(p):
    full = np.zeros((p.n, p.n))
    rows, cols = np.triu_indices(p.n, k=1)
    full[rows, cols] = p.coords
    full[cols, rows] = -p.coords
    return full


@pytest.mark.parametrize("n", [4, 5, 6])
def test_decomposable_agrees_with_rank_oracle(n):
    """p is a single wedge exactly when its skew matrix has rank <= 2."""
    rng = np.random.default_rng(40 + n)
    for _ in range(50):
        if rng.uniform() < 0.5:
            p = wedge(rng.uniform(-5, 5, n), rng.uniform(-5, 5, n))
        else:
            p = new_two_vector(n, rng.uniform(-5, 5, n * (n - 1) // 2))
        rank = np.linalg.matrix_rank(skew_matrix(p), tol=1e-8)
        assert is_decomposable(p, tol=1e-8) == (rank <= 2)


# --------------------------------------------------------------- normalization


def test_normalize_scaling():
    p = normalize_grassmann(new_two_vector(3, [2, 0, 0]))
    assert p.coords.tolist() == [1.0, 0.0, 0.0]


def test_normalize_sign_fix():
    p = normalize_grassmann(new_two_vector(3, [-3, 0, 4]))
    np.testing.assert_allclose(p.coords, [0.6, 0.0, -0.8], atol=1e-15)


def test_normalize_rejects_zero():
    with pytest.raises(ZeroTwoVectorError):
        normalize_grassmann(new_two_vector(4, np.zeros(6)))


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 6), st.data())
def test_normalize_unit_norm_and_idempotent(n, data):
    coords = data.draw(
        st.lists(
            st.floats(-10, 10, allow_nan=False),
            min_size=n * (n - 1) // 2,
            max_size=n * (n - 1) // 2,
        ).filter(lambda c: any(abs(x) > 1e-6 for x in c))
    )
    p = normalize_grassmann(new_two_vector(n, coords))
    assert abs(p.norm() - 1.0) <= 1e-12
    lead = p.coords[np.nonzero(p.coords)[0][0]]
    assert lead > 0
    again = normalize_grassmann(p)
    assert np.array_equal(again.coords, p.coords)


# -------------------------------------------------------------------- distance


def test_chordal_distance_identical():
    p = wedge([1, 2, 3], [4, 5, 6])
    assert chordal_distance(p, p) == 0.0


def test_chordal_distance_orthonormal():
    p = new_two_vector(3, [1, 0, 0])
    q = new_two_vector(3, [0, 1, 0])
    assert chordal_distance(p, q) == pytest.approx(np.sqrt(2.0), rel=1e-15)


def test_chordal_distance_projective_equivalence():
    p = new_two_vector(3, [1, 0, 0])
    q = new_two_vector(3, [2, 0, 0])
    assert chordal_distance(p, q) == 0.0
    assert chordal_distance(p, -1.0 * q) == 0.0


def test_chordal_distance_symmetric():
    rng = np.random.default_rng(9)
    p = wedge(rng.normal(size=5), rng.normal(size=5))
    q = wedge(rng.normal(size=5), rng.normal(size=5))
    assert chordal_distance(p, q) == chordal_distance(q, p)


def test_chordal_distance_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        chordal_distance(new_two_vector(3, [1, 0, 0]), new_two_vector(4, np.ones(6)))
