import numpy as np
import pytest

from prmqec import linalg as la
from prmqec.gf import field_for_order

FIELDS = [2, 3, 4, 5, 8, 9]


def random_matrix(rng, q, shape):
    return rng.integers(0, q, size=shape).astype(np.uint8)


@pytest.mark.parametrize("q", FIELDS)
def test_rref_idempotent_and_rank(q):
    F = field_for_order(q)
    rng = np.random.default_rng(q)
    for _ in range(25):
        M = random_matrix(rng, q, (6, 10))
        R, pivots, r = la.rref(F, M)
        R2, _, r2 = la.rref(F, R)
        assert r == r2 and np.array_equal(R, R2)
        assert len(pivots) == r
        for row, pc in enumerate(pivots):
            col = R[:, pc]
            assert col[row] == 1 and la.weight(col) == 1


@pytest.mark.parametrize("q", FIELDS)
def test_null_space(q):
    F = field_for_order(q)
    rng = np.random.default_rng(10 + q)
    for _ in range(25):
        M = random_matrix(rng, q, (5, 9))
        N = la.null_space(F, M)
        assert la.rank(F, M) + N.shape[0] == 9
        if N.shape[0]:
            assert not la.matmul(F, M, N.T).any()
            assert la.rank(F, N) == N.shape[0]


@pytest.mark.parametrize("q", FIELDS)
def test_matmul_matches_python_reference(q):
    F = field_for_order(q)
    rng = np.random.default_rng(20 + q)
    A = random_matrix(rng, q, (4, 5))
    B = random_matrix(rng, q, (5, 3))
    C = la.matmul(F, A, B)
    for i in range(4):
        for j in range(3):
            acc = F.zero
            for t in range(5):
                acc = acc + F.element(int(A[i, t])) * F.element(int(B[t, j]))
            assert C[i, j] == acc.code


@pytest.mark.parametrize("q", FIELDS)
def test_intersection_dimension_formula(q):
    F = field_for_order(q)
    rng = np.random.default_rng(30 + q)
    for _ in range(25):
        A = random_matrix(rng, q, (4, 8))
        B = random_matrix(rng, q, (4, 8))
        I = la.intersect_row_spaces(F, A, B)
        for v in I:
            assert la.in_row_space(F, A, v) and la.in_row_space(F, B, v)
        ra, rb = la.rank(F, A), la.rank(F, B)
        rsum = la.rank(F, np.concatenate([A, B]))
        assert I.shape[0] == ra + rb - rsum


@pytest.mark.parametrize("q", FIELDS)
def test_solve_right(q):
    F = field_for_order(q)
    rng = np.random.default_rng(40 + q)
    for _ in range(20):
        M = random_matrix(rng, q, (5, 7))
        x0 = rng.integers(0, q, size=7).astype(np.uint8)
        b = la.matmul(F, M, x0.reshape(-1, 1)).reshape(-1)
        x = la.solve_right(F, M, b)
        assert x is not None
        assert np.array_equal(la.matmul(F, M, x.reshape(-1, 1)).reshape(-1), b)


def test_solve_right_inconsistent():
    F = field_for_order(2)
    M = np.array([[1, 0], [1, 0]], dtype=np.uint8)
    assert la.solve_right(F, M, np.array([1, 0], dtype=np.uint8)) is None


def test_shape_errors():
    from prmqec.errors import ShapeMismatch
    F = field_for_order(2)
    with pytest.raises(ShapeMismatch):
        la.matmul(F, np.zeros((2, 3), dtype=np.uint8),
                  np.zeros((2, 3), dtype=np.uint8))
