"""Exact linear algebra over GF(q) on uint8 code matrices.

Functions take a FieldSpec plus numpy uint8 arrays of element codes and
stay allocation-honest: inputs are never mutated.
"""

from __future__ import annotations

import numpy as np

from ._kernels import gf_matmul, gf_rref
from .errors import ShapeMismatch
from .gf import FieldSpec


def as_matrix(a) -> np.ndarray:
    M = np.asarray(a, dtype=np.uint8)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if M.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got ndim={M.ndim}")
    return M


def rref(field: FieldSpec, M) -> tuple[np.ndarray, np.ndarray, int]:
    """(reduced echelon form, pivot columns, rank)."""
    R = as_matrix(M).copy()
    t = field.tables
    pivots = np.zeros(max(1, min(R.shape)), dtype=np.int64)
    r = gf_rref(R, t.add, t.mul, t.neg, t.inv, pivots)
    return R, pivots[:r], r


def rank(field: FieldSpec, M) -> int:
    return rref(field, M)[2]


def row_basis(field: FieldSpec, M) -> np.ndarray:
    """Canonical (rref) basis of the row space; (rank, n) array."""
    R, _, r = rref(field, M)
    return R[:r]


def matmul(field: FieldSpec, A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ShapeMismatch(f"{A.shape} @ {B.shape}")
    t = field.tables
    return gf_matmul(A, B, t.add, t.mul)


def scale_vector(field: FieldSpec, s: int, v: np.ndarray) -> np.ndarray:
    return field.tables.mul[s, v]


def add_vectors(field: FieldSpec, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return field.tables.add[u, v]


def neg_vector(field: FieldSpec, v: np.ndarray) -> np.ndarray:
    return field.tables.neg[v]


def null_space(field: FieldSpec, M) -> np.ndarray:
    """Basis of the right kernel {x : M x^T = 0}, one row per vector.

    Free variables are set to 1 one at a time in ascending column order,
    so the basis is deterministic.
    """
    R, pivots, r = rref(field, M)
    n = R.shape[1]
    free = [c for c in range(n) if c not in set(pivots.tolist())]
    t = field.tables
    out = np.zeros((len(free), n), dtype=np.uint8)
    for i, fc in enumerate(free):
        out[i, fc] = 1
        # pivot var = -R[row, fc] for the row whose pivot precedes fc
        for row, pc in enumerate(pivots):
            out[i, pc] = t.neg[R[row, fc]]
    return out


def left_null_space(field: FieldSpec, M) -> np.ndarray:
    return null_space(field, as_matrix(M).T.copy())


def solve_right(field: FieldSpec, M, b) -> np.ndarray | None:
    """One solution x of M x^T = b^T, or None if inconsistent."""
    M = as_matrix(M)
    b = np.asarray(b, dtype=np.uint8).reshape(-1)
    if b.shape[0] != M.shape[0]:
        raise ShapeMismatch("rhs length mismatch")
    aug = np.concatenate([M, b[:, None]], axis=1)
    R, pivots, r = rref(field, aug)
    if any(p == M.shape[1] for p in pivots):
        return None
    x = np.zeros(M.shape[1], dtype=np.uint8)
    for row, pc in enumerate(pivots):
        x[pc] = R[row, M.shape[1]]
    return x


def in_row_space(field: FieldSpec, M, v) -> bool:
    """Whether v lies in the row space of M."""
    M = as_matrix(M)
    v = np.asarray(v, dtype=np.uint8).reshape(1, -1)
    r0 = rank(field, M)
    return rank(field, np.concatenate([M, v], axis=0)) == r0


def is_subspace(field: FieldSpec, A, B) -> bool:
    """Row space of A contained in row space of B."""
    A, B = as_matrix(A), as_matrix(B)
    rb = rank(field, B)
    return rank(field, np.concatenate([B, A], axis=0)) == rb


def intersect_row_spaces(field: FieldSpec, A, B) -> np.ndarray:
    """Basis of (row space of A) meet (row space of B).

    Uses the kernel of the stacked matrix [A; B]: a kernel row (x, y)
    gives the intersection vector x A = -y B.
    """
    A = row_basis(field, A)
    B = row_basis(field, B)
    if A.shape[0] == 0 or B.shape[0] == 0:
        return np.zeros((0, as_matrix(A).shape[1]), dtype=np.uint8)
    if A.shape[1] != B.shape[1]:
        raise ShapeMismatch("ambient dimensions differ")
    stacked = np.concatenate([A, B], axis=0)
    ker = left_null_space(field, stacked)
    if ker.shape[0] == 0:
        return np.zeros((0, A.shape[1]), dtype=np.uint8)
    vecs = matmul(field, ker[:, :A.shape[0]], A)
    return row_basis(field, vecs)


def frobenius_matrix(field: FieldSpec, M, q0: int) -> np.ndarray:
    """Entrywise x -> x^q0."""
    return field.frobenius_table(q0)[as_matrix(M)]


def weight(v: np.ndarray) -> int:
    return int(np.count_nonzero(v))
