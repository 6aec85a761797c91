"""Hull engineering for projective Reed-Muller codes.

Two tools are combined here.  A rootless polynomial evaluated along one
line of the projective space yields a full-weight vector in the dual of
PRM_d, so rescaling coordinates with it makes a pair of PRM codes (or a
code and its conjugate) orthogonal without touching weights.  Single
coordinate rescalings then move the hull dimension in steps of one,
because each changes the relevant pairing matrix by a rank-one update.
All sweeps are deterministic: coordinates ascend, candidate scalars
follow the field's element order, and the first move that works is kept.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la
from .codes import LinearCode, conjugate_matrix, quadratic_base
from .errors import (
    BinaryFieldUnsupported,
    DegreeTooSmall,
    SweepExhausted,
)
from .gf import FieldSpec, find_rootless_monic, poly_eval
from .projective import projective_points, projective_size


def full_weight_dual_vector(field: FieldSpec, m: int, d: int) -> np.ndarray:
    """A vector of weight n in the dual of PRM_d(q, m).

    For 1 <= d < q - 2 the vector takes the value t(z) at the points
    (0, ..., 0, 1, z) and 1 everywhere else, where t is the least monic
    irreducible of degree q - 1 - d; irreducibility keeps every entry
    nonzero.  For d a multiple of q - 1 the all-ones vector is already
    dual, so it is returned instead (any d up to m(q-1) is fine then).
    """
    q = field.q
    n = projective_size(q, m)
    if d % (q - 1) == 0:
        return np.ones(n, dtype=np.uint8)
    if not 1 <= d < q - 2:
        raise DegreeTooSmall(
            f"need 1 <= d < q-2 (or (q-1) | d); got d={d}, q={q}")
    t = find_rootless_monic(field, q - 1 - d)
    v = np.ones(n, dtype=np.uint8)
    pts = projective_points(field, m)
    # the line (0, ..., 0, 1, z): leading one in position m-1
    lead = np.zeros(m + 1, dtype=np.uint8)
    lead[m - 1] = 1
    for i in range(n):
        if np.array_equal(pts[i, :m], lead[:m]):
            v[i] = poly_eval(field, t, int(pts[i, m]))
    assert not np.any(v == 0)
    return v


def hermitian_norm_vector(field: FieldSpec, m: int, d: int) -> np.ndarray:
    """A full-weight v with v^(q0+1) dual to the Schur products C * C^q0.

    field is GF(q0^2) and C = PRM_d(q0^2, m).  The rootless polynomial
    now has degree q0 - 1 - d (so d < q0 - 2 is required), and the norm
    w = v^(q0+1) lands in the base field and annihilates every product
    x * y^q0 of codewords; rescaling C by v therefore makes it Hermitian
    self-orthogonal whenever its dimension allows.
    """
    q0 = quadratic_base(field).q
    n = projective_size(field.q, m)
    if not 1 <= d < q0 - 2:
        raise DegreeTooSmall(f"need 1 <= d < q0-2; got d={d}, q0={q0}")
    t = find_rootless_monic(field, q0 - 1 - d)
    v = np.ones(n, dtype=np.uint8)
    pts = projective_points(field, m)
    lead = np.zeros(m + 1, dtype=np.uint8)
    lead[m - 1] = 1
    for i in range(n):
        if np.array_equal(pts[i, :m], lead[:m]):
            v[i] = poly_eval(field, t, int(pts[i, m]))
    assert not np.any(v == 0)
    return v


def relative_hull_dim(c1: LinearCode, c2: LinearCode) -> int:
    """dim(C1 cap C2^perp) = k1 - rank(G1 G2^T)."""
    if c1.k == 0 or c2.k == 0:
        return c1.k
    M = la.matmul(c1.field, c1.G, c2.G.T)
    return c1.k - la.rank(c1.field, M)


def hermitian_hull_dim(code: LinearCode) -> int:
    if code.k == 0:
        return 0
    M = la.matmul(code.field, code.G, conjugate_matrix(code.field, code.G).T)
    return code.k - la.rank(code.field, M)


def set_relative_hull_dim(c1: LinearCode, c2: LinearCode, target: int
                          ) -> tuple[LinearCode, np.ndarray]:
    """Rescale coordinates of c2 until dim(C1 cap C2^perp) hits target.

    Returns the rescaled c2 and the cumulative scaling vector.  Each
    accepted move multiplies one coordinate by one scalar and shifts the
    hull dimension a single step toward the target.
    """
    field = c1.field
    q = field.q
    current = relative_hull_dim(c1, c2)
    upper = min(c1.k, c1.n - c2.k)
    if not 0 <= target <= upper or target > c1.k:
        raise SweepExhausted(
            f"target hull dimension {target} outside [0, {upper}]")
    if current == target:
        return c2, np.ones(c1.n, dtype=np.uint8)
    if q == 2:
        raise BinaryFieldUnsupported(
            "coordinate rescaling cannot move hulls over GF(2)")
    mul = field.tables.mul
    s = np.ones(c1.n, dtype=np.uint8)
    G2 = c2.G.copy()
    guard = 0
    while current != target:
        moved = False
        for i in range(c1.n):
            for a in range(2, q):
                G2try = G2.copy()
                G2try[:, i] = mul[a, G2try[:, i]]
                trial = LinearCode(field, G2try)
                newdim = relative_hull_dim(c1, trial)
                want = current - 1 if target < current else current + 1
                if newdim == want:
                    G2 = G2try
                    s[i] = field.mul_codes(a, int(s[i]))
                    current = newdim
                    moved = True
                    break
            if moved:
                break
        if not moved:
            raise SweepExhausted(
                f"stuck at hull dimension {current}, target {target}")
        guard += 1
        if guard > c1.n * q:
            raise SweepExhausted("sweep failed to converge")
    return LinearCode(field, G2), s


def set_hermitian_hull_dim(code: LinearCode, target: int
                           ) -> tuple[LinearCode, np.ndarray]:
    """Rescale coordinates of a code until its Hermitian hull hits target."""
    field = code.field
    q = field.q
    q0 = quadratic_base(field).q
    current = hermitian_hull_dim(code)
    if not 0 <= target <= code.k:
        raise SweepExhausted(f"target hull dimension {target} outside range")
    if current == target:
        return code, np.ones(code.n, dtype=np.uint8)
    mul = field.tables.mul
    s = np.ones(code.n, dtype=np.uint8)
    G = code.G.copy()
    guard = 0
    while current != target:
        moved = False
        for i in range(code.n):
            for a in range(2, q):
                if field.pow_code(a, q0 + 1) == 1:
                    continue  # norm-one scalars leave the pairing unchanged
                Gtry = G.copy()
                Gtry[:, i] = mul[a, Gtry[:, i]]
                trial = LinearCode(field, Gtry)
                newdim = hermitian_hull_dim(trial)
                want = current - 1 if target < current else current + 1
                if newdim == want:
                    G = Gtry
                    s[i] = field.mul_codes(a, int(s[i]))
                    current = newdim
                    moved = True
                    break
            if moved:
                break
        if not moved:
            raise SweepExhausted(
                f"stuck at Hermitian hull dimension {current}, target {target}")
        guard += 1
        if guard > code.n * q:
            raise SweepExhausted("sweep failed to converge")
    return LinearCode(field, G), s
