"""Point enumeration for projective and affine spaces over GF(q).

Projective points use the standard representatives whose leftmost nonzero
coordinate is 1.  The enumeration is the block order B_m, B_{m-1}, ...,
B_0 where block B_i holds the points with the leading 1 in position m - i
(so |B_i| = q^i); inside a block the free coordinates run through the
field in element-code order, the last coordinate varying fastest.  For
GF(2), m = 2 this gives

    (1,0,0) (1,0,1) (1,1,0) (1,1,1) (0,1,0) (0,1,1) (0,0,1)

Affine points of GF(q)^m are enumerated the same way: element-code order,
last coordinate fastest.
"""

from __future__ import annotations

import itertools

import numpy as np

from .gf import FieldSpec


def projective_size(q: int, m: int) -> int:
    return (q ** (m + 1) - 1) // (q - 1)


def projective_points(field: FieldSpec, m: int) -> np.ndarray:
    """All n = (q^(m+1)-1)/(q-1) standard representatives of P^m.

    Returns an (n, m+1) uint8 array of element codes in block order.
    """
    q = field.q
    rows = []
    for lead in range(m + 1):  # block B_{m-lead}
        free = m - lead
        for tail in itertools.product(range(q), repeat=free):
            rows.append((0,) * lead + (1,) + tail)
    pts = np.array(rows, dtype=np.uint8)
    assert pts.shape == (projective_size(q, m), m + 1)
    return pts


def affine_points(field: FieldSpec, m: int) -> np.ndarray:
    """All q^m points of the affine space, (q^m, m) element codes."""
    q = field.q
    rows = list(itertools.product(range(q), repeat=m))
    return np.array(rows, dtype=np.uint8).reshape(q ** m, m)


def block_slices(q: int, m: int) -> list[slice]:
    """Index ranges of the blocks B_m, ..., B_0 within the point order."""
    out = []
    start = 0
    for lead in range(m + 1):
        size = q ** (m - lead)
        out.append(slice(start, start + size))
        start += size
    return out
