import numpy as np
import pytest

from prmqec.gf import field_for_order
from prmqec.projective import (
    affine_points,
    block_slices,
    projective_points,
    projective_size,
)


def test_worked_example_gf2_m2():
    F = field_for_order(2)
    pts = projective_points(F, 2)
    expected = [(1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1),
                (0, 1, 0), (0, 1, 1), (0, 0, 1)]
    assert [tuple(p) for p in pts] == expected


@pytest.mark.parametrize("q,m", [(2, 1), (2, 3), (3, 2), (4, 2), (5, 1),
                                 (8, 2), (9, 3)])
def test_point_count_and_standard_form(q, m):
    F = field_for_order(q)
    pts = projective_points(F, m)
    assert pts.shape == (projective_size(q, m), m + 1)
    for p in pts:
        lead = next(i for i in range(m + 1) if p[i])
        assert p[lead] == 1
    # no two points are projectively equivalent: standard reps are unique
    assert len({tuple(p) for p in pts}) == pts.shape[0]


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (4, 1), (5, 2)])
def test_every_projective_point_is_covered(q, m):
    """Scaling the representatives reaches every nonzero vector."""
    F = field_for_order(q)
    pts = projective_points(F, m)
    mul = F.tables.mul
    seen = set()
    for p in pts:
        for s in range(1, q):
            seen.add(tuple(int(x) for x in mul[s, p]))
    assert len(seen) == q ** (m + 1) - 1


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (8, 2), (9, 3)])
def test_block_structure(q, m):
    F = field_for_order(q)
    pts = projective_points(F, m)
    slices = block_slices(q, m)
    assert len(slices) == m + 1
    for lead, sl in enumerate(slices):
        block = pts[sl]
        assert block.shape[0] == q ** (m - lead)
        assert np.all(block[:, :lead] == 0)
        assert np.all(block[:, lead] == 1)
        # free coordinates run lexicographically, last fastest
        free = block[:, lead + 1:]
        keys = [tuple(int(x) for x in row) for row in free]
        assert keys == sorted(keys)


def test_affine_points_order():
    F = field_for_order(3)
    pts = affine_points(F, 2)
    assert pts.shape == (9, 2)
    assert [tuple(p) for p in pts[:4]] == [(0, 0), (0, 1), (0, 2), (1, 0)]
