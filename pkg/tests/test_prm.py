import numpy as np
import pytest

from prmqec import linalg as la
from prmqec.codes import LinearCode, weight_distribution
from prmqec.errors import DegreeOutOfRange
from prmqec.gf import field_for_order
from prmqec.prm import (
    prm_code,
    prm_dimension,
    prm_dual_code,
    prm_dual_min_distance,
    prm_min_distance,
    prm_min_weight_vector,
    rm_code,
    rm_dimension,
    rm_min_distance,
    rm_min_weight_vector,
)
from prmqec.projective import projective_size

GRID = [(q, m) for q in (2, 3, 4, 5) for m in (1, 2, 3)] + \
       [(8, 1), (8, 2), (9, 1), (9, 2)]


def true_min_distance(code):
    dist = weight_distribution(code)
    return min(i for i in range(1, code.n + 1) if dist[i])


def test_dimension_spot_values():
    assert prm_dimension(8, 2, 1) == 3
    assert prm_dimension(8, 2, 4) == 15
    assert prm_dimension(4, 3, 1) == 4
    assert prm_dimension(9, 3, 2) == 10
    assert prm_dimension(16, 2, 1) == 3
    assert prm_dimension(25, 2, 2) == 6


@pytest.mark.parametrize("q,m", GRID)
def test_prm_dimension_matches_rank(q, m):
    F = field_for_order(q)
    for d in range(1, m * (q - 1) + 1):
        code = prm_code(F, m, d)  # construction asserts rank == formula
        assert code.n == projective_size(q, m)
        assert code.k == prm_dimension(q, m, d)


@pytest.mark.parametrize("q,m", GRID)
def test_prm_distance_formula_and_witness(q, m):
    F = field_for_order(q)
    for d in range(1, m * (q - 1) + 1):
        code = prm_code(F, m, d)
        w = prm_min_weight_vector(F, m, d)
        assert code.contains_vector(w)
        assert la.weight(w) == prm_min_distance(q, m, d)
        if q ** code.k <= 2 ** 18:
            assert true_min_distance(code) == prm_min_distance(q, m, d)


@pytest.mark.parametrize("q,m", GRID)
def test_prm_duality(q, m):
    F = field_for_order(q)
    for d in range(1, m * (q - 1) + 1):
        assert prm_code(F, m, d).dual() == prm_dual_code(F, m, d)


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (4, 2), (5, 1), (8, 1)])
def test_prm_dual_distance(q, m):
    F = field_for_order(q)
    top = m * (q - 1)
    for d in range(1, top + 1):
        D = prm_dual_code(F, m, d)
        if d < top and d % (q - 1) == 0:
            # all-ones summand present: no closed form is claimed
            with pytest.raises(DegreeOutOfRange):
                prm_dual_min_distance(q, m, d)
            continue
        if D.k and q ** D.k <= 2 ** 18:
            assert true_min_distance(D) == prm_dual_min_distance(q, m, d)
    assert prm_dual_min_distance(q, m, top) == D.n  # dual of the top degree


@pytest.mark.parametrize("q,m", GRID)
def test_rm_formulas(q, m):
    F = field_for_order(q)
    for d in range(0, m * (q - 1) + 1):
        code = rm_code(F, m, d)  # construction asserts rank == formula
        assert code.n == q ** m
        if d >= 1:
            w = rm_min_weight_vector(F, m, d)
            assert code.contains_vector(w)
            assert la.weight(w) == rm_min_distance(q, m, d)
        if d >= 1 and q ** code.k <= 2 ** 18:
            assert true_min_distance(code) == rm_min_distance(q, m, d)


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (4, 1), (5, 1)])
def test_rm_duality(q, m):
    F = field_for_order(q)
    top = m * (q - 1)
    for d in range(0, top):
        assert rm_code(F, m, d).dual() == rm_code(F, m, top - d - 1)
    full = rm_code(F, m, top)
    assert full.k == q ** m and full.dual().k == 0


@pytest.mark.parametrize("q,m", [(3, 2), (4, 2), (8, 2)])
def test_prm_distance_equals_affine_distance_one_lower(q, m):
    for d in range(1, m * (q - 1) + 1):
        assert prm_min_distance(q, m, d) == rm_min_distance(q, m, d - 1)


def test_degree_range_enforced():
    F = field_for_order(3)
    with pytest.raises(DegreeOutOfRange):
        prm_code(F, 2, 5)  # m(q-1) = 4
    with pytest.raises(DegreeOutOfRange):
        prm_code(F, 2, -1)
    with pytest.raises(DegreeOutOfRange):
        prm_dimension(3, 2, 5)
    with pytest.raises(DegreeOutOfRange):
        rm_code(F, 2, 5)


def test_nesting_within_congruence_class():
    """PRM_d is contained in PRM_{d'} when d <= d' and q-1 divides d'-d."""
    F = field_for_order(4)
    assert prm_code(F, 2, 4).contains(prm_code(F, 2, 1))
    assert prm_code(F, 2, 5).contains(prm_code(F, 2, 2))
