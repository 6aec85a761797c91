"""Projective and affine Reed-Muller codes with closed-form parameters.

PRM_d(q, m) evaluates the homogeneous polynomials of degree d in m+1
variables at the standard representatives of the projective space P^m;
RM_d(q, m) evaluates the polynomials of total degree at most d at the
points of the affine space.  Both come with exact dimension and minimum
distance formulas, which the evaluation matrices let us cross-check, and
with explicit minimum-weight codewords.

Degrees for PRM are restricted to 1 <= d <= m(q-1); within that range
distinct degrees give distinct codes and the closed forms below hold.
Internally d = 0 denotes the repetition code spanned by the all-ones
vector, which shows up as the extra summand of some duals.
"""

from __future__ import annotations

import itertools
import math
from functools import cache

import numpy as np

from .codes import LinearCode
from .errors import DegreeOutOfRange
from .gf import FieldSpec
from .projective import affine_points, projective_points, projective_size


def _check_degree(q: int, m: int, d: int, lo: int = 1):
    if not lo <= d <= m * (q - 1):
        raise DegreeOutOfRange(
            f"degree {d} outside [{lo}, {m * (q - 1)}] for q={q}, m={m}")


def homogeneous_monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors summing to d, lexicographic order."""
    out = []
    for bars in itertools.combinations(range(d + nvars - 1), nvars - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + nvars - 2 - prev)
        out.append(tuple(exps))
    return out


def _evaluate_monomials(field: FieldSpec, points: np.ndarray,
                        monomials: list[tuple[int, ...]]) -> np.ndarray:
    d = max((max(e) for e in monomials), default=0)
    P = field.pow_lut(max(d, 1))
    mul = field.tables.mul
    rows = np.empty((len(monomials), points.shape[0]), dtype=np.uint8)
    for r, exps in enumerate(monomials):
        v = np.ones(points.shape[0], dtype=np.uint8)
        for i, e in enumerate(exps):
            if e:
                v = mul[v, P[points[:, i], e]]
        rows[r] = v
    return rows


@cache
def prm_code(field: FieldSpec, m: int, d: int) -> LinearCode:
    """The projective Reed-Muller code PRM_d(q, m) as an evaluation code."""
    n = projective_size(field.q, m)
    if d == 0:
        return LinearCode(field, np.ones((1, n), dtype=np.uint8))
    _check_degree(field.q, m, d)
    pts = projective_points(field, m)
    rows = _evaluate_monomials(field, pts, homogeneous_monomials(m + 1, d))
    code = LinearCode(field, rows)
    assert code.k == prm_dimension(field.q, m, d)
    return code


@cache
def rm_code(field: FieldSpec, m: int, d: int) -> LinearCode:
    """The affine (generalized) Reed-Muller code RM_d(q, m)."""
    if not 0 <= d <= m * (field.q - 1):
        raise DegreeOutOfRange(f"degree {d} outside [0, {m * (field.q - 1)}]")
    pts = affine_points(field, m)
    monos = [e for t in range(d + 1)
             for e in homogeneous_monomials(m, t)] if m else [()]
    rows = _evaluate_monomials(field, pts, monos)
    code = LinearCode(field, rows)
    assert code.k == rm_dimension(field.q, m, d)
    return code


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _binom(a: int, b: int) -> int:
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def prm_dimension(q: int, m: int, d: int) -> int:
    if d == 0:
        return 1
    _check_degree(q, m, d)
    total = 0
    for t in range(1, d + 1):
        if (d - t) % (q - 1) != 0:
            continue
        total += sum((-1) ** j * _binom(m + 1, j) * _binom(t - j * q + m, t - j * q)
                     for j in range(m + 2))
    return total


def prm_min_distance(q: int, m: int, d: int) -> int:
    _check_degree(q, m, d)
    r, ell = divmod(d - 1, q - 1)
    return (q - ell) * q ** (m - r - 1)


def rm_dimension(q: int, m: int, d: int) -> int:
    if d < 0:
        return 0
    d = min(d, m * (q - 1))
    total = 0
    for t in range(d + 1):
        total += sum((-1) ** j * _binom(m, j) * _binom(t - j * q + m - 1, t - j * q)
                     for j in range(m + 1))
    return total


def rm_min_distance(q: int, m: int, d: int) -> int:
    if not 0 <= d <= m * (q - 1):
        raise DegreeOutOfRange(f"degree {d} outside [0, {m * (q - 1)}]")
    r, ell = divmod(d, q - 1)
    if r == m:  # d = m(q-1): the code is all of GF(q)^{q^m}
        return 1
    return (q - ell) * q ** (m - r - 1)


def prm_dual_degree(q: int, m: int, d: int) -> int:
    _check_degree(q, m, d)
    return m * (q - 1) - d


def prm_dual_has_ones(q: int, d: int) -> bool:
    """Whether the dual of PRM_d picks up the all-ones summand."""
    return d % (q - 1) == 0


@cache
def prm_dual_code(field: FieldSpec, m: int, d: int) -> LinearCode:
    """PRM_d^perp built from the degree formula, not from a kernel.

    Equals PRM_{d'} with d' = m(q-1) - d, plus the span of the all-ones
    vector exactly when q-1 divides d.  (When d' = 0 the first summand is
    itself the all-ones span.)
    """
    q = field.q
    dperp = prm_dual_degree(q, m, d)
    base = prm_code(field, m, dperp)
    if prm_dual_has_ones(q, d):
        ones = np.ones((1, base.n), dtype=np.uint8)
        base = base.sum_with(LinearCode(field, ones))
    return base


def prm_dual_min_distance(q: int, m: int, d: int) -> int:
    """Minimum distance of PRM_d^perp via the dual-degree closed form.

    Only defined when the dual is a plain PRM code: for d = m(q-1) the
    dual is the all-ones span (distance n), and when q-1 does not divide
    d the dual is PRM at the dual degree.  When the dual picks up the
    all-ones summand its minimum weight has no closed form here, because
    shifting a minimum-weight word by a constant can lower the weight.
    """
    dperp = prm_dual_degree(q, m, d)
    if dperp == 0:
        return projective_size(q, m)
    if prm_dual_has_ones(q, d):
        raise DegreeOutOfRange(
            f"no closed form for wt(PRM_d^perp) when {q - 1} divides d={d}")
    return prm_min_distance(q, m, dperp)


# ---------------------------------------------------------------------------
# explicit minimum-weight codewords
# ---------------------------------------------------------------------------

def rm_min_weight_vector(field: FieldSpec, m: int, d: int) -> np.ndarray:
    """A codeword of RM_d(q, m) attaining the minimum distance.

    With d = r(q-1) + ell, the polynomial
        prod_{i<=r} (1 - y_i^{q-1}) * prod_{j<=ell} (y_{r+1} - a_j)
    (a_j the first ell field elements) has total degree d and exactly
    (q - ell) q^{m-r-1} nonzero values.
    """
    q = field.q
    if not 0 <= d <= m * (q - 1):
        raise DegreeOutOfRange(f"degree {d} outside [0, {m * (q - 1)}]")
    r, ell = divmod(d, q - 1)
    if r == m:
        r, ell = m - 1, q - 1  # same degree, keeps an honest free variable
    pts = affine_points(field, m)
    t = field.tables
    v = np.ones(pts.shape[0], dtype=np.uint8)
    for i in range(r):
        factor = t.add[1, t.neg[field.pow_lut(q - 1)[pts[:, i], q - 1]]]
        v = t.mul[v, factor]
    for a in range(ell):
        factor = t.add[pts[:, r], t.neg[a]]
        v = t.mul[v, factor]
    return v


def prm_min_weight_vector(field: FieldSpec, m: int, d: int) -> np.ndarray:
    """A codeword of PRM_d(q, m) attaining the minimum distance.

    A degree-(d-1) affine minimum-weight polynomial, homogenized with an
    extra factor of x_0, evaluates to zero off the affine chart x_0 = 1
    and keeps its affine weight (q - ell) q^(m-r-1), d - 1 = r(q-1) + ell.
    """
    _check_degree(field.q, m, d)
    affine = rm_min_weight_vector(field, m, d - 1)
    v = np.zeros(projective_size(field.q, m), dtype=np.uint8)
    v[:affine.shape[0]] = affine  # block B_m comes first in the point order
    return v
