"""Linear codes over GF(q): duals, hulls, subfield subcodes, distances.

A LinearCode stores its canonical (reduced echelon) generator matrix, so
equal codes compare equal.  Minimum distances come back as explicit
certificates: either an exact value with a witness codeword, or a proved
lower bound when the search budget runs out first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg as la
from ._kernels import gf_enum_combos, gf_min_weight, gf_weight_distribution
from .errors import (
    EmptyCode,
    FieldMismatch,
    NotAQuadraticExtension,
    NotFullWeight,
    ShapeMismatch,
)
from .gf import FieldSpec, field_make, subfield_context


class LinearCode:
    """An [n, k] linear code, held as a canonical generator matrix."""

    def __init__(self, field: FieldSpec, generator):
        self.field = field
        self.G = la.row_basis(field, la.as_matrix(generator))
        self.n = int(self.G.shape[1])
        self.k = int(self.G.shape[0])

    @classmethod
    def from_parity_check(cls, field: FieldSpec, H) -> "LinearCode":
        return cls(field, la.null_space(field, H))

    def dual(self) -> "LinearCode":
        if self.k == 0:
            return LinearCode(self.field, np.eye(self.n, dtype=np.uint8))
        return LinearCode(self.field, la.null_space(self.field, self.G))

    def contains_vector(self, v) -> bool:
        if self.k == 0:
            return not np.any(np.asarray(v, dtype=np.uint8))
        return la.in_row_space(self.field, self.G, v)

    def contains(self, other: "LinearCode") -> bool:
        self._check_compatible(other)
        if other.k == 0:
            return True
        return la.is_subspace(self.field, other.G, self.G)

    def intersect(self, other: "LinearCode") -> "LinearCode":
        self._check_compatible(other)
        if self.k == 0 or other.k == 0:
            return LinearCode(self.field, np.zeros((0, self.n), dtype=np.uint8))
        return LinearCode(
            self.field, la.intersect_row_spaces(self.field, self.G, other.G))

    def sum_with(self, other: "LinearCode") -> "LinearCode":
        self._check_compatible(other)
        return LinearCode(self.field, np.concatenate([self.G, other.G], axis=0))

    def _check_compatible(self, other: "LinearCode"):
        if other.field != self.field:
            raise FieldMismatch("codes over different fields")
        if other.n != self.n:
            raise ShapeMismatch(f"lengths differ: {self.n} vs {other.n}")

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and other.field == self.field
                and other.n == self.n and other.k == self.k
                and np.array_equal(other.G, self.G))

    def __hash__(self):
        return hash((self.field, self.n, self.k, self.G.tobytes()))

    def __repr__(self):
        return f"[{self.n}, {self.k}] code over {self.field}"


# ---------------------------------------------------------------------------
# constructions on codes
# ---------------------------------------------------------------------------

def quadratic_base(field: FieldSpec) -> FieldSpec:
    """GF(q0) with q0^2 = |field|; the field of Hermitian conjugation."""
    if field.k % 2 != 0:
        raise NotAQuadraticExtension(f"{field} is not a quadratic extension")
    return field_make(field.p, field.k // 2, None)


def conjugate_matrix(field: FieldSpec, M) -> np.ndarray:
    """Entrywise x -> x^q0 where q0 = sqrt(|field|)."""
    q0 = quadratic_base(field).q
    return la.frobenius_matrix(field, M, q0)


def hermitian_dual(code: LinearCode) -> LinearCode:
    """C^{perp_h} = {x : sum_i x_i y_i^q0 = 0 for all y in C}.

    Equals the entrywise q0-th power of the Euclidean dual.
    """
    d = code.dual()
    return LinearCode(code.field, conjugate_matrix(code.field, d.G))


def relative_hull(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """Hull of c1 relative to c2: the intersection of c1 with c2's dual."""
    return c1.intersect(c2.dual())


def euclidean_hull(code: LinearCode) -> LinearCode:
    return relative_hull(code, code)


def hermitian_hull(code: LinearCode) -> LinearCode:
    return code.intersect(hermitian_dual(code))


def star_product(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """Schur (componentwise) product code, spanned by products of rows."""
    c1._check_compatible(c2)
    mul = c1.field.tables.mul
    rows = [mul[a, b] for a in c1.G for b in c2.G]
    if not rows:
        return LinearCode(c1.field, np.zeros((0, c1.n), dtype=np.uint8))
    return LinearCode(c1.field, np.array(rows, dtype=np.uint8))


def scale_coordinates(code: LinearCode, v) -> LinearCode:
    """Monomially equivalent code {c * v : c in C} for full-weight v."""
    v = np.asarray(v, dtype=np.uint8)
    if v.shape != (code.n,):
        raise ShapeMismatch(f"scaling vector must have length {code.n}")
    if np.any(v == 0):
        raise NotFullWeight("scaling vector has a zero coordinate")
    mul = code.field.tables.mul
    return LinearCode(code.field, mul[code.G, v[None, :]])


def frobenius_code(code: LinearCode, q0: int) -> LinearCode:
    """Entrywise x -> x^q0 applied to every codeword (a code again)."""
    return LinearCode(code.field, la.frobenius_matrix(code.field, code.G, q0))


# ---------------------------------------------------------------------------
# subfield subcodes
# ---------------------------------------------------------------------------

def subfield_subcode(code: LinearCode, base: FieldSpec,
                     method: str = "kernel") -> LinearCode:
    """C cap GF(q0)^n as a code over the base field.

    "kernel" computes the fixed space of the Frobenius x -> x^q0 inside C
    viewed as a base-field space of dimension s*k; its cost is governed
    by the code dimension, not the ambient length.  "expand" derives the
    subcode from the coordinate expansion of a parity check of C, which
    is quadratic in the length; it exists as an independent cross-check.
    """
    field = code.field
    ctx = subfield_context(field, base)
    if method == "expand":
        return _subfield_subcode_expand(code, base, ctx)
    if method != "kernel":
        raise ValueError(f"unknown method {method!r}")

    s, q0 = ctx.s, base.q
    if code.k == 0:
        return LinearCode(base, np.zeros((0, code.n), dtype=np.uint8))
    # base-field basis of C: g^j * row_i for 0 <= j < s
    g_pows = [field.pow_code(field.tables.generator, j) for j in range(s)]
    mul = field.tables.mul
    B = np.concatenate([mul[g, code.G] for g in g_pows], axis=0)  # (sk, n)
    frob = field.frobenius_table(q0)
    phi = field.tables.add[frob[B], field.tables.neg[B]]  # c^q0 - c, rowwise
    # coordinates of phi over the base field: (sk, s*n)
    phi_coords = ctx.coords[phi].reshape(B.shape[0], -1)
    ker = la.left_null_space(base, phi_coords)
    if ker.shape[0] == 0:
        return LinearCode(base, np.zeros((0, code.n), dtype=np.uint8))
    lifted = ctx.embed[ker]
    fixed = la.matmul(field, lifted, B)
    down = ctx.lift[fixed]
    assert not np.any(down == 255), "Frobenius-fixed vector left the subfield"
    return LinearCode(base, down)


def _subfield_subcode_expand(code: LinearCode, base: FieldSpec,
                             ctx) -> LinearCode:
    H = code.dual().G
    if H.shape[0] == 0:
        return LinearCode(base, np.eye(code.n, dtype=np.uint8))
    # each big-field parity row splits into s base-field rows
    expanded = ctx.coords[H]                      # (h, n, s)
    expanded = expanded.transpose(0, 2, 1).reshape(-1, code.n)
    return LinearCode.from_parity_check(base, expanded)


def trace_code(code: LinearCode, base: FieldSpec) -> LinearCode:
    """Entrywise trace image of C down to the base field."""
    field = code.field
    ctx = subfield_context(field, base)
    g_pows = [field.pow_code(field.tables.generator, j) for j in range(ctx.s)]
    mul = field.tables.mul
    if code.k == 0:
        return LinearCode(base, np.zeros((0, code.n), dtype=np.uint8))
    B = np.concatenate([mul[g, code.G] for g in g_pows], axis=0)
    return LinearCode(base, ctx.trace[B])


def lift_to_field(code: LinearCode, field: FieldSpec) -> LinearCode:
    """The big-field span of a base-field code's generator matrix."""
    ctx = subfield_context(field, code.field)
    return LinearCode(field, ctx.embed[code.G])


# ---------------------------------------------------------------------------
# minimum-distance certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightCertificate:
    """Outcome of a minimum-weight search.

    kind is "exact" (value is the minimum weight, witness attains it) or
    "lower_bound" (every nonzero codeword is certified to weigh at least
    value; witness is None).  steps counts candidate vectors actually
    examined; budget_exhausted marks searches cut short by the budget.
    """

    kind: str
    value: int
    witness: Optional[np.ndarray]
    steps: int
    budget_exhausted: bool

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"


_HASH_SEED = 0x9E3779B97F4A7C15
_MEM_CAP = 45_000_000  # max combos materialized per search side


def _hash_multipliers(h: int) -> np.ndarray:
    mask = (1 << 64) - 1
    out = np.empty(h, dtype=np.uint64)
    acc = 1
    for i in range(h):
        acc = (acc * _HASH_SEED + 0xD1B54A32D192ED03) & mask
        out[i] = acc | 1
    return out


def _combo_vector(field: FieldSpec, HT: np.ndarray, idx, pat: int
                  ) -> tuple[np.ndarray, np.ndarray]:
    """Recompute one combo: (coefficients on idx, combined column vector)."""
    q = field.q
    coeffs = [1]
    rem = int(pat)
    for _ in range(len(idx) - 1):
        coeffs.append(rem % (q - 1) + 1)
        rem //= q - 1
    v = np.zeros(HT.shape[1], dtype=np.uint8)
    add, mul = field.tables.add, field.tables.mul
    for c, i in zip(coeffs, idx):
        v = add[v, mul[c, HT[int(i)]]]
    return np.array(coeffs, dtype=np.uint8), v


def _enum_side(field: FieldSpec, HT: np.ndarray, s: int, rmult: np.ndarray):
    n = HT.shape[0]
    total = math.comb(n, s) * (field.q - 1) ** (s - 1)
    hashes = np.empty(total, dtype=np.uint64)
    idx = np.empty((total, s), dtype=np.uint16)
    pat = np.empty(total, dtype=np.uint32)
    t = field.tables
    count = gf_enum_combos(HT, s, t.add, t.mul, t.inv, rmult, hashes, idx, pat)
    assert count == total
    return hashes, idx, pat


def _level_cost(n: int, q: int, t: int) -> int:
    if t == 1:
        return n
    t1, t2 = t // 2, t - t // 2
    return (math.comb(n, t1) * (q - 1) ** (t1 - 1)
            + math.comb(n, t2) * (q - 1) ** (t2 - 1))


def _search_level(field: FieldSpec, HT: np.ndarray, t: int,
                  rmult: np.ndarray) -> Optional[np.ndarray]:
    """Least-weight dependency vector among any t columns, or None.

    Sound only when all levels below t are already known clean.
    """
    n = HT.shape[0]
    if t == 1:
        zero = np.where(~HT.any(axis=1))[0]
        if zero.size:
            x = np.zeros(n, dtype=np.uint8)
            x[int(zero[0])] = 1
            return x
        return None
    t1, t2 = t // 2, t - t // 2
    hA, iA, pA = _enum_side(field, HT, t1, rmult)
    if t1 == t2:
        hB, iB, pB = hA, iA, pA
    else:
        hB, iB, pB = _enum_side(field, HT, t2, rmult)
    order = np.argsort(hB, kind="stable")
    hBs = hB[order]
    lo = np.searchsorted(hBs, hA, side="left")
    hi = np.searchsorted(hBs, hA, side="right")
    cand = np.where(hi > lo)[0]
    best: Optional[np.ndarray] = None
    add, mul, neg, inv = (field.tables.add, field.tables.mul,
                          field.tables.neg, field.tables.inv)
    for a in cand:
        for pos in range(int(lo[a]), int(hi[a])):
            b = int(order[pos])
            if t1 == t2 and b == int(a):
                continue
            ca, va = _combo_vector(field, HT, iA[a], int(pA[a]))
            cb, vb = _combo_vector(field, HT, iB[b], int(pB[b]))
            la_ = next((x for x in va if x), 0)
            lb_ = next((x for x in vb if x), 0)
            if la_ == 0 or lb_ == 0:
                continue
            # normalized collision means va = mu * vb
            mu = int(mul[la_, inv[lb_]])
            if not np.array_equal(va, mul[mu, vb]):
                continue  # hash collision, not a real match
            x = np.zeros(n, dtype=np.uint8)
            for c, i in zip(ca, iA[a]):
                x[int(i)] = add[x[int(i)], c]
            for c, i in zip(cb, iB[b]):
                x[int(i)] = add[x[int(i)], neg[int(mul[mu, c])]]
            if not x.any():
                continue
            w = la.weight(x)
            if best is None or w < la.weight(best):
                best = x
                if w == t:
                    return best
    return best


def min_weight_certificate(code: LinearCode, budget: int = 10 ** 8,
                           at_least: Optional[int] = None) -> WeightCertificate:
    """Certify the minimum weight of a code.

    Exhausts small codes directly; otherwise sweeps column-dependency
    sizes of a parity check upward, so stopping at level t proves every
    nonzero codeword weighs at least t.  With at_least = w the sweep also
    stops once w is proved even if no witness has appeared, returning a
    lower bound.  steps counts candidate vectors examined.
    """
    field = code.field
    if code.k == 0:
        raise EmptyCode("the zero code has no nonzero codeword")
    q = field.q
    enum_cost = (q ** code.k - 1) // (q - 1)
    if enum_cost <= min(budget, 5_000_000):
        t = field.tables
        w, msg, steps, exhausted = gf_min_weight(
            code.G, t.add, t.mul, t.neg, budget)
        assert not exhausted
        witness = la.matmul(field, msg.reshape(1, -1), code.G)[0]
        return WeightCertificate("exact", int(w), witness, int(steps), False)

    HT = np.ascontiguousarray(code.dual().G.T)
    rmult = _hash_multipliers(HT.shape[1])
    steps = 0
    t = 1
    while t <= code.n:
        if at_least is not None and t > at_least:
            return WeightCertificate("lower_bound", at_least, None, steps,
                                     False)
        cost = _level_cost(code.n, q, t)
        side_max = max(cost if t == 1 else
                       math.comb(code.n, t - t // 2) * (q - 1) ** (t - t // 2 - 1),
                       1)
        if steps + cost > budget or side_max > _MEM_CAP:
            return WeightCertificate("lower_bound", t, None, steps, True)
        x = _search_level(field, HT, t, rmult)
        steps += cost
        if x is not None:
            assert code.contains_vector(x)
            return WeightCertificate("exact", la.weight(x), x, steps, False)
        t += 1
    raise EmptyCode("no nonzero codeword found; inconsistent input")


def weight_distribution(code: LinearCode) -> np.ndarray:
    """Full weight enumerator (index = weight); exponential in k."""
    if code.k == 0:
        out = np.zeros(code.n + 1, dtype=np.int64)
        out[0] = 1
        return out
    t = code.field.tables
    return gf_weight_distribution(code.G, t.add, t.mul, t.neg)
