import itertools

import numpy as np
import pytest

from prmqec import linalg as la
from prmqec.codes import (
    LinearCode,
    euclidean_hull,
    frobenius_code,
    hermitian_dual,
    hermitian_hull,
    min_weight_certificate,
    quadratic_base,
    relative_hull,
    scale_coordinates,
    star_product,
    subfield_subcode,
    trace_code,
    weight_distribution,
)
from prmqec.errors import EmptyCode, FieldMismatch, NotAQuadraticExtension, \
    NotFullWeight
from prmqec.gf import field_for_order, subfield_context


def random_code(rng, q, k, n):
    F = field_for_order(q)
    return LinearCode(F, rng.integers(0, q, size=(k, n)).astype(np.uint8))


def codewords(code):
    """All codewords by brute force; exponential, test-sized inputs only."""
    F = code.field
    t = F.tables
    for msg in itertools.product(range(F.q), repeat=code.k):
        c = np.zeros(code.n, dtype=np.uint8)
        for a, row in zip(msg, code.G):
            c = t.add[c, t.mul[a, row]]
        yield c


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_dual_involution_and_dimensions(q):
    rng = np.random.default_rng(q)
    for _ in range(10):
        C = random_code(rng, q, 4, 9)
        D = C.dual()
        assert C.k + D.k == C.n
        assert D.dual() == C
        if C.k and D.k:
            assert not la.matmul(C.field, C.G, D.G.T).any()


@pytest.mark.parametrize("q", [2, 3, 5])
def test_dual_membership_brute_force(q):
    rng = np.random.default_rng(100 + q)
    C = random_code(rng, q, 3, 6)
    D = C.dual()
    t = C.field.tables
    for w in codewords(D):
        for c in codewords(C):
            acc = 0
            for a, b in zip(c, w):
                acc = t.add[acc, t.mul[a, b]]
            assert acc == 0


@pytest.mark.parametrize("q", [3, 4, 9])
def test_hull_definitions(q):
    rng = np.random.default_rng(200 + q)
    for _ in range(10):
        C1 = random_code(rng, q, 4, 9)
        C2 = random_code(rng, q, 3, 9)
        H = relative_hull(C1, C2)
        assert C1.contains(H) and C2.dual().contains(H)
        assert H == C1.intersect(C2.dual())
        He = euclidean_hull(C1)
        assert C1.contains(He) and C1.dual().contains(He)


@pytest.mark.parametrize("q", [4, 9, 16, 25])
def test_hermitian_dual(q):
    F = field_for_order(q)
    q0 = quadratic_base(F).q
    rng = np.random.default_rng(300 + q)
    C = random_code(rng, q, 3, 8)
    Dh = hermitian_dual(C)
    assert C.k + Dh.k == C.n
    assert hermitian_dual(Dh) == C
    t = F.tables
    conj = F.frobenius_table(q0)
    for x in C.G:
        for y in Dh.G:
            acc = 0
            for a, b in zip(x, y):
                acc = t.add[acc, t.mul[a, conj[b]]]
            assert acc == 0
    H = hermitian_hull(C)
    assert C.contains(H) and Dh.contains(H)


def test_hermitian_dual_requires_square_field():
    C = LinearCode(field_for_order(8), np.eye(3, dtype=np.uint8))
    with pytest.raises(NotAQuadraticExtension):
        hermitian_dual(C)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_star_product_identity_and_commutativity(q):
    F = field_for_order(q)
    rng = np.random.default_rng(400 + q)
    A = random_code(rng, q, 3, 8)
    B = random_code(rng, q, 2, 8)
    ones = LinearCode(F, np.ones((1, 8), dtype=np.uint8))
    assert star_product(A, ones) == A
    assert star_product(A, B) == star_product(B, A)
    # membership: every pairwise product of codewords lies in the span
    P = star_product(A, B)
    mul = F.tables.mul
    for x in A.G:
        for y in B.G:
            assert P.contains_vector(mul[x, y])


@pytest.mark.parametrize("Q,q", [(4, 2), (9, 3), (16, 4), (16, 2), (64, 8)])
def test_subfield_subcode_methods_agree(Q, q):
    rng = np.random.default_rng(Q * 10 + q)
    big, base = field_for_order(Q), field_for_order(q)
    for _ in range(5):
        C = LinearCode(big, rng.integers(0, Q, size=(3, 7)).astype(np.uint8))
        assert subfield_subcode(C, base, "kernel") == \
            subfield_subcode(C, base, "expand")


@pytest.mark.parametrize("Q,q", [(4, 2), (9, 3), (16, 4)])
def test_subfield_subcode_brute_force_oracle(Q, q):
    rng = np.random.default_rng(Q + q)
    big, base = field_for_order(Q), field_for_order(q)
    ctx = subfield_context(big, base)
    C = LinearCode(big, rng.integers(0, Q, size=(3, 6)).astype(np.uint8))
    members = [ctx.lift[c] for c in codewords(C)
               if np.all(ctx.lift[c] != 255)]
    brute = LinearCode(base, np.array(members, dtype=np.uint8))
    assert subfield_subcode(C, base) == brute


@pytest.mark.parametrize("Q,q", [(4, 2), (9, 3), (16, 4), (64, 8)])
def test_delsarte_duality(Q, q):
    """(C cap F_q^n)^perp = Tr(C^perp)."""
    rng = np.random.default_rng(Q - q)
    big, base = field_for_order(Q), field_for_order(q)
    for _ in range(5):
        C = LinearCode(big, rng.integers(0, Q, size=(4, 8)).astype(np.uint8))
        assert subfield_subcode(C, base).dual() == trace_code(C.dual(), base)


def test_scale_coordinates_rejects_zero_weight():
    F = field_for_order(3)
    C = LinearCode(F, np.eye(4, dtype=np.uint8))
    with pytest.raises(NotFullWeight):
        scale_coordinates(C, np.array([1, 0, 1, 1], dtype=np.uint8))


@pytest.mark.parametrize("q", [3, 4, 9])
def test_weight_enumerator_invariant_under_monomial_equivalence(q):
    F = field_for_order(q)
    rng = np.random.default_rng(500 + q)
    C = random_code(rng, q, 4, 9)
    v = rng.integers(1, q, size=9).astype(np.uint8)
    perm = rng.permutation(9)
    Cs = scale_coordinates(C, v)
    Cp = LinearCode(F, Cs.G[:, perm])
    assert np.array_equal(weight_distribution(C), weight_distribution(Cp))


def test_field_mismatch():
    C2 = LinearCode(field_for_order(2), np.eye(3, dtype=np.uint8))
    C3 = LinearCode(field_for_order(3), np.eye(3, dtype=np.uint8))
    with pytest.raises(FieldMismatch):
        C2.intersect(C3)


# -- distance certificates ---------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_certificates_match_weight_distribution(q):
    rng = np.random.default_rng(600 + q)
    for _ in range(8):
        C = random_code(rng, q, 5, 12)
        if C.k == 0:
            continue
        dist = weight_distribution(C)
        true_d = min(i for i in range(1, C.n + 1) if dist[i])
        cert = min_weight_certificate(C, budget=10 ** 7)
        assert cert.is_exact and cert.value == true_d
        assert C.contains_vector(cert.witness)
        assert la.weight(cert.witness) == true_d


@pytest.mark.parametrize("q,k", [(2, 23), (3, 15)])
def test_dependency_search_path(q, k):
    """Dimensions past the enumeration threshold take the parity-check
    column search route; the answer must agree with full enumeration."""
    rng = np.random.default_rng(700 + q)
    C = random_code(rng, q, k, k + 10)
    assert (q ** C.k - 1) // (q - 1) > 5_000_000  # forces the search path
    dist = weight_distribution(C)
    true_d = min(i for i in range(1, C.n + 1) if dist[i])
    cert = min_weight_certificate(C, budget=10 ** 8)
    assert cert.is_exact and cert.value == true_d
    assert C.contains_vector(cert.witness)
    assert la.weight(cert.witness) == true_d


def test_at_least_lower_bound():
    rng = np.random.default_rng(800)
    C = random_code(rng, 2, 23, 33)
    dist = weight_distribution(C)
    true_d = min(i for i in range(1, C.n + 1) if dist[i])
    cert = min_weight_certificate(C, budget=10 ** 8, at_least=true_d)
    # the sweep may prove the bound or stumble on a witness at the last level
    assert cert.value == true_d
    lower = min_weight_certificate(C, budget=10 ** 8, at_least=true_d - 1)
    assert lower.kind == "lower_bound" and lower.value == true_d - 1
    assert not lower.budget_exhausted


def test_budget_exhaustion_reports_lower_bound():
    rng = np.random.default_rng(900)
    # dual distance is comfortably above what a tiny budget can reach
    C = random_code(rng, 2, 60, 80)
    cert = min_weight_certificate(C, budget=2000)
    assert cert.kind == "lower_bound"
    assert cert.budget_exhausted
    assert cert.value >= 1


def test_empty_code_raises():
    C = LinearCode(field_for_order(2), np.zeros((1, 5), dtype=np.uint8))
    with pytest.raises(EmptyCode):
        min_weight_certificate(C)


def test_witnesses_are_deterministic():
    rng = np.random.default_rng(1000)
    C = random_code(rng, 3, 5, 12)
    a = min_weight_certificate(C, budget=10 ** 7)
    b = min_weight_certificate(C, budget=10 ** 7)
    assert np.array_equal(a.witness, b.witness) and a.steps == b.steps
