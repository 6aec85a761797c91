"""Quantum code parameters from classical code pairs and Hermitian codes.

A pair C1, C2 of codes of the same length yields an entanglement-assisted
CSS code with

    c     = rank(G1 G2^T)          (pre-shared pairs)
    kappa = n - k1 - k2 + c        (logical qudits)
    delta_z = wt(C1^perp),  delta_x = wt(C2^perp)

and a single code C over GF(q0^2) yields a Hermitian construction with
c = k - dim(C cap C^perp_h), kappa = n - 2k + c, delta = wt(C^perp_h).
The delta values are design distances: the true distances can only be
larger (the codes are flagged pure only in the degenerate situation
where no dual word is a stabilizer, so every dual weight counts).

Both Gilbert-Varshamov style existence tests are evaluated in exact
integer arithmetic; a constructed code "surpasses" the bound when the
test reports that no code with its parameters is guaranteed to exist.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field as dfield
from typing import Optional

import numpy as np

from . import linalg as la
from .codes import (
    LinearCode,
    WeightCertificate,
    conjugate_matrix,
    hermitian_dual,
    min_weight_certificate,
    quadratic_base,
    scale_coordinates,
    subfield_subcode,
)
from .errors import ContainmentFailed, PreconditionViolated
from .gf import FieldSpec, factor_prime_power, field_make
from .hull import (
    full_weight_dual_vector,
    hermitian_hull_dim,
    hermitian_norm_vector,
    set_hermitian_hull_dim,
    set_relative_hull_dim,
)
from .prm import prm_code, prm_dual_min_distance


def _cert_dict(cert: Optional[WeightCertificate]) -> Optional[dict]:
    if cert is None:
        return None
    out = {
        "kind": cert.kind,
        "value": cert.value,
        "steps": cert.steps,
        "budget_exhausted": cert.budget_exhausted,
        "witness_hash": None,
    }
    if cert.witness is not None:
        out["witness_hash"] = hashlib.sha256(
            np.ascontiguousarray(cert.witness).tobytes()).hexdigest()
    return out


@dataclass
class CssRecord:
    """Parameters [[n, kappa, delta_z/delta_x; c]]_q of a CSS pair."""

    q: int
    n: int
    kappa: int
    c: int
    delta_z: int
    delta_x: int
    purity: str
    gv_surpassed: Optional[bool] = None
    cert_z: Optional[WeightCertificate] = None
    cert_x: Optional[WeightCertificate] = None
    notes: dict = dfield(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "family": "css",
            "q": self.q,
            "n": self.n,
            "kappa": self.kappa,
            "c": self.c,
            "delta_z": self.delta_z,
            "delta_x": self.delta_x,
            "purity": self.purity,
            "gv_surpassed": self.gv_surpassed,
            "cert_z": _cert_dict(self.cert_z),
            "cert_x": _cert_dict(self.cert_x),
        }
        d.update(self.notes)
        return d


@dataclass
class HermRecord:
    """Parameters [[n, kappa, delta; c]]_q of a Hermitian construction."""

    q: int
    n: int
    kappa: int
    c: int
    delta: int
    purity: str
    gv_surpassed: Optional[bool] = None
    cert: Optional[WeightCertificate] = None
    notes: dict = dfield(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "family": "hermitian",
            "q": self.q,
            "n": self.n,
            "kappa": self.kappa,
            "c": self.c,
            "delta": self.delta,
            "purity": self.purity,
            "gv_surpassed": self.gv_surpassed,
            "cert": _cert_dict(self.cert),
        }
        d.update(self.notes)
        return d


# ---------------------------------------------------------------------------
# parameter extraction
# ---------------------------------------------------------------------------

def css_shared_pairs(c1: LinearCode, c2: LinearCode) -> int:
    """c = rank(G1 G2^T) = k1 - dim(C1 cap C2^perp); symmetric in the pair."""
    c1._check_compatible(c2)
    if c1.k == 0 or c2.k == 0:
        return 0
    return la.rank(c1.field, la.matmul(c1.field, c1.G, c2.G.T))


def css_params(c1: LinearCode, c2: LinearCode) -> tuple[int, int, int]:
    """(n, kappa, c) of the CSS pair; kappa = n - k1 - k2 + c."""
    c = css_shared_pairs(c1, c2)
    kappa = c1.n - c1.k - c2.k + c
    if kappa < 0:
        raise PreconditionViolated(f"negative logical dimension {kappa}")
    return c1.n, kappa, c


def hermitian_params(code: LinearCode) -> tuple[int, int, int]:
    """(n, kappa, c) of the Hermitian construction on one code."""
    c = code.k - hermitian_hull_dim(code)
    kappa = code.n - 2 * code.k + c
    if kappa < 0:
        raise PreconditionViolated(f"negative logical dimension {kappa}")
    return code.n, kappa, c


def _css_purity(c1: LinearCode, c2: LinearCode, c: int,
                cert_z: Optional[WeightCertificate],
                cert_x: Optional[WeightCertificate]) -> str:
    exact = (cert_z is not None and cert_z.is_exact
             and cert_x is not None and cert_x.is_exact)
    trivial_hulls = c == c1.k and c == c2.k
    return "pure" if exact and trivial_hulls else "possibly_impure"


# ---------------------------------------------------------------------------
# the four construction families
# ---------------------------------------------------------------------------

@dataclass
class CssConstruction:
    record: CssRecord
    c1: LinearCode          # the code whose dual carries delta_z
    c2: LinearCode          # the (rescaled) code whose dual carries delta_x
    scaling: np.ndarray     # cumulative coordinate scaling applied


@dataclass
class HermConstruction:
    record: HermRecord
    code: LinearCode        # the (rescaled) Hermitian self-orthogonal code
    scaling: np.ndarray


def construct_css_prm(q: int, m: int, d1: int, d2: int, c: int = 0,
                      ) -> CssConstruction:
    """Entanglement-assisted CSS code from a pair of PRM codes.

    Takes C1 = PRM_{d2} and C2 = PRM_{d1} over GF(q), rescales C2 with a
    full-weight vector dual to PRM_{d1+d2} so the pair is orthogonal, and
    then rescales single coordinates until exactly c shared pairs remain.
    delta_z and delta_x are the dual-distance closed forms at d2 and d1.
    """
    field = field_make(*factor_prime_power(q))
    C1 = prm_code(field, m, d2)
    C2 = prm_code(field, m, d1)
    v = full_weight_dual_vector(field, m, d1 + d2)
    C2 = scale_coordinates(C2, v)
    if css_shared_pairs(C1, C2) != 0:
        raise ContainmentFailed("full-weight rescaling left the pair paired")
    if not 0 <= c <= min(C1.k, C2.k):
        raise PreconditionViolated(f"c={c} outside [0, {min(C1.k, C2.k)}]")
    scaling = v
    if c:
        C2, s = set_relative_hull_dim(C1, C2, C1.k - c)
        scaling = field.tables.mul[v, s]
    n, kappa, c_got = css_params(C1, C2)
    assert c_got == c
    rec = CssRecord(
        q=q, n=n, kappa=kappa, c=c,
        delta_z=prm_dual_min_distance(q, m, d2),
        delta_x=prm_dual_min_distance(q, m, d1),
        purity=_css_purity(C1, C2, c, None, None),
        notes={"construction": "css-prm", "m": m, "d1": d1, "d2": d2},
    )
    return CssConstruction(rec, C1, C2, scaling)


def construct_css_subfield(q: int, s: int, m: int, d1: int, d2: int,
                           budget: int = 10 ** 8,
                           distance_budget: Optional[dict] = None,
                           ) -> CssConstruction:
    """CSS code from subfield subcodes of a PRM pair over GF(q^s).

    Requires q^s - 1 to divide d1 + d2, which puts the all-ones vector in
    the dual of PRM_{d1+d2}(q^s, m) and makes the big-field pair -- hence
    the pair of subcodes over GF(q) -- orthogonal with no rescaling.  The
    dual distances have no closed form here, so they are certified by
    search within the given budget (delta then reports the certified
    value, exact or lower bound).
    """
    big = field_make(*factor_prime_power(q ** s))
    base = field_make(*factor_prime_power(q))
    if (d1 + d2) % (big.q - 1) != 0:
        raise PreconditionViolated(
            f"d1 + d2 = {d1 + d2} must be a multiple of q^s - 1 = {big.q - 1}")
    B1 = prm_code(big, m, d2)
    B2 = prm_code(big, m, d1)
    C1 = subfield_subcode(B1, base)
    C2 = subfield_subcode(B2, base)
    n, kappa, c = css_params(C1, C2)
    bz = (distance_budget or {}).get("z", budget)
    bx = (distance_budget or {}).get("x", budget)
    cert_z = min_weight_certificate(C1.dual(), bz)
    cert_x = min_weight_certificate(C2.dual(), bx)
    rec = CssRecord(
        q=q, n=n, kappa=kappa, c=c,
        delta_z=cert_z.value, delta_x=cert_x.value,
        purity=_css_purity(C1, C2, c, cert_z, cert_x),
        cert_z=cert_z, cert_x=cert_x,
        notes={"construction": "css-subfield", "s": s, "m": m,
               "d1": d1, "d2": d2},
    )
    return CssConstruction(rec, C1, C2, np.ones(n, dtype=np.uint8))


def construct_hermitian_prm(q: int, m: int, d: int, c: int = 0
                            ) -> HermConstruction:
    """Hermitian construction on C = PRM_d(q^2, m).

    When the Hermitian hull of C is already full the code is used as is;
    otherwise C is rescaled by a full-weight vector whose (q+1)-st power
    annihilates the products C * C^q, which restores self-orthogonality.
    A nonzero c then lowers the hull again by coordinate sweeps.
    """
    field = field_make(*factor_prime_power(q * q))
    C = prm_code(field, m, d)
    scaling = np.ones(C.n, dtype=np.uint8)
    if hermitian_hull_dim(C) < C.k:
        v = hermitian_norm_vector(field, m, d)
        C = scale_coordinates(C, v)
        scaling = v
        if hermitian_hull_dim(C) < C.k:
            raise ContainmentFailed(
                "rescaled code is still not Hermitian self-orthogonal")
    if not 0 <= c <= C.k:
        raise PreconditionViolated(f"c={c} outside [0, {C.k}]")
    if c:
        C, sv = set_hermitian_hull_dim(C, C.k - c)
        scaling = field.tables.mul[scaling, sv]
    n, kappa, c_got = hermitian_params(C)
    assert c_got == c
    rec = HermRecord(
        q=q, n=n, kappa=kappa, c=c,
        delta=prm_dual_min_distance(field.q, m, d),
        purity="pure" if c == C.k else "possibly_impure",
        notes={"construction": "hermitian-prm", "m": m, "d": d},
    )
    return HermConstruction(rec, C, scaling)


def construct_hermitian_subfield(q: int, s: int, m: int, lam: int,
                                 budget: int = 10 ** 8) -> HermConstruction:
    """Hermitian construction on a subfield subcode of a big-field PRM.

    The evaluation code lives over GF(Q) with Q = (q^2)^s and degree
    d = lam (Q - 1) / (q + 1), which must be integral and within range.
    Products x * y^q of subcode words then land in PRM_{lam(Q-1)}, whose
    dual contains the all-ones vector, so the subcode over GF(q^2) is
    Hermitian self-orthogonal as it stands.  delta is certified by search.
    """
    big = field_make(*factor_prime_power((q * q) ** s))
    mid = field_make(*factor_prime_power(q * q))
    num = lam * (big.q - 1)
    if num % (q + 1) != 0:
        raise PreconditionViolated(
            f"(q + 1) = {q + 1} must divide lam (Q - 1) = {num}")
    d = num // (q + 1)
    B = prm_code(big, m, d)
    C = subfield_subcode(B, mid)
    if hermitian_hull_dim(C) < C.k:
        raise ContainmentFailed("subcode is not Hermitian self-orthogonal")
    n, kappa, c = hermitian_params(C)
    cert = min_weight_certificate(hermitian_dual(C), budget)
    rec = HermRecord(
        q=q, n=n, kappa=kappa, c=c,
        delta=cert.value,
        purity="pure" if cert.is_exact and c == C.k else "possibly_impure",
        cert=cert,
        notes={"construction": "hermitian-subfield", "s": s, "m": m,
               "lam": lam, "d": d},
    )
    return HermConstruction(rec, C, np.ones(n, dtype=np.uint8))


# ---------------------------------------------------------------------------
# Gilbert-Varshamov style existence tests (exact integers throughout)
# ---------------------------------------------------------------------------

def _ball(n: int, q: int, radius: int) -> int:
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(radius + 1))


def gv_asymmetric_exists(q: int, n: int, kappa: int, c: int,
                         delta_z: int, delta_x: int) -> bool:
    """Whether an entanglement-assisted CSS code with these parameters is
    guaranteed to exist by counting; False means ours surpasses the bound.
    """
    l = n - kappa + c
    if n < 1 or not 1 <= l < n + c or min(delta_z, delta_x) < 1 \
            or not 0 <= 2 * c <= l:
        raise PreconditionViolated(
            f"counting bound needs n >= 1, 1 <= l < n+c, delta >= 1, "
            f"0 <= c <= l/2; got n={n}, l={l}, c={c}")
    sx = _ball(n, q, delta_x - 1)
    sz = _ball(n, q, delta_z - 1)
    lhs = (q ** (2 * n - l) - q ** (l - 2 * c)) * (sx * sz - 1)
    return lhs < q ** (2 * n) - 1


def gv_symmetric_exists(q: int, n: int, kappa: int, delta: int) -> bool:
    """Counting bound for Hermitian-construction codes over GF(q^2);
    False means the given parameters surpass it.
    """
    if n <= kappa or delta < 2 or (n - kappa) % 2 != 0:
        raise PreconditionViolated(
            f"counting bound needs n > kappa, delta >= 2, n = kappa mod 2; "
            f"got n={n}, kappa={kappa}, delta={delta}")
    lhs = (q ** (n - kappa + 2) - 1) // (q * q - 1)
    rhs = sum((q * q - 1) ** (i - 1) * math.comb(n, i)
              for i in range(1, delta))
    return lhs > rhs
