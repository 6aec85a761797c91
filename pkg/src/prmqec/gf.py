"""Exact arithmetic in GF(p^k) with a deterministic modulus choice.

Elements are stored in the polynomial basis over the prime field.  An
element with representation vector (r_0, ..., r_{k-1}) -- r_i the
coefficient of x^i -- is encoded as the integer sum(r_i * p^i), so element
codes run over 0 .. q-1 and the encoding order doubles as the canonical
element order.  All arithmetic is table driven: each field carries dense
add/mul/neg/inv lookup tables (q <= ~100 everywhere in this library, so
the tables are tiny) that the linear-algebra kernels index directly.

The default modulus of GF(p^k) is the lexicographically least monic
primitive polynomial of degree k over GF(p), coefficients compared
constant term first.  A user-supplied modulus only needs to be monic and
irreducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    DegreeTooSmall,
    FieldMismatch,
    InvalidSubfieldSize,
    NonPrimeP,
    NotASubfield,
    ReducibleModulus,
    ZeroInverse,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending (trial division, desk scale)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^k for prime p; raises NonPrimeP otherwise."""
    ps = prime_factors(q)
    if len(ps) != 1:
        raise NonPrimeP(f"{q} is not a prime power")
    p = ps[0]
    k = 0
    while q > 1:
        q //= p
        k += 1
    return p, k


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^k) with a fixed monic irreducible modulus.

    The modulus is stored as a coefficient tuple of length k+1, constant
    term first, leading coefficient 1.  Instances are immutable and
    hashable; the heavyweight lookup tables live in a per-spec cache.
    """

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.k

    # -- encoding helpers -------------------------------------------------

    def encode(self, rep: Sequence[int]) -> int:
        code = 0
        for r in reversed(list(rep)):
            code = code * self.p + (r % self.p)
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        rep = []
        for _ in range(self.k):
            rep.append(code % self.p)
            code //= self.p
        return tuple(rep)

    def element(self, value) -> "FieldElement":
        """Wrap an element code (int) or representation vector."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            value = self.encode(value)
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"element code {value} outside [0, {self.q})")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterable["FieldElement"]:
        return (FieldElement(self, c) for c in range(self.q))

    # -- tables -----------------------------------------------------------

    @property
    def tables(self) -> "_FieldTables":
        return _tables_for(self)

    def add_codes(self, a: int, b: int) -> int:
        return int(self.tables.add[a, b])

    def mul_codes(self, a: int, b: int) -> int:
        return int(self.tables.mul[a, b])

    def neg_code(self, a: int) -> int:
        return int(self.tables.neg[a])

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return int(self.tables.inv[a])

    def pow_code(self, a: int, e: int) -> int:
        """a^e by square and multiply; e reduced mod q-1 for nonzero a."""
        if a == 0:
            if e == 0:
                return 1  # 0^0 := 1 (evaluation convention)
            if e < 0:
                raise ZeroInverse("negative power of zero")
            return 0
        e %= self.q - 1
        result, base = 1, a
        mul = self.tables.mul
        while e:
            if e & 1:
                result = int(mul[result, base])
            base = int(mul[base, base])
            e >>= 1
        return result

    @property
    def primitive_element(self) -> "FieldElement":
        return FieldElement(self, self.tables.generator)

    def frobenius_table(self, q0: int) -> np.ndarray:
        """Lookup table for x -> x^q0, with q0 = p^j, j | k."""
        t = self.tables
        if q0 not in t.frob:
            j = 0
            m = q0
            while m > 1 and m % self.p == 0:
                m //= self.p
                j += 1
            if m != 1 or j == 0 or self.k % j != 0:
                raise InvalidSubfieldSize(
                    f"{q0} is not p^j with j | {self.k} (p={self.p})")
            t.frob[q0] = np.array(
                [self.pow_code(a, q0) for a in range(self.q)], dtype=np.uint8)
        return t.frob[q0]

    def pow_lut(self, max_exp: int) -> np.ndarray:
        """Table P[a, e] = a^e for 0 <= e <= max_exp, with 0^0 = 1."""
        t = self.tables
        if t.pow_lut is None or t.pow_lut.shape[1] <= max_exp:
            P = np.empty((self.q, max_exp + 1), dtype=np.uint8)
            for a in range(self.q):
                acc = 1
                for e in range(max_exp + 1):
                    P[a, e] = acc
                    acc = self.mul_codes(acc, a)
            t.pow_lut = P
        return t.pow_lut

    def dlog(self, a: int) -> int:
        """Discrete log base the canonical primitive element (a != 0)."""
        if a == 0:
            raise ZeroInverse("discrete log of zero")
        return int(self.tables.log[a])

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


class _FieldTables:
    """Dense lookup tables for one FieldSpec (built lazily, cached)."""

    __slots__ = ("add", "mul", "neg", "inv", "generator", "exp", "log",
                 "frob", "pow_lut")

    def __init__(self, spec: FieldSpec):
        p, k, q = spec.p, spec.k, spec.q
        digits = np.empty((q, k), dtype=np.int64)
        for c in range(q):
            digits[c] = spec.decode(c)
        weights = p ** np.arange(k, dtype=np.int64)

        self.add = ((digits[:, None, :] + digits[None, :, :]) % p @ weights
                    ).astype(np.uint8)
        self.neg = (((-digits) % p) @ weights).astype(np.uint8)

        # x^e mod modulus for e up to 2k-2, as coefficient rows
        red = np.zeros((2 * k - 1, k), dtype=np.int64)
        for e in range(2 * k - 1):
            if e < k:
                red[e, e] = 1
            else:
                # x^e = x * x^(e-1) reduced
                shifted = np.zeros(k + 1, dtype=np.int64)
                shifted[1:] = red[e - 1]
                lead = shifted[k]
                shifted = shifted[:k] - lead * np.array(spec.modulus[:k])
                red[e] = shifted % p
        conv = np.einsum("ai,bj->abij", digits, digits)
        prod = np.zeros((q, q, 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                prod[:, :, i + j] += conv[:, :, i, j]
        self.mul = (((prod % p) @ red % p) @ weights).astype(np.uint8)

        self.inv = np.zeros(q, dtype=np.uint8)
        ones = np.argwhere(self.mul == 1)
        for a, b in ones:
            self.inv[a] = b

        # least multiplicative generator by element code
        self.generator = 0
        for g in range(1, q):
            order, acc = 1, g
            while acc != 1:
                acc = int(self.mul[acc, g])
                order += 1
            if order == q - 1:
                self.generator = g
                break
        self.exp = np.zeros(q - 1, dtype=np.uint8)
        self.log = np.zeros(q, dtype=np.int64)
        acc = 1
        for i in range(q - 1):
            self.exp[i] = acc
            self.log[acc] = i
            acc = int(self.mul[acc, self.generator])

        self.frob = {}
        self.pow_lut = None


_TABLE_CACHE: dict[FieldSpec, _FieldTables] = {}
_FIELD_CACHE: dict[tuple[int, int, tuple[int, ...]], FieldSpec] = {}
_SUBFIELD_CACHE: dict[tuple[FieldSpec, FieldSpec], "SubfieldContext"] = {}


def _tables_for(spec: FieldSpec) -> _FieldTables:
    t = _TABLE_CACHE.get(spec)
    if t is None:
        t = _FieldTables(spec)
        _TABLE_CACHE[spec] = t
    return t


class FieldElement:
    """An element of a FieldSpec; immutable, arithmetic via field tables."""

    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = code

    @property
    def rep(self) -> tuple[int, ...]:
        return self.field.decode(self.code)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("elements from different fields")
            return other
        if isinstance(other, int):
            return self.field.element(other % self.field.p if self.field.k == 1
                                      else other)
        raise TypeError(f"cannot combine FieldElement with {type(other)}")

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.add_codes(self.code, o.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul_codes(self.code, o.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_code(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_code(self.code))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            other = FieldElement(self.field, other) if 0 <= other < self.field.q \
                else None
        return (isinstance(other, FieldElement) and other.field == self.field
                and other.code == self.code)

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"{self.field}:{self.code}"


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists of element codes, constant first)
# ---------------------------------------------------------------------------

def poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_eval(field: FieldSpec, f: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = field.add_codes(field.mul_codes(acc, x), c)
    return acc


def poly_mul(field: FieldSpec, f: Sequence[int], g: Sequence[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = field.add_codes(out[i + j], field.mul_codes(a, b))
    return poly_trim(out)


def poly_mod(field: FieldSpec, f: Sequence[int], g: Sequence[int]) -> list[int]:
    f = poly_trim(list(f))
    g = poly_trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv_lead = field.inv_code(g[-1])
    while len(f) >= len(g):
        coef = field.mul_codes(f[-1], inv_lead)
        shift = len(f) - len(g)
        for i, b in enumerate(g):
            f[shift + i] = field.add_codes(
                f[shift + i], field.neg_code(field.mul_codes(coef, b)))
        poly_trim(f)
    return f


def poly_gcd(field: FieldSpec, f: Sequence[int], g: Sequence[int]) -> list[int]:
    a, b = poly_trim(list(f)), poly_trim(list(g))
    while b:
        a, b = b, poly_mod(field, a, b)
    if a:
        inv_lead = field.inv_code(a[-1])
        a = [field.mul_codes(c, inv_lead) for c in a]
    return a


def poly_powmod(field: FieldSpec, base: Sequence[int], e: int,
                mod: Sequence[int]) -> list[int]:
    result = [1]
    acc = poly_mod(field, list(base), mod)
    while e:
        if e & 1:
            result = poly_mod(field, poly_mul(field, result, acc), mod)
        acc = poly_mod(field, poly_mul(field, acc, acc), mod)
        e >>= 1
    return result


def poly_is_irreducible(field: FieldSpec, f: Sequence[int]) -> bool:
    """Rabin irreducibility test over the field, desk-scale degrees."""
    f = poly_trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    q = field.q
    x = [0, 1]
    # x^(q^n) == x mod f
    acc = list(x)
    for _ in range(n):
        acc = poly_powmod(field, acc, q, f)
    if poly_trim([field.add_codes(a, field.neg_code(b))
                  for a, b in itertools.zip_longest(acc, x, fillvalue=0)]):
        return False
    for r in prime_factors(n):
        acc = list(x)
        for _ in range(n // r):
            acc = poly_powmod(field, acc, q, f)
        diff = [field.add_codes(a, field.neg_code(b))
                for a, b in itertools.zip_longest(acc, x, fillvalue=0)]
        if len(poly_gcd(field, diff, f)) > 1:
            return False
    return True


def _poly_is_primitive(field: FieldSpec, f: Sequence[int]) -> bool:
    """x generates the multiplicative group of field[x]/(f)."""
    n = len(f) - 1
    order = field.q ** n - 1
    if not poly_is_irreducible(field, f):
        return False
    for r in prime_factors(order):
        power = poly_powmod(field, [0, 1], order // r, f)
        if power == [1]:
            return False
    return True


def _least_primitive_poly(p: int, k: int) -> tuple[int, ...]:
    base = _FIELD_CACHE.get((p, 1, (0, 1))) or field_make(p, 1)
    for tail in itertools.product(range(p), repeat=k):
        f = list(tail) + [1]
        if _poly_is_primitive(base, f):
            return tuple(f)
    raise RuntimeError(f"no primitive polynomial of degree {k} over GF({p})")


# ---------------------------------------------------------------------------
# public constructors and operations
# ---------------------------------------------------------------------------

def field_make(p: int, k: int, modulus: Optional[Sequence[int]] = None
               ) -> FieldSpec:
    """Build (or fetch the cached) GF(p^k).

    When modulus is omitted the lexicographically least monic primitive
    polynomial of degree k is selected (for k = 1 the convention is the
    polynomial x).  A user modulus must be monic of degree k and
    irreducible over GF(p).
    """
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")

    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ReducibleModulus(
                f"modulus must be monic of degree {k}, got {modulus}")
    key0 = (p, k, modulus)
    if key0 in _FIELD_CACHE:
        return _FIELD_CACHE[key0]

    if k == 1:
        resolved = modulus if modulus is not None else (0, 1)
        spec = FieldSpec(p, 1, resolved)
    else:
        if modulus is None:
            resolved = _least_primitive_poly(p, k)
        else:
            base = field_make(p, 1)
            if not poly_is_irreducible(base, list(modulus)):
                raise ReducibleModulus(
                    f"{modulus} is reducible over GF({p})")
            resolved = modulus
        spec = FieldSpec(p, k, resolved)

    spec = _FIELD_CACHE.setdefault((p, k, resolved), spec)
    _FIELD_CACHE[key0] = spec
    return spec


def field_for_order(q: int) -> FieldSpec:
    """GF(q) with the default modulus, for any prime power q."""
    p, k = factor_prime_power(q)
    return field_make(p, k)


def frobenius(a: FieldElement, q0: int) -> FieldElement:
    """a -> a^q0, an automorphism fixing the subfield of size q0."""
    table = a.field.frobenius_table(q0)
    return FieldElement(a.field, int(table[a.code]))


def in_subfield(a: FieldElement, q0: int) -> bool:
    """x lies in GF(q0) iff x^q0 = x."""
    return int(a.field.frobenius_table(q0)[a.code]) == a.code


class SubfieldContext:
    """Precomputed embedding/coordinate data for a subfield pair.

    For base = GF(q) inside field = GF(q^s), covers: the canonical
    embedding (primitive element of the base maps to g^((Q-1)/(q-1)) for
    the field's canonical primitive g), the partial inverse, coordinates
    of every field element w.r.t. the basis {g^i : 0 <= i < s} over the
    embedded base, and the trace down to the base.
    """

    def __init__(self, field: FieldSpec, base: FieldSpec):
        if field.p != base.p or field.k % base.k != 0:
            raise NotASubfield(f"{base} does not embed into {field}")
        self.field = field
        self.base = base
        self.s = field.k // base.k
        p, Q, qb = field.p, field.q, base.q

        # embedding table: send the residue class x of the base modulus to
        # the least root h of that modulus in the big field (prime-field
        # coefficients embed as themselves under the digit encoding), then
        # extend linearly over the base digits.
        embed = np.zeros(qb, dtype=np.uint8)
        if base.k == 1:
            embed[:] = np.arange(qb)
        else:
            mod = [c % p for c in base.modulus]
            h = next(e for e in range(Q) if poly_eval(field, mod, e) == 0)
            hp = [field.pow_code(h, i) for i in range(base.k)]
            for a in range(qb):
                acc = 0
                for digit, hi in zip(base.decode(a), hp):
                    acc = field.add_codes(acc, field.mul_codes(digit, hi))
                embed[a] = acc
        self.embed = embed

        lift = np.full(Q, 255, dtype=np.uint8)
        lift[embed] = np.arange(qb, dtype=np.uint8)
        lift[0] = 0
        self.lift = lift  # 255 marks "not in the embedded base field"

        # coordinates over the basis {g^i} with base-field coefficients:
        # build the GF(p)-matrix of (c_0..c_{s-1}) -> sum embed(c_i) g^i
        K = field.k
        A = np.zeros((K, K), dtype=np.int64)
        col = 0
        for i in range(self.s):
            gi = field.pow_code(field.tables.generator, i) if i else 1
            for j in range(base.k):
                basis_elt = base.encode(tuple(1 if t == j else 0
                                              for t in range(base.k)))
                img = field.mul_codes(int(embed[basis_elt]), gi)
                A[:, col] = field.decode(img)
                col += 1
        Ainv = _invert_mod_p(A, p)
        coords = np.zeros((Q, self.s), dtype=np.uint8)
        for e in range(Q):
            vec = (Ainv @ np.array(field.decode(e), dtype=np.int64)) % p
            for i in range(self.s):
                coords[e, i] = base.encode(vec[i * base.k:(i + 1) * base.k])
        self.coords = coords

        # trace to the base field (sum of conjugates, then lifted)
        frob = field.frobenius_table(qb)
        tr = np.zeros(Q, dtype=np.uint8)
        for e in range(Q):
            acc, conj = 0, e
            for _ in range(self.s):
                acc = field.add_codes(acc, conj)
                conj = int(frob[conj])
            tr[e] = acc
        self.trace_in_field = tr
        self.trace = lift[tr]
        if np.any(self.trace == 255):
            raise AssertionError("trace landed outside the base field")


def subfield_context(field: FieldSpec, base: FieldSpec) -> SubfieldContext:
    key = (field, base)
    ctx = _SUBFIELD_CACHE.get(key)
    if ctx is None:
        ctx = SubfieldContext(field, base)
        _SUBFIELD_CACHE[key] = ctx
    return ctx


def embed_subfield(a: FieldElement, target: FieldSpec) -> FieldElement:
    """Canonical ring embedding GF(p^j) -> GF(p^k) for j | k."""
    ctx = subfield_context(target, a.field)
    return FieldElement(target, int(ctx.embed[a.code]))


def _invert_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a small integer matrix mod p (plain Gauss-Jordan)."""
    n = A.shape[0]
    M = np.concatenate([A % p, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r, col] % p)
        if piv != col:
            M[[col, piv]] = M[[piv, col]]
        M[col] = (M[col] * pow(int(M[col, col]), -1, p)) % p
        for r in range(n):
            if r != col and M[r, col]:
                M[r] = (M[r] - M[r, col] * M[col]) % p
    return M[:, n:]


def power_sum(field: FieldSpec, gamma: int) -> FieldElement:
    """Sum of z^gamma over all z in the field, with 0^0 := 1.

    Vanishes unless gamma is a positive multiple of q-1, in which case it
    equals -1.
    """
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    q = field.q
    if gamma == 0 or gamma % (q - 1) != 0:
        return field.zero
    return -field.one


def find_rootless_monic(field: FieldSpec, degree: int) -> list[int]:
    """Lexicographically least monic irreducible of the given degree.

    Degree >= 2 guarantees the result has no roots in the field.
    Coefficients are element codes, constant term first.
    """
    if degree < 2:
        raise DegreeTooSmall("degree must be >= 2 to guarantee rootlessness")
    for tail in itertools.product(range(field.q), repeat=degree):
        if tail[0] == 0:
            continue  # zero constant term means 0 is a root
        f = list(tail) + [1]
        if any(poly_eval(field, f, z) == 0 for z in range(field.q)):
            continue  # cheap screen before the full irreducibility test
        if poly_is_irreducible(field, f):
            return f
    raise RuntimeError("no irreducible polynomial found")  # unreachable
