"""Numba kernels for table-driven GF(q) linear algebra.

All matrices are uint8 arrays of element codes; `add`/`mul` are the q x q
field tables and `neg`/`inv` the unary ones.  Everything here is
deterministic: pivots are chosen first-column, topmost-row, and codeword
enumerations run in a fixed odometer order.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def gf_rref(M, add, mul, neg, inv, pivots):
    """In-place reduced row echelon form; returns the rank.

    `pivots` must be a preallocated int64 array of length >= min(shape);
    pivots[:rank] receives the pivot column indices in order.
    """
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                t = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = t
        f = inv[M[r, c]]
        if f != 1:
            for j in range(c, cols):
                M[r, j] = mul[f, M[r, j]]
        for i in range(rows):
            if i != r and M[i, c] != 0:
                g = neg[M[i, c]]
                for j in range(c, cols):
                    M[i, j] = add[M[i, j], mul[g, M[r, j]]]
        pivots[r] = c
        r += 1
    return r


@njit(cache=True)
def gf_matmul(A, B, add, mul):
    n, m = A.shape
    m2, p = B.shape
    C = np.zeros((n, p), dtype=np.uint8)
    for i in range(n):
        for k in range(m):
            a = A[i, k]
            if a == 0:
                continue
            for j in range(p):
                b = B[k, j]
                if b != 0:
                    C[i, j] = add[C[i, j], mul[a, b]]
    return C


@njit(cache=True)
def gf_matvec_rows(G, msg, add, mul):
    """Codeword sum(msg[i] * G[i]) for a message of element codes."""
    k, n = G.shape
    c = np.zeros(n, dtype=np.uint8)
    for i in range(k):
        a = msg[i]
        if a == 0:
            continue
        for j in range(n):
            g = G[i, j]
            if g != 0:
                c[j] = add[c[j], mul[a, g]]
    return c


@njit(cache=True)
def gf_min_weight(G, add, mul, neg, budget):
    """Minimum Hamming weight over the row space of G, exhaustively.

    Enumerates one representative per projective message class (first
    nonzero message digit fixed to 1), maintaining the codeword
    incrementally as the trailing digits tick through an odometer.
    Returns (weight, witness_message, steps, exhausted) where exhausted
    is 1 when the budget ran out before the search finished (the weight
    is then only an upper bound over what was seen; callers treat that
    case as a failure).
    """
    k, n = G.shape
    q = add.shape[0]
    best = n + 1
    witness = np.zeros(k, dtype=np.uint8)
    msg = np.zeros(k, dtype=np.uint8)
    c = np.zeros(n, dtype=np.uint8)
    steps = 0
    for lead in range(k):
        for i in range(k):
            msg[i] = 0
        for j in range(n):
            c[j] = 0
        msg[lead] = 1
        for j in range(n):
            c[j] = G[lead, j]
        while True:
            steps += 1
            if steps > budget:
                return best, witness, steps - 1, 1
            w = 0
            for j in range(n):
                if c[j] != 0:
                    w += 1
            if w < best:
                best = w
                for i in range(k):
                    witness[i] = msg[i]
            # advance the odometer over digits lead+1 .. k-1
            pos = k - 1
            while pos > lead:
                old = msg[pos]
                new = old + 1
                if new < q:
                    msg[pos] = new
                    delta = add[new, neg[old]]
                    for j in range(n):
                        g = G[pos, j]
                        if g != 0:
                            c[j] = add[c[j], mul[delta, g]]
                    break
                else:
                    msg[pos] = 0
                    if old != 0:
                        delta = neg[old]
                        for j in range(n):
                            g = G[pos, j]
                            if g != 0:
                                c[j] = add[c[j], mul[delta, g]]
                    pos -= 1
            if pos == lead:
                break
    return best, witness, steps, 0


@njit(cache=True)
def gf_enum_combos(HT, s, add, mul, inv, rmult, out_hash, out_idx, out_pat):
    """Hash every size-s column combination of a parity-check matrix.

    HT holds the matrix transposed (one row per original column).  For
    each s-subset of the n columns (lex order) and each coefficient
    pattern (first coefficient fixed to 1, the rest ranging over the
    nonzero field elements, odometer order), the combination vector is
    formed, scaled so its first nonzero entry is 1, and hashed with the
    multiplier vector rmult (uint64, wrapping).  The subset indices and
    the pattern rank are recorded so callers can reconstruct and verify
    any hash collision.  Returns the number of combos written.
    """
    n, h = HT.shape
    q = add.shape[0]
    npat = (q - 1) ** (s - 1)
    idx = np.empty(s, dtype=np.int64)
    for i in range(s):
        idx[i] = i
    v = np.empty(h, dtype=np.uint8)
    count = 0
    while True:
        for pat in range(npat):
            # coefficients: 1 on idx[0], then pattern digits + 1
            for r in range(h):
                v[r] = HT[idx[0], r]
            rem = pat
            for j in range(1, s):
                coef = (rem % (q - 1)) + 1
                rem //= q - 1
                for r in range(h):
                    x = HT[idx[j], r]
                    if x != 0:
                        v[r] = add[v[r], mul[coef, x]]
            # normalize so the first nonzero entry is 1
            lead = 0
            for r in range(h):
                if v[r] != 0:
                    lead = v[r]
                    break
            hval = np.uint64(0)
            if lead > 1:
                f = inv[lead]
                for r in range(h):
                    hval += rmult[r] * np.uint64(mul[f, v[r]])
            else:
                for r in range(h):
                    hval += rmult[r] * np.uint64(v[r])
            out_hash[count] = hval
            for j in range(s):
                out_idx[count, j] = idx[j]
            out_pat[count] = pat
            count += 1
        # advance the subset odometer
        pos = s - 1
        while pos >= 0 and idx[pos] == n - s + pos:
            pos -= 1
        if pos < 0:
            break
        idx[pos] += 1
        for j in range(pos + 1, s):
            idx[j] = idx[j - 1] + 1
    return count


@njit(cache=True)
def gf_weight_distribution(G, add, mul, neg):
    """Weight enumerator of the row space of G (full q^k enumeration)."""
    k, n = G.shape
    q = add.shape[0]
    dist = np.zeros(n + 1, dtype=np.int64)
    dist[0] = 1
    msg = np.zeros(k, dtype=np.uint8)
    c = np.zeros(n, dtype=np.uint8)
    for lead in range(k):
        for i in range(k):
            msg[i] = 0
        for j in range(n):
            c[j] = 0
        msg[lead] = 1
        for j in range(n):
            c[j] = G[lead, j]
        while True:
            w = 0
            for j in range(n):
                if c[j] != 0:
                    w += 1
            dist[w] += q - 1  # the q-1 scalar multiples share this weight
            pos = k - 1
            while pos > lead:
                old = msg[pos]
                new = old + 1
                if new < q:
                    msg[pos] = new
                    delta = add[new, neg[old]]
                    for j in range(n):
                        g = G[pos, j]
                        if g != 0:
                            c[j] = add[c[j], mul[delta, g]]
                    break
                else:
                    msg[pos] = 0
                    if old != 0:
                        delta = neg[old]
                        for j in range(n):
                            g = G[pos, j]
                            if g != 0:
                                c[j] = add[c[j], mul[delta, g]]
                    pos -= 1
            if pos == lead:
                break
    return dist
