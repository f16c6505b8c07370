# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_kernels_py``.

Integer kernels work in int64 and keep every intermediate below a bound
that rules out overflow; anything larger is handed back to the
arbitrary-precision Python versions.
"""

from libc.stdlib cimport malloc, free, abs as c_abs
from libc.string cimport memset, memcpy
from libc.stdint cimport int64_t

from . import _kernels_py

# coefficients / entries above this are handed back to Python
DEF SMALL = 268435456        # 2**28
DEF SMALL_PAIR = 1048576     # 2**20, for the 2x2 signature step
DEF MAX_POLY_N = 30


cdef inline int64_t _abs64(int64_t x) nogil:
    return -x if x < 0 else x


def cycle_count(letters, int strands):
    cdef int *pos = <int *> malloc(strands * sizeof(int))
    cdef char *seen = <char *> malloc(strands)
    cdef int g, s, k, tmp, cycles = 0
    try:
        for s in range(strands):
            pos[s] = s
            seen[s] = 0
        for g in letters:
            tmp = pos[g - 1]
            pos[g - 1] = pos[g]
            pos[g] = tmp
        for s in range(strands):
            if not seen[s]:
                cycles += 1
                k = s
                while not seen[k]:
                    seen[k] = 1
                    k = pos[k]
        return cycles
    finally:
        free(pos)
        free(seen)


def cyclic_subsequence(host, pattern, int n_offsets):
    cdef int c = len(host), m = len(pattern)
    cdef int *h = <int *> malloc((c + 1) * sizeof(int))
    cdef int *p = <int *> malloc((m + 1) * sizeof(int))
    cdef int *posn = <int *> malloc((m + 1) * sizeof(int))
    cdef int off, t, j, i
    try:
        for i in range(c):
            h[i] = host[i]
        for i in range(m):
            p[i] = pattern[i]
        if m == 0:
            return (0, []) if n_offsets > 0 else None
        for off in range(n_offsets):
            j = 0
            for t in range(c):
                i = off + t
                if i >= c:
                    i -= c
                if h[i] == p[j]:
                    posn[j] = t
                    j += 1
                    if j == m:
                        return off, [posn[i] for i in range(m)]
        return None
    finally:
        free(h)
        free(p)
        free(posn)


def linking_edges(cols, tops, bottoms):
    cdef int n = len(cols)
    cdef int *cc = <int *> malloc((n + 1) * sizeof(int))
    cdef int *tt = <int *> malloc((n + 1) * sizeof(int))
    cdef int *bb = <int *> malloc((n + 1) * sizeof(int))
    cdef int u, v, cu, cv, a, b, c, d
    edges = []
    try:
        for u in range(n):
            cc[u] = cols[u]
            tt[u] = tops[u]
            bb[u] = bottoms[u]
        for u in range(n):
            cu = cc[u]
            a = tt[u]
            b = bb[u]
            for v in range(u + 1, n):
                cv = cc[v]
                if cv == cu:
                    if bb[v] == a or tt[v] == b:
                        edges.append((u, v))
                elif cv == cu + 1 or cv == cu - 1:
                    c = tt[v]
                    d = bb[v]
                    if (a < c and c < b) != (a < d and d < b):
                        edges.append((u, v))
        return edges
    finally:
        free(cc)
        free(tt)
        free(bb)


# -- signature ---------------------------------------------------------------------

cdef int _signature_c(int64_t *M, int n, int *ok) nogil:
    """Fraction-free symmetric elimination; entries stay bordered minors.

    After eliminating a block with determinant D, the active part holds
    D times the Schur complement, so every division below is exact.
    """
    cdef char *act = <char *> malloc(n)
    cdef int i, j, l, a, b, piv, remaining = n, sig = 0
    cdef int64_t D = 1, p, q, num, D2
    for i in range(n):
        act[i] = 1
    ok[0] = 1
    while remaining > 0:
        piv = -1
        for i in range(n):
            if act[i] and M[i * n + i] != 0:
                piv = i
                break
        if piv >= 0:
            p = M[piv * n + piv]
            if (p > 0) == (D > 0):
                sig += 1
            else:
                sig -= 1
            act[piv] = 0
            remaining -= 1
            for j in range(n):
                if not act[j]:
                    continue
                for l in range(j, n):
                    if not act[l]:
                        continue
                    num = p * M[j * n + l] - M[j * n + piv] * M[piv * n + l]
                    num = num // D
                    if _abs64(num) >= SMALL:
                        ok[0] = 0
                        free(act)
                        return 0
                    M[j * n + l] = num
                    M[l * n + j] = num
            D = p
            continue
        a = -1
        b = -1
        for i in range(n):
            if not act[i]:
                continue
            for j in range(i + 1, n):
                if act[j] and M[i * n + j] != 0:
                    a = i
                    b = j
                    break
            if a >= 0:
                break
        if a < 0:
            break
        q = M[a * n + b]
        if _abs64(q) >= SMALL_PAIR or _abs64(D) >= SMALL_PAIR:
            ok[0] = 0
            free(act)
            return 0
        act[a] = 0
        act[b] = 0
        remaining -= 2
        D2 = D * D
        for j in range(n):
            if not act[j]:
                continue
            for l in range(j, n):
                if not act[l]:
                    continue
                if (_abs64(M[j * n + l]) >= SMALL_PAIR or _abs64(M[j * n + a]) >= SMALL_PAIR
                        or _abs64(M[j * n + b]) >= SMALL_PAIR or _abs64(M[a * n + l]) >= SMALL_PAIR
                        or _abs64(M[b * n + l]) >= SMALL_PAIR):
                    ok[0] = 0
                    free(act)
                    return 0
                num = (-q * q * M[j * n + l]
                       + q * (M[j * n + a] * M[b * n + l] + M[j * n + b] * M[a * n + l]))
                num = num // D2
                if _abs64(num) >= SMALL:
                    ok[0] = 0
                    free(act)
                    return 0
                M[j * n + l] = num
                M[l * n + j] = num
        D = -(q * q) // D
    free(act)
    return sig


def signature(S):
    cdef int n = len(S)
    cdef int i, j, ok = 1, sig
    cdef int64_t x
    if n == 0:
        return 0
    for i in range(n):
        if len(S[i]) != n:
            raise ValueError("signature needs a symmetric matrix")
        for j in range(i + 1, n):
            if S[i][j] != S[j][i]:
                raise ValueError("signature needs a symmetric matrix")
    for i in range(n):
        for j in range(n):
            if abs(S[i][j]) >= SMALL:
                return _kernels_py.signature(S)
    cdef int64_t *M = <int64_t *> malloc(n * n * sizeof(int64_t))
    try:
        for i in range(n):
            for j in range(n):
                M[i * n + j] = S[i][j]
        sig = _signature_c(M, n, &ok)
    finally:
        free(M)
    if not ok:
        return _kernels_py.signature(S)
    return sig


# -- Alexander determinant ---------------------------------------------------------

cdef int _poly_len(int64_t *p, int width) nogil:
    cdef int k = width
    while k > 0 and p[k - 1] == 0:
        k -= 1
    return k


cdef int _bareiss_poly_c(int64_t *m, int n, int W, int64_t *out, int *ok) nogil:
    """Bareiss over Z[t]; entry (i, j) is m[(i*n + j)*W : +W], low degree first.
    Returns the determinant length written to ``out``; sets ok=0 on overflow
    risk or inexact division."""
    cdef int64_t *prev = <int64_t *> malloc(W * sizeof(int64_t))
    cdef int64_t *num = <int64_t *> malloc(2 * W * sizeof(int64_t))
    cdef int64_t *tmp = <int64_t *> malloc(W * sizeof(int64_t))
    cdef int64_t *piv
    cdef int64_t *mik
    cdef int64_t *mkj
    cdef int64_t *mij
    cdef int64_t lead, c
    cdef int i, j, k, r, s, lp, lprev, lnum, sign = 1, swapped, L
    memset(prev, 0, W * sizeof(int64_t))
    prev[0] = 1
    lprev = 1
    ok[0] = 1
    for k in range(n - 1):
        if _poly_len(&m[(k * n + k) * W], W) == 0:
            swapped = 0
            for i in range(k + 1, n):
                if _poly_len(&m[(i * n + k) * W], W) > 0:
                    for j in range(n):
                        memcpy(tmp, &m[(k * n + j) * W], W * sizeof(int64_t))
                        memcpy(&m[(k * n + j) * W], &m[(i * n + j) * W], W * sizeof(int64_t))
                        memcpy(&m[(i * n + j) * W], tmp, W * sizeof(int64_t))
                    sign = -sign
                    swapped = 1
                    break
            if not swapped:
                free(prev); free(num); free(tmp)
                return 0
        piv = &m[(k * n + k) * W]
        lp = _poly_len(piv, W)
        for i in range(k + 1, n):
            mik = &m[(i * n + k) * W]
            for j in range(k + 1, n):
                mkj = &m[(k * n + j) * W]
                mij = &m[(i * n + j) * W]
                memset(num, 0, 2 * W * sizeof(int64_t))
                for r in range(lp):
                    if piv[r] == 0:
                        continue
                    for s in range(W):
                        num[r + s] += piv[r] * mij[s]
                for r in range(W):
                    if mik[r] == 0:
                        continue
                    for s in range(W):
                        num[r + s] -= mik[r] * mkj[s]
                lnum = _poly_len(num, 2 * W)
                # exact division by prev
                memset(mij, 0, W * sizeof(int64_t))
                if lnum == 0:
                    continue
                L = lnum - lprev + 1
                if L <= 0 or L > W:
                    ok[0] = 0
                    free(prev); free(num); free(tmp)
                    return 0
                lead = prev[lprev - 1]
                for r in range(L - 1, -1, -1):
                    c = num[r + lprev - 1]
                    if c % lead != 0:
                        ok[0] = 0
                        free(prev); free(num); free(tmp)
                        return 0
                    c = c // lead
                    if _abs64(c) >= SMALL:
                        ok[0] = 0
                        free(prev); free(num); free(tmp)
                        return 0
                    mij[r] = c
                    if c != 0:
                        for s in range(lprev):
                            num[r + s] -= c * prev[s]
                for r in range(lnum):
                    if num[r] != 0:
                        ok[0] = 0
                        free(prev); free(num); free(tmp)
                        return 0
            memset(mik, 0, W * sizeof(int64_t))
        memcpy(prev, piv, W * sizeof(int64_t))
        lprev = lp
    piv = &m[((n - 1) * n + n - 1) * W]
    L = _poly_len(piv, W)
    for r in range(L):
        out[r] = sign * piv[r]
    free(prev); free(num); free(tmp)
    return L


def alexander_det(A):
    """Coefficients (low to high) of det(A - t A^T)."""
    cdef int n = len(A)
    cdef int i, j, ok = 1, L, W
    if n == 0:
        return [1]
    if n > MAX_POLY_N:
        return _kernels_py.alexander_det(A)
    for i in range(n):
        for j in range(n):
            if abs(A[i][j]) >= SMALL:
                return _kernels_py.alexander_det(A)
    W = n + 2
    cdef int64_t *m = <int64_t *> malloc(n * n * W * sizeof(int64_t))
    cdef int64_t *out = <int64_t *> malloc(W * sizeof(int64_t))
    try:
        memset(m, 0, n * n * W * sizeof(int64_t))
        for i in range(n):
            for j in range(n):
                m[(i * n + j) * W] = A[i][j]
                m[(i * n + j) * W + 1] = -A[j][i]
        L = _bareiss_poly_c(m, n, W, out, &ok)
        if not ok:
            return _kernels_py.alexander_det(A)
        res = [out[i] for i in range(L)]
    finally:
        free(m)
        free(out)
    # same shape as the Python version: strip low zeros into nothing
    k = 0
    while k < len(res) and res[k] == 0:
        k += 1
    return res[k:]


# -- census enumeration ------------------------------------------------------------

cdef int _rot_less(int *x, int *y, int n) nogil:
    """1 if some rotation of y is lexicographically smaller than x."""
    cdef int k, t, a, b
    for k in range(n):
        for t in range(n):
            a = y[(k + t) % n]
            b = x[t]
            if a != b:
                break
        else:
            continue
        if a < b:
            return 1
    return 0


def census_words(int alphabet, int length, bint knots_only):
    cdef int k = alphabet, n = length
    cdef int *w = <int *> malloc((n + 1) * sizeof(int))
    cdef int *word = <int *> malloc((n + 1) * sizeof(int))
    cdef int *flip = <int *> malloc((n + 1) * sizeof(int))
    cdef int *counts = <int *> malloc((k + 2) * sizeof(int))
    cdef int *pos = <int *> malloc((k + 2) * sizeof(int))
    cdef char *seen = <char *> malloc(k + 2)
    cdef int m, length_w = 1, i, t, good, g, tmp, cycles, s
    out = []
    try:
        w[0] = -1
        while length_w > 0:
            w[length_w - 1] += 1
            m = length_w
            if n % m == 0:
                for i in range(n):
                    word[i] = w[i % m] + 1
                for i in range(k + 1):
                    counts[i] = 0
                for i in range(n):
                    counts[word[i]] += 1
                good = 1
                for i in range(1, k + 1):
                    if counts[i] < 2:
                        good = 0
                        break
                if good:
                    for i in range(n):
                        flip[i] = k + 1 - word[i]
                    if _rot_less(word, flip, n):
                        good = 0
                if good and knots_only:
                    for s in range(k + 1):
                        pos[s] = s
                        seen[s] = 0
                    for i in range(n):
                        g = word[i]
                        tmp = pos[g - 1]
                        pos[g - 1] = pos[g]
                        pos[g] = tmp
                    cycles = 0
                    for s in range(k + 1):
                        if not seen[s]:
                            cycles += 1
                            t = s
                            while not seen[t]:
                                seen[t] = 1
                                t = pos[t]
                    good = cycles == 1
                if good:
                    out.append(tuple([word[i] for i in range(n)]))
            while length_w < n:
                w[length_w] = w[length_w - m]
                length_w += 1
            while length_w > 0 and w[length_w - 1] == k - 1:
                length_w -= 1
        return out
    finally:
        free(w)
        free(word)
        free(flip)
        free(counts)
        free(pos)
        free(seen)
