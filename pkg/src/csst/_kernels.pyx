# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: Gauss-Jordan over packed rows, Gray-code
enumeration and Lee-Brickell information-set iterations.

Contracts (arguments, return values, tie-breaks) are identical to
``csst._fallback``.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset

cnp.import_array()


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _pop_row(const uint64_t* a, Py_ssize_t nw) noexcept nogil:
    cdef int s = 0
    cdef Py_ssize_t i
    for i in range(nw):
        s += __builtin_popcountll(a[i])
    return s


cdef Py_ssize_t _eliminate(uint64_t[:, ::1] M, const int64_t[::1] order,
                           bint ascending, int64_t* piv_out) noexcept nogil:
    cdef Py_ssize_t nrows = M.shape[0], nw = M.shape[1]
    cdef Py_ssize_t row = 0, r, rr, t, x, w, start
    cdef int64_t c
    cdef uint64_t b, tmp
    for t in range(order.shape[0]):
        if row >= nrows:
            break
        c = order[t]
        w = c >> 6
        b = (<uint64_t>1) << (c & 63)
        r = row
        while r < nrows and not (M[r, w] & b):
            r += 1
        if r == nrows:
            continue
        if r != row:
            for x in range(nw):
                tmp = M[r, x]
                M[r, x] = M[row, x]
                M[row, x] = tmp
        start = w if ascending else 0
        for rr in range(nrows):
            if rr != row and (M[rr, w] & b):
                for x in range(start, nw):
                    M[rr, x] ^= M[row, x]
        piv_out[row] = c
        row += 1
    return row


def eliminate(uint64_t[:, ::1] M, order, bint ascending):
    cdef int64_t[::1] ordv = np.ascontiguousarray(order, dtype=np.int64)
    cdef Py_ssize_t cap = M.shape[0]
    cdef int64_t* piv = <int64_t*> malloc((cap + 1) * sizeof(int64_t))
    cdef Py_ssize_t rank, i
    try:
        with nogil:
            rank = _eliminate(M, ordv, ascending, piv)
        return [piv[i] for i in range(rank)]
    finally:
        free(piv)


def gray_min_weight(const uint64_t[:, ::1] G, const uint64_t[:, ::1] S):
    cdef Py_ssize_t k = G.shape[0], nw = G.shape[1], sw = S.shape[1]
    cdef uint64_t* cur = <uint64_t*> malloc((nw + 1) * sizeof(uint64_t))
    cdef uint64_t* syn = <uint64_t*> malloc((sw + 1) * sizeof(uint64_t))
    cdef uint64_t i, total, g, mask_all = 0, mask_out = 0
    cdef int64_t w_all = 1 << 62, w_out = 1 << 62, w
    cdef Py_ssize_t j, x
    cdef bint outside
    memset(cur, 0, (nw + 1) * sizeof(uint64_t))
    memset(syn, 0, (sw + 1) * sizeof(uint64_t))
    total = (<uint64_t>1) << k
    try:
        with nogil:
            for i in range(1, total):
                j = __builtin_ctzll(i)
                for x in range(nw):
                    cur[x] ^= G[j, x]
                for x in range(sw):
                    syn[x] ^= S[j, x]
                g = i ^ (i >> 1)
                w = _pop_row(cur, nw)
                if w < w_all or (w == w_all and g < mask_all):
                    w_all = w
                    mask_all = g
                if w < w_out or (w == w_out and g < mask_out):
                    outside = False
                    for x in range(sw):
                        if syn[x]:
                            outside = True
                            break
                    if outside:
                        w_out = w
                        mask_out = g
    finally:
        free(cur)
        free(syn)
    if w_out >= (1 << 62):
        return int(w_all), int(mask_all), -1, 0
    return int(w_all), int(mask_all), int(w_out), int(mask_out)


def isd_search(H, Py_ssize_t n, perm, int p, int bound, E_cols):
    cdef uint64_t[:, ::1] R = np.array(H, dtype=np.uint64, copy=True, order="C")
    cdef int64_t[::1] permv = np.ascontiguousarray(perm, dtype=np.int64)
    cdef Py_ssize_t nrows = R.shape[0], nw = R.shape[1]
    cdef int64_t* piv = <int64_t*> malloc((nrows + 1) * sizeof(int64_t))
    cdef Py_ssize_t r, i, a, b, m, x, rw, best_a = -1, best_b = -1
    cdef int best = bound, w
    cdef int64_t c
    cdef bint has_excl = E_cols is not None
    cdef const uint64_t[:, ::1] E
    cdef uint64_t[::1] esyn
    cdef uint64_t[::1] tmp
    try:
        with nogil:
            r = _eliminate(R, permv, False, piv)
        is_piv = np.zeros(n, dtype=np.uint8)
        for i in range(r):
            is_piv[piv[i]] = 1
        info_np = np.asarray(permv)[is_piv[np.asarray(permv)] == 0]
        m = info_np.shape[0]
        rw = max(1, (r + 63) >> 6)
        colv_np = np.zeros((m, rw), dtype=np.uint64)
        piv_np = np.array([piv[i] for i in range(r)], dtype=np.int64)
    finally:
        free(piv)

    cdef int64_t[::1] info = info_np
    cdef int64_t[::1] pivv = piv_np
    cdef uint64_t[:, ::1] colv = colv_np
    with nogil:
        for a in range(m):
            c = info[a]
            for i in range(r):
                if (R[i, c >> 6] >> (c & 63)) & 1:
                    colv[a, i >> 6] |= (<uint64_t>1) << (i & 63)

    if has_excl:
        E = np.ascontiguousarray(E_cols, dtype=np.uint64)
    else:
        E = np.zeros((n, 1), dtype=np.uint64)
    esyn = np.zeros(E.shape[1], dtype=np.uint64)
    tmp = np.zeros(rw, dtype=np.uint64)

    with nogil:
        for a in range(m):
            w = 1 + _pop_row(&colv[a, 0], rw)
            if w < best and (not has_excl or _outside(E, esyn, info, pivv, colv, a, -1, r)):
                best = w
                best_a = a
                best_b = -1
        if p >= 2:
            for a in range(m - 1):
                for b in range(a + 1, m):
                    w = 2
                    for x in range(rw):
                        w += __builtin_popcountll(colv[a, x] ^ colv[b, x])
                        if w >= best:
                            break
                    if w < best and (not has_excl or _outside(E, esyn, info, pivv, colv, a, b, r)):
                        best = w
                        best_a = a
                        best_b = b
    if best_a < 0:
        return -1, None
    word_bits = np.zeros(n, dtype=np.uint8)
    word_bits[info[best_a]] = 1
    if best_b >= 0:
        word_bits[info[best_b]] = 1
    for x in range(rw):
        tmp[x] = colv[best_a, x]
        if best_b >= 0:
            tmp[x] ^= colv[best_b, x]
    for i in range(r):
        if (tmp[i >> 6] >> (i & 63)) & 1:
            word_bits[pivv[i]] = 1
    from ._bits import pack_bits
    return best, pack_bits(word_bits)


cdef bint _outside(const uint64_t[:, ::1] E, uint64_t[::1] esyn, const int64_t[::1] info,
                   const int64_t[::1] pivv, const uint64_t[:, ::1] colv,
                   Py_ssize_t a, Py_ssize_t b, Py_ssize_t r) noexcept nogil:
    cdef Py_ssize_t ew = E.shape[1], x, i
    cdef uint64_t bit
    for x in range(ew):
        esyn[x] = E[info[a], x]
        if b >= 0:
            esyn[x] ^= E[info[b], x]
    for i in range(r):
        bit = (colv[a, i >> 6] >> (i & 63)) & 1
        if b >= 0:
            bit ^= (colv[b, i >> 6] >> (i & 63)) & 1
        if bit:
            for x in range(ew):
                esyn[x] ^= E[pivv[i], x]
    for x in range(ew):
        if esyn[x]:
            return True
    return False
