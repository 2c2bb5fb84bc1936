"""Pure numpy implementations of the hot kernels.

Same signatures and same deterministic tie-breaks as the compiled
``_kernels`` module; used when the extension is not built or when
``CSST_PURE_PYTHON`` is set.
"""

from __future__ import annotations

import numpy as np

from ._bits import pack_bits, row_weights, unpack_bits

_GRAY_TABLE_BITS = 14


def eliminate(M, order, ascending):
    """Gauss-Jordan elimination of ``M`` in place, pivoting over ``order``.

    Returns the pivot columns in processing order; rows ``0..rank-1`` of
    ``M`` hold the reduced pivot rows afterwards, the rest are zero.
    ``ascending`` promises ``order`` is increasing, which lets row XORs
    skip the words left of the pivot.
    """
    nrows = M.shape[0]
    pivots = []
    row = 0
    for c in order:
        if row >= nrows:
            break
        c = int(c)
        w = c >> 6
        b = np.uint64(1) << np.uint64(c & 63)
        below = np.flatnonzero(M[row:, w] & b)
        if below.size == 0:
            continue
        r = row + int(below[0])
        if r != row:
            M[[row, r]] = M[[r, row]]
        hits = np.flatnonzero(M[:, w] & b)
        hits = hits[hits != row]
        if hits.size:
            start = w if ascending else 0
            M[hits, start:] ^= M[row, start:]
        pivots.append(c)
        row += 1
    return pivots


def gray_min_weight(G, S):
    """Exhaustive minimum over all nonzero combinations of the rows of ``G``.

    ``S`` carries one syndrome row per row of ``G``; a combination counts
    as "outside" when its combined syndrome is nonzero.  Returns
    ``(w_all, mask_all, w_out, mask_out)`` with ties broken by the smaller
    combination mask, and ``w_out = -1`` when no combination is outside.
    """
    k = G.shape[0]
    lo = min(k, _GRAY_TABLE_BITS)
    hi = k - lo
    size = 1 << lo
    T = np.zeros((size, G.shape[1]), dtype=np.uint64)
    TS = np.zeros((size, S.shape[1]), dtype=np.uint64)
    for i in range(lo):
        T[1 << i : 2 << i] = T[: 1 << i] ^ G[i]
        TS[1 << i : 2 << i] = TS[: 1 << i] ^ S[i]
    low_masks = np.arange(size, dtype=np.int64)

    best_all = (1 << 62, 0)
    best_out = (1 << 62, 0)
    off = np.zeros(G.shape[1], dtype=np.uint64)
    off_s = np.zeros(S.shape[1], dtype=np.uint64)
    for h in range(1 << hi):
        off[:] = 0
        off_s[:] = 0
        for j in range(hi):
            if h >> j & 1:
                off ^= G[lo + j]
                off_s ^= S[lo + j]
        weights = row_weights(T ^ off)
        masks = (h << lo) | low_masks
        if h == 0:
            weights[0] = 1 << 62
        i = int(np.argmin(weights))
        cand = (int(weights[i]), int(masks[i]))
        best_all = min(best_all, cand)
        if S.shape[1]:
            outside = np.any((TS ^ off_s) != 0, axis=1)
            if outside.any():
                wo = np.where(outside, weights, 1 << 62)
                i = int(np.argmin(wo))
                best_out = min(best_out, (int(wo[i]), int(masks[i])))
    w_out, m_out = best_out
    if w_out >= 1 << 62:
        w_out, m_out = -1, 0
    return best_all[0], best_all[1], w_out, m_out


def isd_search(H, n, perm, p, bound, E_cols):
    """One Lee-Brickell iteration on the kernel of ``H``.

    Pivots are chosen along ``perm``; the remaining columns form the
    information set.  Every combination of 1..``p`` information columns
    defines one kernel vector.  Returns the lightest such vector with
    weight ``< bound`` whose syndrome against ``E_cols`` is nonzero (any
    vector when ``E_cols`` is None), as ``(weight, packed_word)``, or
    ``(-1, None)``.  Ties go to the first vector in enumeration order:
    singles, then pairs in lexicographic order of information positions.
    """
    R = np.array(H, dtype=np.uint64, copy=True)
    piv = eliminate(R, perm, False)
    r = len(piv)
    perm = np.asarray(perm, dtype=np.int64)
    is_piv = np.zeros(n, dtype=bool)
    is_piv[piv] = True
    info = perm[~is_piv[perm]]
    m = info.size
    if r:
        bits = unpack_bits(R[:r], n)
        colv = pack_bits(np.ascontiguousarray(bits[:, info].T))
    else:
        colv = np.zeros((m, 1), dtype=np.uint64)
    piv_arr = np.asarray(piv, dtype=np.int64)

    cands = []  # (weight, stage, order, info positions)
    w1 = 1 + row_weights(colv)
    for a in np.flatnonzero(w1 < bound):
        cands.append((int(w1[a]), 0, int(a), (int(a),)))
    if p >= 2:
        for a in range(m - 1):
            w2 = 2 + row_weights(colv[a + 1 :] ^ colv[a])
            for off in np.flatnonzero(w2 < bound):
                b = a + 1 + int(off)
                cands.append((int(w2[off]), 1, a * m + b, (a, b)))
    cands.sort()
    for weight, _, _, positions in cands:
        synd = np.zeros(colv.shape[1], dtype=np.uint64)
        for a in positions:
            synd ^= colv[a]
        word_bits = np.zeros(n, dtype=np.uint8)
        word_bits[info[list(positions)]] = 1
        if r:
            sbits = unpack_bits(synd, r)
            word_bits[piv_arr[sbits.astype(bool)]] = 1
        if E_cols is not None:
            support = np.flatnonzero(word_bits)
            es = np.bitwise_xor.reduce(E_cols[support], axis=0)
            if not np.any(es):
                continue
        return weight, pack_bits(word_bits)
    return -1, None
