"""Packing helpers: bit ``j`` of a row lives in word ``j >> 6`` at position ``j & 63``."""

from __future__ import annotations

import numpy as np

_LE64 = np.dtype("<u8")


def nwords(n: int) -> int:
    return (n + 63) >> 6


def pack_bits(bits) -> np.ndarray:
    """Pack a 0/1 array of shape ``(..., n)`` into uint64 words of shape ``(..., nwords(n))``."""
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.shape[-1]
    nw = nwords(n)
    packed = np.packbits(bits, axis=-1, bitorder="little")
    pad = nw * 8 - packed.shape[-1]
    if pad:
        widths = [(0, 0)] * (packed.ndim - 1) + [(0, pad)]
        packed = np.pad(packed, widths)
    packed = np.ascontiguousarray(packed)
    return packed.view(_LE64).astype(np.uint64)


def unpack_bits(words, n: int) -> np.ndarray:
    """Inverse of :func:`pack_bits`; returns uint8 zeros and ones."""
    words = np.ascontiguousarray(words, dtype=_LE64)
    as_bytes = words.view(np.uint8)
    return np.unpackbits(as_bytes, axis=-1, bitorder="little")[..., :n]


def tail_mask(n: int) -> np.uint64:
    """Mask of the valid bits in the last word of an ``n``-bit row."""
    r = n & 63
    if r == 0:
        return np.uint64(0xFFFFFFFFFFFFFFFF)
    return np.uint64((1 << r) - 1)


def row_weights(words) -> np.ndarray:
    """Hamming weight of every row of a packed array."""
    words = np.asarray(words, dtype=np.uint64)
    return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)


def parity_products(a, b) -> np.ndarray:
    """Matrix of inner products ``a_i . b_j`` over F2 for packed row sets."""
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((a.shape[0], b.shape[0]), dtype=np.uint8)
    prod = a[:, None, :] & b[None, :, :]
    return (np.bitwise_count(prod).sum(axis=-1) & 1).astype(np.uint8)
