"""Bit-packed linear algebra over F2.

Vectors and matrices store their bits in little-endian uint64 words
(bit ``j`` in word ``j >> 6``); the padding bits of the last word are
always zero.  Both types are immutable.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels
from ._bits import nwords, pack_bits, row_weights, tail_mask, unpack_bits
from .errors import DomainError, StructuralError

__all__ = [
    "BinaryVector",
    "BinaryMatrix",
    "rref",
    "rank",
    "kernel",
    "in_rowspace",
    "reduce_rows",
]


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _parse_bits(row) -> np.ndarray:
    if isinstance(row, BinaryVector):
        return row.bits()
    if isinstance(row, str):
        s = row.replace(" ", "")
        if s.strip("01"):
            raise StructuralError(f"row {row!r} contains characters other than 0/1")
        return np.frombuffer(s.encode(), dtype=np.uint8) - ord("0")
    arr = np.asarray(row, dtype=np.int64).ravel()
    if np.any((arr != 0) & (arr != 1)):
        raise StructuralError("bit values must be 0 or 1")
    return arr.astype(np.uint8)


class BinaryVector:
    """A length-``n`` vector over F2."""

    __slots__ = ("length", "words")

    def __init__(self, length: int, words: np.ndarray):
        if length < 0:
            raise StructuralError("length must be non-negative")
        words = np.array(words, dtype=np.uint64).reshape(-1)
        if words.shape[0] != nwords(length):
            raise StructuralError(f"expected {nwords(length)} words for length {length}")
        if length and length & 63:
            words[-1] &= tail_mask(length)
        self.length = length
        self.words = _freeze(words)

    @classmethod
    def from_bits(cls, bits) -> "BinaryVector":
        bits = _parse_bits(bits)
        return cls(bits.shape[0], pack_bits(bits))

    @classmethod
    def zeros(cls, n: int) -> "BinaryVector":
        return cls(n, np.zeros(nwords(n), dtype=np.uint64))

    @classmethod
    def ones(cls, n: int) -> "BinaryVector":
        return cls.from_bits(np.ones(n, dtype=np.uint8))

    @classmethod
    def unit(cls, n: int, i: int) -> "BinaryVector":
        if not 0 <= i < n:
            raise DomainError(f"index {i} out of range for length {n}")
        bits = np.zeros(n, dtype=np.uint8)
        bits[i] = 1
        return cls.from_bits(bits)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BinaryVector":
        bits = np.zeros(n, dtype=np.uint8)
        for i in support:
            if not 0 <= i < n:
                raise DomainError(f"index {i} out of range for length {n}")
            bits[i] = 1
        return cls.from_bits(bits)

    def bits(self) -> np.ndarray:
        return unpack_bits(self.words, self.length)

    @property
    def weight(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.bits())]

    def is_zero(self) -> bool:
        return not self.words.any()

    def dot(self, other: "BinaryVector") -> int:
        self._check(other)
        return int(np.bitwise_count(self.words & other.words).sum()) & 1

    def _check(self, other: "BinaryVector") -> None:
        if self.length != other.length:
            raise StructuralError(f"length mismatch: {self.length} vs {other.length}")

    def __xor__(self, other: "BinaryVector") -> "BinaryVector":
        self._check(other)
        return BinaryVector(self.length, self.words ^ other.words)

    __add__ = __xor__

    def __and__(self, other: "BinaryVector") -> "BinaryVector":
        self._check(other)
        return BinaryVector(self.length, self.words & other.words)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return int(self.words[i >> 6] >> np.uint64(i & 63)) & 1

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryVector):
            return NotImplemented
        return self.length == other.length and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.length, self.words.tobytes()))

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits())

    def __repr__(self) -> str:
        return f"BinaryVector('{self}')"


class BinaryMatrix:
    """A matrix over F2 with ``n_cols`` columns, held as packed rows."""

    __slots__ = ("n_cols", "words", "_rref")

    def __init__(self, n_cols: int, words: np.ndarray):
        if n_cols < 0:
            raise StructuralError("n_cols must be non-negative")
        nw = nwords(n_cols)
        words = np.array(words, dtype=np.uint64, order="C")
        if words.ndim == 1 and nw and words.size % nw == 0:
            words = words.reshape(-1, nw)
        elif words.size == 0:
            words = np.zeros((words.shape[0] if words.ndim == 2 else 0, nw), dtype=np.uint64)
        if words.ndim != 2 or words.shape[1] != nw:
            raise StructuralError(f"expected rows of {nw} words for {n_cols} columns")
        if n_cols & 63 and words.shape[0]:
            words[:, -1] &= tail_mask(n_cols)
        self.n_cols = n_cols
        self.words = _freeze(words)
        self._rref = None

    @classmethod
    def from_rows(cls, rows: Sequence, n_cols: int | None = None) -> "BinaryMatrix":
        parsed = [_parse_bits(r) for r in rows]
        lengths = {p.shape[0] for p in parsed}
        if n_cols is not None:
            lengths.add(n_cols)
        if len(lengths) > 1:
            raise StructuralError(f"ragged rows: lengths {sorted(lengths)}")
        if not parsed:
            if n_cols is None:
                raise StructuralError("cannot infer n_cols of an empty matrix")
            return cls.empty(n_cols)
        return cls.from_bits(np.stack(parsed))

    @classmethod
    def from_bits(cls, bits) -> "BinaryMatrix":
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.ndim != 2:
            raise StructuralError("expected a 2-D bit array")
        return cls(bits.shape[1], pack_bits(bits))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BinaryVector], n_cols: int) -> "BinaryMatrix":
        for v in vectors:
            if v.length != n_cols:
                raise StructuralError(f"vector of length {v.length} in a {n_cols}-column matrix")
        if not vectors:
            return cls.empty(n_cols)
        return cls(n_cols, np.stack([v.words for v in vectors]))

    @classmethod
    def empty(cls, n_cols: int) -> "BinaryMatrix":
        return cls(n_cols, np.zeros((0, nwords(n_cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls.from_bits(np.eye(n, dtype=np.uint8))

    @property
    def n_rows(self) -> int:
        return self.words.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def row(self, i: int) -> BinaryVector:
        return BinaryVector(self.n_cols, self.words[i])

    def rows(self) -> list[BinaryVector]:
        return [self.row(i) for i in range(self.n_rows)]

    def bits(self) -> np.ndarray:
        return unpack_bits(self.words, self.n_cols).reshape(self.n_rows, self.n_cols)

    def row_weights(self) -> np.ndarray:
        return row_weights(self.words)

    def stack(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if other.n_cols != self.n_cols:
            raise StructuralError(f"column mismatch: {self.n_cols} vs {other.n_cols}")
        return BinaryMatrix(self.n_cols, np.concatenate([self.words, other.words]))

    def columns(self) -> np.ndarray:
        """Packed columns: row ``j`` is column ``j`` as an ``n_rows``-bit vector."""
        return pack_bits(np.ascontiguousarray(self.bits().T))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.n_cols == other.n_cols and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.n_cols, self.words.tobytes()))

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows())

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.n_rows}x{self.n_cols})"


def rref(M: BinaryMatrix) -> tuple[BinaryMatrix, int, list[int]]:
    """Reduced row echelon form of ``M``.

    Returns ``(R, rank, pivots)`` where ``R`` holds only the ``rank``
    nonzero rows and ``pivots`` is strictly increasing.
    """
    if M._rref is None:
        work = np.array(M.words, dtype=np.uint64, order="C")
        if work.shape[0] == 0:
            pivots: list[int] = []
        else:
            pivots = kernels.eliminate(work, np.arange(M.n_cols, dtype=np.int64), True)
        R = BinaryMatrix(M.n_cols, work[: len(pivots)])
        R._rref = (R, len(pivots), list(pivots))
        M._rref = (R, len(pivots), list(pivots))
    R, r, piv = M._rref
    return R, r, list(piv)


def rank(M: BinaryMatrix) -> int:
    return rref(M)[1]


def kernel(M: BinaryMatrix) -> BinaryMatrix:
    """Basis (in RREF) of ``{v : M v^T = 0}``."""
    R, r, piv = rref(M)
    n = M.n_cols
    free = np.setdiff1d(np.arange(n), np.asarray(piv, dtype=np.int64))
    K = np.zeros((free.size, n), dtype=np.uint8)
    K[np.arange(free.size), free] = 1
    if r and free.size:
        K[:, piv] = R.bits()[:, free].T
    out = BinaryMatrix.from_bits(K) if free.size else BinaryMatrix.empty(n)
    return rref(out)[0]


def reduce_rows(R: BinaryMatrix, pivots: Sequence[int], words: np.ndarray) -> np.ndarray:
    """Residues of packed rows ``words`` modulo the row space of RREF matrix ``R``."""
    V = np.array(words, dtype=np.uint64, order="C").reshape(-1, R.words.shape[1])
    if not len(pivots) or V.shape[0] == 0:
        return V
    cols = np.asarray(pivots, dtype=np.int64)
    coeff = (V[:, cols >> 6] >> (cols & 63).astype(np.uint64)) & np.uint64(1)
    for i in range(cols.size):
        sel = np.flatnonzero(coeff[:, i])
        if sel.size:
            V[sel] ^= R.words[i]
    return V


def in_rowspace(M: BinaryMatrix, v: BinaryVector) -> bool:
    """True iff ``v`` is an F2-combination of the rows of ``M``."""
    if v.length != M.n_cols:
        raise StructuralError(f"vector length {v.length} != {M.n_cols} columns")
    R, _, piv = rref(M)
    return not reduce_rows(R, piv, v.words).any()
