"""Binary linear codes and the operations between them.

A :class:`BinaryCode` is stored by its RREF generator matrix, so two codes
are equal exactly when their generator words are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels
from ._bits import nwords, pack_bits, parity_products, row_weights
from .errors import CapacityError, DomainError, StructuralError
from .gf2 import BinaryMatrix, BinaryVector, in_rowspace, kernel, reduce_rows, rref

DEFAULT_EXACT_THRESHOLD = 26
DEFAULT_BUDGET = 20_000
ENUMERATION_CAP = 22


class BinaryCode:
    """A linear subspace of F2^n."""

    __slots__ = ("n", "gen", "pivots")

    def __init__(self, gen: BinaryMatrix):
        R, _, piv = rref(gen)
        self.n = gen.n_cols
        self.gen = R
        self.pivots = piv

    @classmethod
    def from_rows(cls, rows: Sequence, n: int | None = None) -> "BinaryCode":
        return cls(BinaryMatrix.from_rows(rows, n_cols=n))

    @classmethod
    def from_bits(cls, bits) -> "BinaryCode":
        return cls(BinaryMatrix.from_bits(bits))

    @classmethod
    def span(cls, vectors: Sequence[BinaryVector], n: int) -> "BinaryCode":
        return cls(BinaryMatrix.from_vectors(list(vectors), n))

    @classmethod
    def zero(cls, n: int) -> "BinaryCode":
        return cls(BinaryMatrix.empty(n))

    @classmethod
    def full(cls, n: int) -> "BinaryCode":
        return cls(BinaryMatrix.identity(n))

    @classmethod
    def repetition(cls, n: int) -> "BinaryCode":
        """The code generated by the all-ones vector."""
        return cls.span([BinaryVector.ones(n)], n)

    @property
    def k(self) -> int:
        return self.gen.n_rows

    def rows(self) -> list[BinaryVector]:
        return self.gen.rows()

    def __contains__(self, v: BinaryVector) -> bool:
        return in_rowspace(self.gen, v)

    def __le__(self, other: "BinaryCode") -> bool:
        return contains(other, self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def __repr__(self) -> str:
        return f"BinaryCode[n={self.n}, k={self.k}]"


def _same_length(a: BinaryCode, b: BinaryCode) -> None:
    if a.n != b.n:
        raise StructuralError(f"length mismatch: {a.n} vs {b.n}")


def dual(C: BinaryCode) -> BinaryCode:
    return BinaryCode(kernel(C.gen))


def code_sum(A: BinaryCode, B: BinaryCode) -> BinaryCode:
    _same_length(A, B)
    return BinaryCode(A.gen.stack(B.gen))


def intersect(A: BinaryCode, B: BinaryCode) -> BinaryCode:
    """``A ∩ B`` computed as the dual of ``A^⊥ + B^⊥``."""
    _same_length(A, B)
    return dual(code_sum(dual(A), dual(B)))


def _unique_nonzero(words: np.ndarray) -> np.ndarray:
    words = words[np.any(words != 0, axis=1)]
    if words.shape[0] > 1:
        words = np.unique(words, axis=0)
    return np.ascontiguousarray(words)


def schur(A: BinaryCode, B: BinaryCode) -> BinaryCode:
    """Span of the coordinate-wise products of the generators of ``A`` and ``B``."""
    _same_length(A, B)
    a, b = A.gen.words, B.gen.words
    if A.k == 0 or B.k == 0:
        return BinaryCode.zero(A.n)
    if A == B:
        i, j = np.triu_indices(A.k)
        prods = a[i] & a[j]
    else:
        prods = (a[:, None, :] & b[None, :, :]).reshape(-1, a.shape[1])
    return BinaryCode(BinaryMatrix(A.n, _unique_nonzero(prods)))


def schur_power(C: BinaryCode, t: int) -> BinaryCode:
    if t < 1:
        raise DomainError("Schur power exponent must be >= 1")
    cur = C
    for _ in range(t - 1):
        nxt = schur(cur, C)
        if nxt == cur:
            break
        cur = nxt
    return cur


def _check_coords(n: int, S: Iterable[int]) -> list[int]:
    coords = sorted(set(int(i) for i in S))
    for i in coords:
        if not 0 <= i < n:
            raise DomainError(f"coordinate {i} out of range for length {n}")
    return coords


def _delete_columns(M: BinaryMatrix, coords: list[int]) -> BinaryMatrix:
    keep = np.setdiff1d(np.arange(M.n_cols), coords)
    if M.n_rows == 0:
        return BinaryMatrix.empty(keep.size)
    return BinaryMatrix.from_bits(M.bits()[:, keep])


def puncture(C: BinaryCode, S: Iterable[int]) -> BinaryCode:
    """Delete the coordinates in ``S``."""
    coords = _check_coords(C.n, S)
    return BinaryCode(_delete_columns(C.gen, coords))


def shorten(C: BinaryCode, S: Iterable[int]) -> BinaryCode:
    """Keep the codewords vanishing on ``S``, then delete ``S``."""
    coords = _check_coords(C.n, S)
    if not coords:
        return C
    work = np.array(C.gen.words, dtype=np.uint64, order="C")
    piv = kernels.eliminate(work, np.asarray(coords, dtype=np.int64), False) if C.k else []
    sub = BinaryMatrix(C.n, work[len(piv) :])
    return BinaryCode(_delete_columns(sub, coords))


def contains(A: BinaryCode, B: BinaryCode) -> bool:
    """True iff ``B ⊆ A``."""
    _same_length(A, B)
    if B.k == 0:
        return True
    return not reduce_rows(A.gen, A.pivots, B.gen.words).any()


def first_outside(A: BinaryCode, B: BinaryCode) -> BinaryVector | None:
    """The first generator of ``B`` (RREF order) not in ``A``, or None."""
    _same_length(A, B)
    if B.k == 0:
        return None
    res = reduce_rows(A.gen, A.pivots, B.gen.words)
    bad = np.flatnonzero(np.any(res != 0, axis=1))
    return B.gen.row(int(bad[0])) if bad.size else None


def is_even(C: BinaryCode) -> bool:
    """Every codeword has even weight (weight parity is additive over F2)."""
    return bool(np.all(C.gen.row_weights() % 2 == 0))


def is_self_orthogonal(C: BinaryCode) -> bool:
    return not parity_products(C.gen.words, C.gen.words).any()


def codeword_words(C: BinaryCode, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """All ``2^k`` codewords as packed rows; row ``m`` is the combination with mask ``m``."""
    if C.k > cap:
        raise CapacityError(f"refusing to enumerate 2^{C.k} codewords (cap 2^{cap})")
    out = np.zeros((1 << C.k, nwords(C.n)), dtype=np.uint64)
    for i in range(C.k):
        out[1 << i : 2 << i] = out[: 1 << i] ^ C.gen.words[i]
    return out


def codewords(C: BinaryCode, cap: int = ENUMERATION_CAP) -> list[BinaryVector]:
    return [BinaryVector(C.n, w) for w in codeword_words(C, cap)]


def weight_distribution(C: BinaryCode, cap: int = ENUMERATION_CAP) -> list[int]:
    """``A_0, ..., A_n`` by enumeration."""
    weights = row_weights(codeword_words(C, cap))
    return np.bincount(weights, minlength=C.n + 1).tolist()


def combination(M: BinaryMatrix, mask: int) -> BinaryVector:
    words = np.zeros(M.words.shape[1], dtype=np.uint64)
    for i in range(M.n_rows):
        if mask >> i & 1:
            words ^= M.words[i]
    return BinaryVector(M.n_cols, words)


@dataclass(frozen=True)
class MinWeightResult:
    lower: int
    upper: int
    exact: bool
    witness: BinaryVector


def kernel_distance_certificate(H: BinaryMatrix) -> int:
    """A certified lower bound (1, 2 or 3) on the minimum weight of ``ker H``.

    ``ker H`` has a weight-1 word iff ``H`` has a zero column and a
    weight-2 word iff two columns coincide.
    """
    if H.n_cols == 0:
        return 1
    if H.n_rows == 0:
        return 1
    cols = H.columns()
    if not np.all(np.any(cols != 0, axis=1)):
        return 1
    if np.unique(cols, axis=0).shape[0] < cols.shape[0]:
        return 2
    return 3


def information_set_search(
    H: BinaryMatrix,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    stop_at: int = 1,
    exclude: BinaryMatrix | None = None,
    p: int = 2,
) -> tuple[int | None, BinaryVector | None, int]:
    """Seeded Lee-Brickell search for light nonzero words of ``ker H``.

    Words ``x`` with ``exclude · x = 0`` (i.e. orthogonal to every row of
    ``exclude``) are skipped.  Stops after ``budget`` iterations or once a
    word of weight ``<= stop_at`` is found.  Returns ``(weight, witness,
    iterations)``; weight and witness are None when nothing was found.
    """
    n = H.n_cols
    rng = np.random.default_rng(seed)
    e_cols = exclude.columns() if exclude is not None and exclude.n_rows else None
    if exclude is not None and exclude.n_rows == 0:
        return None, None, 0
    Hw = np.ascontiguousarray(H.words)
    best, witness = n + 1, None
    it = 0
    while it < budget:
        it += 1
        perm = rng.permutation(n).astype(np.int64)
        w, word = kernels.isd_search(Hw, n, perm, p, best, e_cols)
        if w > 0:
            best, witness = w, word
        if best <= stop_at:
            break
    if witness is None:
        return None, None, it
    return best, BinaryVector(n, witness), it


def min_weight(
    C: BinaryCode,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    *,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
    lower: int | None = None,
) -> MinWeightResult:
    """Minimum weight of ``C``.

    Exhaustive (Gray-code order) when ``k <= exact_threshold``; otherwise
    ``upper`` comes from information-set search on the parity-check
    matrix and ``lower`` from the caller's bound or the cheap column
    certificate.
    """
    if C.k == 0:
        raise DomainError("the zero code has no minimum weight")
    if C.k <= exact_threshold:
        G = np.ascontiguousarray(C.gen.words)
        w, mask, _, _ = kernels.gray_min_weight(G, np.zeros((C.k, 0), dtype=np.uint64))
        return MinWeightResult(w, w, True, combination(C.gen, mask))
    H = dual(C).gen
    lo = max(lower or 1, kernel_distance_certificate(H))
    w, witness, _ = information_set_search(H, budget=budget, seed=seed, stop_at=lo)
    if witness is None:  # unreachable for a nonzero code; the search always finds something
        raise DomainError("information-set search found no codeword")
    return MinWeightResult(lo, w, lo == w, witness)


def syndrome_rows(G: BinaryMatrix, E: BinaryMatrix) -> np.ndarray:
    """Packed ``E``-syndromes of the rows of ``G`` (bit ``j`` = ``row . E_j``)."""
    prods = parity_products(G.words, E.words)
    if E.n_rows == 0:
        return np.zeros((G.n_rows, 0), dtype=np.uint64)
    return pack_bits(prods)
