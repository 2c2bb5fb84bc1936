"""Cyclic and extended cyclic codes described by cyclotomic cosets.

Residues mod ``n`` are written ``1..n`` with ``n`` standing for 0.  In the
extended setting a separate symbol ``0`` (the monomial ``x^0`` evaluated
at the extra point 0) may also be present; it satisfies ``0 + 0 = 0``
while every other sum is reduced mod ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .codes import BinaryCode, contains
from .errors import DomainError, InconsistencyError, StructuralError
from .field import ExtField, binary_expansion, cyclotomic_orbit, field_new, gf_kernel, minimal_polynomial, polymul2
from .gf2 import BinaryMatrix, kernel

ZERO = 0  # the extra symbol of the extended setting


def _rotl(mask: int, r: int, n: int) -> int:
    r %= n
    full = (1 << n) - 1
    return ((mask << r) | (mask >> (n - r))) & full if r else mask


def _double(mask: int, n: int) -> int:
    out, m = 0, mask
    while m:
        r = (m & -m).bit_length() - 1
        out |= 1 << (2 * r % n)
        m &= m - 1
    return out


@dataclass(frozen=True)
class CosetSet:
    """A doubling-closed subset of ``{1..n}`` (plus ``0`` when ``extended``).

    ``mask`` has bit ``r`` set for residue ``r`` (so element ``n`` is bit 0);
    ``zero`` marks the extended symbol 0.
    """

    n: int
    mask: int
    zero: bool = False
    extended: bool = False

    def __post_init__(self):
        if self.n < 1 or self.n % 2 == 0:
            raise DomainError(f"modulus must be odd and positive, got {self.n}")
        if self.mask >> self.n:
            raise StructuralError("mask has bits beyond the modulus")
        if self.zero and not self.extended:
            raise StructuralError("the symbol 0 only exists in the extended setting")
        if _double(self.mask, self.n) != self.mask:
            raise StructuralError(f"{sorted(self.elems)} is not closed under doubling mod {self.n}")

    @classmethod
    def from_elems(cls, n: int, elems: Iterable[int], extended: bool = False) -> "CosetSet":
        mask, zero = 0, False
        for e in elems:
            e = int(e)
            if e == 0 and extended:
                zero = True
            elif 1 <= e <= n:
                mask |= 1 << (e % n)
            else:
                raise DomainError(f"element {e} outside {'0..' if extended else '1..'}{n}")
        return cls(n, mask, zero, extended)

    @classmethod
    def empty(cls, n: int, extended: bool = False) -> "CosetSet":
        return cls(n, 0, False, extended)

    @property
    def elems(self) -> frozenset[int]:
        out = {r or self.n for r in range(self.n) if self.mask >> r & 1}
        if self.zero:
            out.add(ZERO)
        return frozenset(out)

    def sorted(self) -> list[int]:
        return sorted(self.elems)

    def __len__(self) -> int:
        return self.mask.bit_count() + self.zero

    def __contains__(self, e: int) -> bool:
        if e == 0 and self.extended:
            return self.zero
        return 1 <= e <= self.n and bool(self.mask >> (e % self.n) & 1)

    def _same(self, other: "CosetSet") -> None:
        if self.n != other.n or self.extended != other.extended:
            raise StructuralError(f"coset sets over different moduli: {self.n} vs {other.n}")

    def __or__(self, other: "CosetSet") -> "CosetSet":
        self._same(other)
        return CosetSet(self.n, self.mask | other.mask, self.zero or other.zero, self.extended)

    def __and__(self, other: "CosetSet") -> "CosetSet":
        self._same(other)
        return CosetSet(self.n, self.mask & other.mask, self.zero and other.zero, self.extended)

    def __sub__(self, other: "CosetSet") -> "CosetSet":
        self._same(other)
        return CosetSet(self.n, self.mask & ~other.mask, self.zero and not other.zero, self.extended)

    def __le__(self, other: "CosetSet") -> bool:
        self._same(other)
        return not (self.mask & ~other.mask) and (other.zero or not self.zero)

    def __add__(self, other: "CosetSet") -> "CosetSet":
        return minkowski_sum(self, other)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.sorted())) + "}"


@lru_cache(maxsize=None)
def _minimal_cosets(n: int) -> tuple[tuple[int, ...], ...]:
    if n < 1 or n % 2 == 0:
        raise DomainError(f"n must be odd, got {n}")
    seen: set[int] = set()
    out = []
    for a in list(range(1, n)) + [n]:
        if a in seen:
            continue
        orb = cyclotomic_orbit(n, a)
        seen.update(orb)
        out.append(tuple(orb))
    return tuple(out)


def minimal_cosets(n: int, extended: bool = False) -> list[CosetSet]:
    """Orbits of doubling on ``{1..n}``, ordered by leader with ``{n}`` last."""
    return [CosetSet.from_elems(n, orb, extended) for orb in _minimal_cosets(n)]


def coset_leaders(n: int) -> list[int]:
    return [min(orb) for orb in _minimal_cosets(n)]


def coset_of(n: int, a: int, extended: bool = False) -> CosetSet:
    if extended and a == 0:
        return CosetSet(n, 0, True, True)
    return CosetSet.from_elems(n, cyclotomic_orbit(n, a), extended)


def union(sets: Iterable[CosetSet], n: int, extended: bool = False) -> CosetSet:
    out = CosetSet.empty(n, extended)
    for c in sets:
        out = out | c
    return out


def minkowski_sum(A: CosetSet, B: CosetSet) -> CosetSet:
    """``{a + b}``; in the extended setting ``0 + 0 = 0`` and ``0 + b = b``."""
    A._same(B)
    n = A.n
    mask = 0
    m = B.mask
    while m:
        r = (m & -m).bit_length() - 1
        mask |= _rotl(A.mask, r, n)
        m &= m - 1
    if A.zero:
        mask |= B.mask
    if B.zero:
        mask |= A.mask
    return CosetSet(n, mask, A.zero and B.zero, A.extended)


def negate(I: CosetSet) -> CosetSet:
    """``-I = {n - i}`` (with ``n`` fixed); the extended 0 stays 0."""
    n = I.n
    mask = 0
    for r in range(n):
        if I.mask >> r & 1:
            mask |= 1 << ((-r) % n)
    return CosetSet(n, mask, I.zero, I.extended)


def complement(I: CosetSet) -> CosetSet:
    """``[n] \\ I`` (and the extended 0 toggled)."""
    return CosetSet(I.n, ((1 << I.n) - 1) & ~I.mask, I.extended and not I.zero, I.extended)


def _longest_cyclic_run(mask: int, n: int) -> int:
    full = (1 << n) - 1
    if mask == full:
        return n
    run, m = 0, mask
    while m:  # after j steps, bit r survives iff r, r-1, ..., r-j are all set
        run += 1
        m &= _rotl(m, 1, n)
    return run


def amplitude(I: CosetSet) -> int:
    """Length of the shortest cyclic interval containing ``I``: ``n`` minus the largest gap."""
    if I.extended and I.zero:
        raise DomainError("amplitude is defined on subsets of Z_n")
    if I.mask == 0:
        raise DomainError("amplitude of the empty set")
    return I.n - _longest_cyclic_run(((1 << I.n) - 1) & ~I.mask, I.n)


def bch_delta(I: CosetSet) -> int:
    """Longest run of cyclically consecutive residues in ``I``.

    In the extended setting, the run ``0, 1, ..., r - 1`` starting at the
    symbol 0 also counts.
    """
    if len(I) == 0:
        raise DomainError("bch_delta of the empty set")
    delta = _longest_cyclic_run(I.mask, I.n)
    if I.zero:
        r = 1
        while r < I.n and I.mask >> r & 1:
            r += 1
        delta = max(delta, r)
    return delta


def design_distance(I2: CosetSet) -> int:
    """Lower bound on the minimum distance of ``C(I2)^⊥`` (or its extended analogue)."""
    if len(I2) == 0:
        return 1
    if not I2.extended:
        return I2.n - amplitude(complement(I2)) + 1 if I2.mask != (1 << I2.n) - 1 else I2.n + 1
    if not I2.zero:
        return 1
    return bch_delta(I2) + 1


def _check_field(field: ExtField, n: int) -> None:
    if field.n_max % n:
        raise DomainError(f"{n} does not divide 2^{field.s} - 1")


def generator_polynomial(field: ExtField, n: int, I: CosetSet) -> int:
    """``prod`` of minimal polynomials of ``beta^j`` over the cosets covering ``J = [n] \\ I``."""
    _check_field(field, n)
    g = 1
    J = complement(I)
    for orb in _minimal_cosets(n):
        if J.mask >> (orb[0] % n) & 1:
            g = polymul2(g, minimal_polynomial(field, n, orb[0]))
    return g


def _cyclic_route_a(field: ExtField, n: int, I: CosetSet) -> BinaryCode:
    g = generator_polynomial(field, n, I)
    k = len(I)
    if g.bit_length() - 1 != n - k:
        raise InconsistencyError(f"generator polynomial has degree {g.bit_length() - 1}, expected {n - k}")
    if k == 0:
        return BinaryCode.zero(n)
    coeffs = np.array([(g >> i) & 1 for i in range(g.bit_length())], dtype=np.uint8)
    rows = np.zeros((k, n), dtype=np.uint8)
    for i in range(k):
        rows[i, i : i + coeffs.size] = coeffs
    return BinaryCode.from_bits(rows)


def _binary_subfield_code(field: ExtField, H: np.ndarray, length: int) -> BinaryCode:
    """Binary vectors annihilated by every row of the GF(2^s) matrix ``H``."""
    if H.shape[0] == 0:
        return BinaryCode.full(length)
    Hb = BinaryMatrix.from_bits(binary_expansion(field, H))
    return BinaryCode(kernel(Hb))


def _evaluation_rows(field: ExtField, n: int, exps: Iterable[int], extended: bool) -> np.ndarray:
    """Rows ``(x^e)`` at ``[0,] 1, beta, ..., beta^{n-1}``, with ``0^0 = 1``."""
    beta_log = field.n_max // n
    ks = np.arange(n, dtype=np.int64)
    rows = []
    for e in exps:
        vals = field.exp[(beta_log * ((e * ks) % n)) % field.n_max]
        if extended:
            vals = np.concatenate([[1 if e == 0 else 0], vals])
        rows.append(vals)
    width = n + 1 if extended else n
    return np.array(rows, dtype=np.int64).reshape(-1, width)


def _cyclic_route_b(field: ExtField, n: int, I: CosetSet) -> BinaryCode:
    G = _evaluation_rows(field, n, [(-e) % n for e in I.sorted()], False)
    H = gf_kernel(field, G) if G.shape[0] else np.eye(n, dtype=np.int64)
    return _binary_subfield_code(field, H, n)


def cyclic_code(field: ExtField, n: int, I: CosetSet, route: str = "A") -> BinaryCode:
    """``C(I)``: the binary code whose codewords ``c(x)`` vanish at ``beta^j`` for ``j`` outside ``I``.

    Coordinate ``k`` corresponds to ``x^k`` (equivalently the point ``beta^k``).
    """
    if I.extended:
        raise StructuralError("use extended_cyclic_code for extended coset sets")
    if I.n != n:
        raise StructuralError(f"coset set is mod {I.n}, expected {n}")
    _check_field(field, n)
    if route == "A":
        C = _cyclic_route_a(field, n, I)
    elif route == "B":
        C = _cyclic_route_b(field, n, I)
    else:
        raise DomainError(f"unknown route {route!r}")
    if C.k != len(I):
        raise InconsistencyError(f"C(I) has dimension {C.k}, expected {len(I)}")
    return C


def _extended_parity_exponents(n: int, I: CosetSet) -> tuple[list[int], list[list[int]]]:
    """Monomials spanning the dual of the evaluation code of ``I`` over ``{0} ∪ X_n``.

    Over these ``n + 1`` points, ``x^a · x^b`` sums to 1 exactly when
    ``a + b ≡ 0 (mod n)`` and not both are the symbol 0.  Exponents
    ``1..n-1`` pair off with their negatives; ``x^0`` and ``x^n`` form a
    2x2 block with Gram matrix ``[[0, 1], [1, 1]]``.
    """
    singles = [b for b in range(1, n) if (n - b) not in I]
    has0, hasn = I.zero, n in I
    if has0 and hasn:
        block: list[list[int]] = []
    elif has0:
        block = [[0]]
    elif hasn:
        block = [[0, n]]
    else:
        block = [[0], [n]]
    return singles, block


def extended_cyclic_code(field: ExtField, n: int, I: CosetSet, method: str = "dual") -> BinaryCode:
    """``Ĉ(I)``: the binary subfield subcode of the evaluation code of ``{x^i : i ∈ I}``.

    Coordinates are ordered ``[0, 1, beta, ..., beta^{n-1}]``.  The
    parity system is either written down directly (``method="dual"``) or
    obtained as the GF(2^s) kernel of the evaluation matrix
    (``method="kernel"``); both are expanded into binary constraints.
    """
    if not I.extended:
        raise StructuralError("extended_cyclic_code needs an extended coset set")
    if I.n != n:
        raise StructuralError(f"coset set is mod {I.n}, expected {n}")
    _check_field(field, n)
    if method == "kernel":
        G = _evaluation_rows(field, n, I.sorted(), True)
        H = gf_kernel(field, G) if G.shape[0] else np.eye(n + 1, dtype=np.int64)
    elif method == "dual":
        singles, block = _extended_parity_exponents(n, I)
        H = _evaluation_rows(field, n, singles, True)
        for combo in block:
            H = np.vstack([H, np.bitwise_xor.reduce(_evaluation_rows(field, n, combo, True), axis=0)[None, :]])
    else:
        raise DomainError(f"unknown method {method!r}")
    C = _binary_subfield_code(field, H, n + 1)
    if C.k != len(I):
        raise InconsistencyError(f"extended code has dimension {C.k}, expected {len(I)}")
    return C


def construct(I: CosetSet, field: ExtField | None = None) -> BinaryCode:
    """``C(I)`` or ``Ĉ(I)`` over the smallest field containing the ``n``-th roots of unity."""
    if field is None:
        s = 1
        while ((1 << s) - 1) % I.n:
            s += 1
        field = field_new(max(s, 2))
    if I.extended:
        return extended_cyclic_code(field, I.n, I)
    return cyclic_code(field, I.n, I)


@dataclass(frozen=True)
class CyclicParams:
    n: int
    k: int
    d_lower: int

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},>={self.d_lower}]]"


def csst_cyclic_check(I1: CosetSet, I2: CosetSet) -> tuple[bool, CyclicParams]:
    """``I2 ⊆ I1`` and ``n ∉ I1 + I1 + I2``, cross-checked with ``I1 + I1 ⊆ -J2``."""
    I1._same(I2)
    n = I1.n
    S = I1 + I1 + I2
    ok = I2 <= I1 and n not in S
    if not I1.extended:
        alt = I2 <= I1 and (I1 + I1) <= negate(complement(I2))
        if alt != ok:
            raise InconsistencyError("the two forms of the cyclic CSS-T criterion disagree")
    N = n + 1 if I1.extended else n
    return ok, CyclicParams(N, len(I1) - len(I2), design_distance(I2))


@dataclass(frozen=True)
class CyclicMaximality:
    maximal_in_c1: bool
    maximal_in_c2: bool
    maximal: bool


def cyc_maximality(I1: CosetSet, I2: CosetSet) -> CyclicMaximality:
    if I1.extended or I2.extended:
        raise DomainError("coset-level maximality is stated for cyclic codes only")
    ok, _ = csst_cyclic_check(I1, I2)
    if not ok or len(I2) == 0:
        raise DomainError("coset-level maximality needs a CSS-T pair with I2 nonempty")
    mJ1 = negate(complement(I1))
    mJ2 = negate(complement(I2))
    s11, s12 = I1 + I1, I1 + I2
    in_c1 = mJ1 == (I2 | s12)
    in_c2 = mJ2 == (mJ1 | s11)
    full = mJ1 == s12 and mJ2 == s11
    if full != (in_c1 and in_c2):
        raise InconsistencyError("coset-level maximality flags are inconsistent")
    return CyclicMaximality(in_c1, in_c2, full)


def restricted_weight(a: int, t: int, s: int) -> int:
    """Largest number of ones among ``t`` cyclically consecutive binary digits of ``a``."""
    if not 1 <= t <= s:
        raise DomainError(f"need 1 <= t <= s, got t={t}, s={s}")
    n = (1 << s) - 1
    if not 0 <= a <= n:
        raise DomainError(f"{a} outside 0..{n}")
    digits = [(a >> i) & 1 for i in range(s)]
    digits2 = digits + digits
    return max(sum(digits2[i : i + t]) for i in range(s))


def coset_by_restricted_weight(t: int, mu: int, s: int, extended: bool = False) -> CosetSet:
    """``{a ∈ {1..n} : w^(t)(a) <= mu}``, plus 0 in the extended setting."""
    if mu < 0 or (mu == 0 and not extended):
        raise DomainError(f"mu={mu} out of range")
    n = (1 << s) - 1
    elems = [a for a in range(1, n + 1) if restricted_weight(a, t, s) <= mu]
    if extended:
        elems.append(0)
    return CosetSet.from_elems(n, elems, extended)


def restricted_csst(t: int, mu1: int, mu2: int, s: int, extended: bool = False) -> tuple[bool, CosetSet, CosetSet]:
    """The restricted-weight pair and whether ``mu2 <= mu1`` and ``2⌊mu1 s/t⌋ + ⌊mu2 s/t⌋ <= s - 1``."""
    if not 1 <= t <= s:
        raise DomainError(f"need 1 <= t <= s, got t={t}, s={s}")
    lo = 0 if extended else 1
    if not (lo <= mu1 <= t and lo <= mu2 <= t):
        raise DomainError(f"mu values must lie in {lo}..{t}")
    I1 = coset_by_restricted_weight(t, mu1, s, extended)
    I2 = coset_by_restricted_weight(t, mu2, s, extended)
    ok = mu2 <= mu1 and 2 * (mu1 * s // t) + (mu2 * s // t) <= s - 1
    if ok and not csst_cyclic_check(I1, I2)[0]:
        raise InconsistencyError("restricted-weight pair fails the cyclic criterion")
    return ok, I1, I2


@dataclass(frozen=True)
class GreedyResult:
    s: int
    t: int
    extended: bool
    I1: CosetSet
    I2: CosetSet
    params: CyclicParams
    skipped: tuple[int, ...]  # leaders of the cosets rejected by the pass


def greedy_search(s: int, t: int, extended: bool = False) -> GreedyResult:
    """Greedy coset selection for a CSS-T pair of (extended) cyclic codes of length ``2^s - 1``.

    ``I2`` is the union of the first ``t`` nonzero minimal cosets (plus the
    symbol 0 when ``extended``).  Starting from ``I1 = I2``, the remaining
    cosets are visited once in leader order and kept iff ``n ∉ I1 + I1 +
    I2`` still holds.  Finally ``{n}`` is adjoined in the cyclic case.
    """
    if not 2 <= s <= 16:
        raise DomainError(f"s={s} outside 2..16")
    n = (1 << s) - 1
    cosets = minimal_cosets(n, extended)
    nonzero = cosets[:-1]  # {n} is last
    if not 1 <= t <= len(nonzero):
        raise DomainError(f"t={t} outside 1..{len(nonzero)}")
    I2 = union(nonzero[:t], n, extended)
    if extended:
        I2 = I2 | CosetSet(n, 0, True, True)
    if n in I2 + I2 + I2:
        raise DomainError(f"I2 of the first {t} cosets fails its own triple-sum condition")
    I1 = I2
    skipped = []
    for c in nonzero[t:]:
        cand = I1 | c
        if n in cand + cand + I2:
            skipped.append(min(c.elems))
        else:
            I1 = cand
    if not extended:
        I1 = I1 | cosets[-1]
    ok, params = csst_cyclic_check(I1, I2)
    if not ok:
        raise InconsistencyError("greedy output fails the cyclic criterion")
    return GreedyResult(s, t, extended, I1, I2, params, tuple(skipped))
