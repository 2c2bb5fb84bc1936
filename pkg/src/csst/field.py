"""Arithmetic in GF(2^s) through log/antilog tables.

Elements are integers in ``[0, 2^s)`` read as polynomials in the
primitive element ``alpha`` (bit ``i`` is the coefficient of ``alpha^i``).
Binary polynomials are integers as well, bit ``i`` being the coefficient
of ``x^i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, InconsistencyError, StructuralError

# Lexicographically smallest primitive polynomial of each degree (as bit masks).
PRIMITIVE_POLYNOMIALS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x402B,
    15: 0x8003,
    16: 0x1002D,
}


class ExtField:
    """GF(2^s) built on a fixed primitive modulus.

    ``exp[i] = alpha^i`` for ``0 <= i < 2 * (2^s - 1)`` (doubled so that
    sums of two logs index directly) and ``log[a]`` inverts it for
    ``a != 0``.
    """

    def __init__(self, s: int, modulus: int | None = None):
        if not 2 <= s <= 16:
            raise DomainError(f"extension degree must lie in [2, 16], got {s}")
        if modulus is None:
            modulus = PRIMITIVE_POLYNOMIALS[s]
        if modulus.bit_length() != s + 1:
            raise DomainError(f"modulus {modulus:#x} does not have degree {s}")
        self.s = s
        self.modulus = modulus
        self.order = 1 << s
        self.n_max = self.order - 1
        exp = np.zeros(2 * self.n_max, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        a = 1
        for i in range(self.n_max):
            if log[a] != -1:
                raise DomainError(f"modulus {modulus:#x} is not primitive (alpha has order {i})")
            exp[i] = a
            log[a] = i
            a <<= 1
            if a & self.order:
                a ^= modulus
        if a != 1:
            raise DomainError(f"modulus {modulus:#x} is not primitive")
        exp[self.n_max :] = exp[: self.n_max]
        exp.setflags(write=False)
        log.setflags(write=False)
        self.exp = exp
        self.log = log

    def __repr__(self) -> str:
        return f"ExtField(s={self.s}, modulus={self.modulus:#x})"

    # scalar arithmetic on raw integers
    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no inverse")
        return int(self.exp[(self.n_max - self.log[a]) % self.n_max])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DomainError("zero has no inverse")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % self.n_max])

    def alpha_pow(self, e: int) -> int:
        return int(self.exp[e % self.n_max])

    def element(self, value: int) -> "ExtFieldElement":
        return ExtFieldElement(self, value)

    def root_of_unity(self, n: int) -> int:
        """``beta = alpha^((2^s - 1)/n)``, a primitive ``n``-th root of unity."""
        if n < 1 or self.n_max % n:
            raise DomainError(f"{n} does not divide 2^{self.s} - 1 = {self.n_max}")
        return self.alpha_pow(self.n_max // n)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative order")
        return self.n_max // math.gcd(int(self.log[a]), self.n_max)

    # vectorized arithmetic on integer arrays
    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)


@lru_cache(maxsize=None)
def field_new(s: int) -> ExtField:
    """The field GF(2^s) on the built-in primitive modulus (cached per ``s``)."""
    return ExtField(s)


@dataclass(frozen=True)
class ExtFieldElement:
    field: ExtField
    coeffs: int

    def __post_init__(self):
        if not 0 <= self.coeffs < self.field.order:
            raise StructuralError(f"{self.coeffs} is not an element of GF(2^{self.field.s})")

    def _same(self, other: "ExtFieldElement") -> None:
        if not isinstance(other, ExtFieldElement):
            raise StructuralError("operand is not a field element")
        if other.field is not self.field and (
            other.field.s != self.field.s or other.field.modulus != self.field.modulus
        ):
            raise StructuralError("elements belong to different fields")

    def __add__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._same(other)
        return ExtFieldElement(self.field, self.coeffs ^ other.coeffs)

    __sub__ = __add__

    def __mul__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._same(other)
        return ExtFieldElement(self.field, self.field.mul(self.coeffs, other.coeffs))

    def __pow__(self, e: int) -> "ExtFieldElement":
        return ExtFieldElement(self.field, self.field.pow(self.coeffs, e))

    def inv(self) -> "ExtFieldElement":
        return ExtFieldElement(self.field, self.field.inv(self.coeffs))

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def __repr__(self) -> str:
        return f"ExtFieldElement({self.coeffs:#x} in GF(2^{self.field.s}))"


def add(a: ExtFieldElement, b: ExtFieldElement) -> ExtFieldElement:
    return a + b


def mul(a: ExtFieldElement, b: ExtFieldElement) -> ExtFieldElement:
    return a * b


def inv(a: ExtFieldElement) -> ExtFieldElement:
    return a.inv()


def pow(a: ExtFieldElement, e: int) -> ExtFieldElement:  # noqa: A001 - mirrors the field operation name
    return a ** e


def cyclotomic_orbit(n: int, a: int) -> list[int]:
    """``{2^j a mod n}`` with representatives in ``1..n`` (residue 0 written ``n``)."""
    out: list[int] = []
    x = a % n or n
    while x not in out:
        out.append(x)
        x = (2 * x) % n or n
    return out


def minimal_polynomial(field: ExtField, n: int, a: int) -> int:
    """Binary minimal polynomial of ``beta^a``, ``beta`` a primitive ``n``-th root of unity.

    Expands ``prod (x - beta^i)`` over the cyclotomic orbit of ``a`` in
    GF(2^s) and checks that every coefficient landed in F2.
    """
    if not 1 <= a <= n:
        raise DomainError(f"a={a} outside 1..{n}")
    beta = field.root_of_unity(n)
    poly = [1]  # coefficients in GF(2^s), lowest degree first
    for i in cyclotomic_orbit(n, a):
        root = field.pow(beta, i)
        nxt = [0] * (len(poly) + 1)
        for d, c in enumerate(poly):
            nxt[d + 1] ^= c
            nxt[d] ^= field.mul(c, root)
        poly = nxt
    if any(c not in (0, 1) for c in poly):
        raise InconsistencyError(f"minimal polynomial of beta^{a} has non-binary coefficients")
    return sum(1 << d for d, c in enumerate(poly) if c)


def polymul2(a: int, b: int) -> int:
    """Product of binary polynomials given as bit masks."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def polymod2(a: int, m: int) -> int:
    """Remainder of binary polynomial ``a`` modulo ``m``."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def gf_rref(field: ExtField, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a matrix over GF(2^s) (integer entries)."""
    M = np.array(A, dtype=np.int64, copy=True)
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            M[[r, p]] = M[[p, r]]
        M[r] = field.vmul(M[r], field.inv(int(M[r, c])))
        others = np.flatnonzero(M[:, c])
        others = others[others != r]
        if others.size:
            factors = M[others, c]
            M[others] ^= field.vmul(factors[:, None], M[r][None, :])
        pivots.append(c)
        r += 1
    return M[:r], pivots


def gf_kernel(field: ExtField, A) -> np.ndarray:
    """Basis of the right kernel ``{v : A v = 0}`` over GF(2^s)."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, piv = gf_rref(field, A) if A.shape[0] else (np.zeros((0, cols), dtype=np.int64), [])
    pivset = set(piv)
    free = [c for c in range(cols) if c not in pivset]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for idx, f in enumerate(free):
        K[idx, f] = 1
        if piv:
            K[idx, piv] = R[:, f]  # characteristic 2: -x = x
    return K


def binary_expansion(field: ExtField, H) -> np.ndarray:
    """Split each GF(2^s) row into ``s`` binary rows (one per polynomial-basis coordinate)."""
    H = np.asarray(H, dtype=np.int64)
    planes = [(H >> b) & 1 for b in range(field.s)]
    if not H.shape[0]:
        return np.zeros((0, H.shape[1]), dtype=np.uint8)
    return np.concatenate(planes, axis=0).astype(np.uint8)
