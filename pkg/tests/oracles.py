"""Independent reference implementations used as test oracles.

Everything here works on Python integers as bit masks (bit ``j`` =
coordinate ``j``) and shares no code with the package.
"""

from __future__ import annotations

from itertools import product


def to_mask(bits) -> int:
    return sum(1 << j for j, b in enumerate(bits) if int(b))


def vec_mask(v) -> int:
    return to_mask(v.bits())


def rows_masks(code) -> list[int]:
    return [vec_mask(r) for r in code.rows()]


def xor_basis(masks) -> list[int]:
    """Echelon basis by the classic highest-bit insertion."""
    basis: list[int] = []
    for m in masks:
        for b in basis:
            m = min(m, m ^ b)
        if m:
            basis.append(m)
            basis.sort(reverse=True)
    return basis


def rank(masks) -> int:
    return len(xor_basis(masks))


def span(masks) -> set[int]:
    out = {0}
    for m in xor_basis(masks):
        out |= {x ^ m for x in out}
    return out


def same_space(a, b) -> bool:
    return span(a) == span(b)


def dot(a: int, b: int) -> int:
    return bin(a & b).count("1") & 1


def dual_span(masks, n: int) -> set[int]:
    """Brute force over all ``2^n`` vectors."""
    return {x for x in range(1 << n) if all(dot(x, m) == 0 for m in masks)}


def schur_span(a, b) -> set[int]:
    return span([x & y for x in a for y in b])


def weight(m: int) -> int:
    return bin(m).count("1")


def min_weight(masks) -> int:
    return min(weight(x) for x in span(masks) if x)


def random_masks(rng, k: int, n: int) -> list[int]:
    return [int(rng.integers(0, 1 << n)) for _ in range(k)]


def gf_mul(a: int, b: int, modulus: int, s: int) -> int:
    """Shift-and-add multiplication modulo a degree-``s`` polynomial."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> s & 1:
            a ^= modulus
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def csst_brute(c1_masks, c2_masks, n: int) -> bool:
    """Definition-level test: C2 ⊆ C1 and every ``x ∈ C2`` is orthogonal to every product in ``C1``."""
    S1, S2 = span(c1_masks), span(c2_masks)
    if not S2 <= S1:
        return False
    basis = xor_basis(c1_masks)
    prods = [a & b for a in basis for b in basis]
    return all(dot(x, p) == 0 for x in S2 for p in prods)


def cyclic_run(elems: set[int], n: int) -> int:
    """Longest run of consecutive residues (window scan, O(n^2))."""
    res = {e % n for e in elems}
    if len(res) == n:
        return n
    best = 0
    for start in range(n):
        L = 0
        while L < n and (start + L) % n in res:
            L += 1
        best = max(best, L)
    return best


def amplitude_naive(elems: set[int], n: int) -> int:
    """Smallest length of a cyclic window containing every residue."""
    res = {e % n for e in elems}
    for L in range(1, n + 1):
        for start in range(n):
            if res <= {(start + i) % n for i in range(L)}:
                return L
    raise AssertionError


def all_bits(n: int):
    return product((0, 1), repeat=n)
