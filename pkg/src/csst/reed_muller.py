"""Binary Reed-Muller codes.

Coordinates are the points of F2^m in integer order: coordinate ``v``
is the point whose ``i``-th entry is bit ``i`` of ``v``, so the origin
is coordinate 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .codes import BinaryCode, puncture, schur, shorten
from .errors import DomainError, InconsistencyError


@dataclass(frozen=True)
class RmSpec:
    m: int
    d: int

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("m must be >= 1")
        if not 0 <= self.d <= self.m:
            raise DomainError(f"order d={self.d} outside 0..{self.m}")

    @property
    def length(self) -> int:
        return 1 << self.m

    @property
    def dimension(self) -> int:
        return sum(comb(self.m, i) for i in range(self.d + 1))

    @property
    def distance(self) -> int:
        return 1 << (self.m - self.d)


def _points(m: int) -> np.ndarray:
    v = np.arange(1 << m)
    return ((v[:, None] >> np.arange(m)) & 1).astype(np.uint8)


def monomial_evaluations(m: int, d: int) -> np.ndarray:
    """Evaluations of every monomial of degree <= d, one row per monomial."""
    pts = _points(m)
    rows = []
    for deg in range(d + 1):
        for vars_ in combinations(range(m), deg):
            rows.append(np.prod(pts[:, list(vars_)], axis=1, dtype=np.uint8) if vars_ else np.ones(1 << m, dtype=np.uint8))
    return np.array(rows, dtype=np.uint8)


def rm_code(m: int, d: int) -> BinaryCode:
    """``RM_m(d)``; ``d = m`` gives the full space."""
    spec = RmSpec(m, d)
    C = BinaryCode.from_bits(monomial_evaluations(m, d))
    if C.k != spec.dimension:
        raise InconsistencyError(f"RM_{m}({d}) has dimension {C.k}, expected {spec.dimension}")
    return C


def rm_motivating_pair() -> tuple[BinaryCode, BinaryCode]:
    """``(RM_4(1)`` punctured at the origin, ``RM_4(1)`` shortened at the origin``)``: the [[15,1,3]] pair."""
    rm = rm_code(4, 1)
    return puncture(rm, [0]), shorten(rm, [0])


def rm_schur_identity_check(m: int, d1: int, d2: int) -> bool:
    """``RM_m(d1) ⋆ RM_m(d2) == RM_m(min(d1 + d2, m))``."""
    lhs = schur(rm_code(m, d1), rm_code(m, d2))
    return lhs == rm_code(m, min(d1 + d2, m))


def rm_csst_params(m: int, d1: int, d2: int) -> tuple[int, int, int] | None:
    """``(n, k, d)`` of the CSS-T code from ``(RM_m(d1), RM_m(d2))``, or None if not a pair.

    The pair is CSS-T iff ``d2 <= d1`` and ``2 d1 + d2 <= m - 1`` (the triple
    product stays inside ``RM_m(m-1)``, the even-weight code); the
    distance is that of ``RM_m(d2)^⊥ = RM_m(m-1-d2)``.
    """
    if not (0 <= d2 <= d1 <= m and 2 * d1 + d2 <= m - 1):
        return None
    k = RmSpec(m, d1).dimension - RmSpec(m, d2).dimension
    return 1 << m, k, 1 << (d2 + 1)


def rm_table_rows(m: int, min_distance: int = 3, min_k: int = 1) -> list[tuple[int, int, int, int, int]]:
    """For each ``d2 >= 1``, the pair with the largest admissible ``d1``.

    Returns ``(d1, d2, n, k, d)`` rows with ``k >= min_k`` and distance at
    least ``min_distance``.
    """
    out = []
    for d2 in range(1, m):
        d1 = (m - 1 - d2) // 2
        p = rm_csst_params(m, d1, d2)
        if p is None or p[1] < min_k or p[2] < min_distance:
            continue
        out.append((d1, d2) + p)
    return out
