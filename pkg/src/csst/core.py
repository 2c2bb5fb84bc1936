"""CSS-T pairs: verification, quantum parameters and the poset predicates.

A pair ``(C1, C2)`` of binary codes is CSS-T iff
``C2 ⊆ C1 ∩ (C1^{⋆2})^⊥``; that containment is the production test.
The other equivalent conditions are evaluated on request as cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ._backend import kernels
from ._bits import row_weights
from .codes import (
    DEFAULT_BUDGET,
    DEFAULT_EXACT_THRESHOLD,
    BinaryCode,
    codeword_words,
    code_sum,
    combination,
    contains,
    dual,
    first_outside,
    information_set_search,
    intersect,
    is_even,
    is_self_orthogonal,
    kernel_distance_certificate,
    schur,
    schur_power,
    syndrome_rows,
)
from .errors import CapacityError, DomainError, InconsistencyError, StructuralError
from .gf2 import BinaryMatrix, BinaryVector

STRONG_NONEXTENDABILITY_CAP = 20


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d_lower: int
    d_upper: int | None = None
    d_exact: bool = False
    witness: BinaryVector | None = None
    method: str = "bound"
    iterations: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise DomainError(f"negative quantum dimension {self.k}")
        if self.d_upper is not None and self.d_lower > self.d_upper:
            raise InconsistencyError(f"d_lower={self.d_lower} exceeds d_upper={self.d_upper}")

    @property
    def d(self) -> int | None:
        return self.d_lower if self.d_exact else None

    def __str__(self) -> str:
        if self.d_exact:
            return f"[[{self.n},{self.k},{self.d_lower}]]"
        hi = "" if self.d_upper is None else f"..{self.d_upper}"
        return f"[[{self.n},{self.k},>={self.d_lower}{hi}]]"


@dataclass
class CssTReport:
    status: str  # "pair", "not_pair" or "trivial"
    condition_results: dict[int, bool | None]
    failing_witness: BinaryVector | None = None
    failed_condition: str | None = None
    params: QuantumParams | None = None
    maximal_in_c1: bool | None = None
    maximal_in_c2: bool | None = None
    maximal: bool | None = None
    triorthogonal_c2: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def is_pair(self) -> bool:
        return self.status == "pair"


def _check_lengths(C1: BinaryCode, C2: BinaryCode) -> None:
    if C1.n != C2.n:
        raise StructuralError(f"length mismatch: {C1.n} vs {C2.n}")


def condition_containment(C1: BinaryCode, C2: BinaryCode) -> tuple[bool, BinaryVector | None, str | None]:
    """``C2 ⊆ C1 ∩ (C1^{⋆2})^⊥``, with the first offending generator of ``C2``."""
    y = first_outside(C1, C2)
    if y is not None:
        return False, y, "C2 not contained in C1"
    y = first_outside(dual(schur_power(C1, 2)), C2)
    if y is not None:
        return False, y, "C2 not orthogonal to C1^2"
    return True, None, None


def condition_dual_sum(C1: BinaryCode, C2: BinaryCode) -> bool:
    """``C1^⊥ + C1^{⋆2} ⊆ C2^⊥``."""
    return contains(dual(C2), code_sum(dual(C1), schur_power(C1, 2)))


def condition_punctured(C1: BinaryCode, C2: BinaryCode, max_k2: int = DEFAULT_EXACT_THRESHOLD) -> bool | None:
    """``C2 ⊆ C1``, ``C2`` even, and ``C1`` punctured on ``Z(x)`` self-orthogonal for all ``x ∈ C2``.

    The punctured code keeps only ``supp(x)``, so its Gram matrix has
    entries ``wt(g_a ⋆ g_b ⋆ x) mod 2``.  Returns None when ``C2`` is too
    large to enumerate.
    """
    if not contains(C1, C2) or not is_even(C2):
        return False
    if C2.k > max_k2:
        return None
    g = C1.gen.words
    if C1.k == 0:
        return True
    i, j = np.triu_indices(C1.k)
    gram_rows = g[i] & g[j]
    xs = codeword_words(C2, cap=max_k2)[1:]
    for start in range(0, xs.shape[0], 256):
        chunk = xs[start : start + 256]
        prod = chunk[:, None, :] & gram_rows[None, :, :]
        if np.any(np.bitwise_count(prod).sum(axis=-1) & 1):
            return False
    return True


def verify_csst(
    C1: BinaryCode,
    C2: BinaryCode,
    cross_check: bool = False,
    *,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
) -> CssTReport:
    """Decide whether ``(C1, C2)`` is a CSS-T pair.

    With ``cross_check`` the dual-sum condition and (for small ``C2``)
    the punctured-code condition are evaluated as well; any disagreement
    raises :class:`InconsistencyError`.  The definition's self-dual-subcode
    condition is not searched for: it is recorded as the value of the
    punctured-code condition, to which it is equivalent.
    """
    _check_lengths(C1, C2)
    conds: dict[int, bool | None] = {1: None, 2: None, 3: None, 4: None}
    if C2.k == 0:
        return CssTReport("trivial", conds, notes=["C2 = {0} is excluded from the poset"])
    ok, witness, why = condition_containment(C1, C2)
    conds[3] = ok
    if cross_check:
        conds[4] = condition_dual_sum(C1, C2)
        conds[2] = condition_punctured(C1, C2, exact_threshold)
        conds[1] = conds[2]
        computed = [v for v in conds.values() if v is not None]
        if len(set(computed)) > 1:
            raise InconsistencyError(f"equivalent conditions disagree: {conds}")
    report = CssTReport("pair" if ok else "not_pair", conds, witness, why)
    if ok:
        if not is_self_orthogonal(C2):
            raise InconsistencyError("CSS-T pair with a C2 that is not self-orthogonal")
        report.triorthogonal_c2 = check_triorthogonality_consequence(C2)
        if not report.triorthogonal_c2:
            raise InconsistencyError("CSS-T pair with 1 not orthogonal to C2^3")
    return report


def quantum_params(
    C1: BinaryCode,
    C2: BinaryCode,
    d_lower: int | None = None,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    *,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
) -> QuantumParams:
    """Parameters ``[[n, k1 - k2, d]]`` with certified bounds on ``d``.

    ``d_lower`` certifies ``wt(C2^⊥)`` (caller's bound, column certificate,
    or exhaustive enumeration); ``d_upper`` is the weight of a witness in
    ``C2^⊥ \\ C1^⊥``.
    """
    _check_lengths(C1, C2)
    n, k = C1.n, C1.k - C2.k
    if k < 0:
        raise DomainError("C2 has larger dimension than C1")
    if n - C2.k == 0:
        raise DomainError("C2 is the full space")
    if n - C2.k <= exact_threshold:
        D = dual(C2)
        G = np.ascontiguousarray(D.gen.words)
        S = np.ascontiguousarray(syndrome_rows(D.gen, C1.gen))
        w_all, _, w_out, m_out = kernels.gray_min_weight(G, S)
        if d_lower is not None and d_lower > w_all:
            raise InconsistencyError(f"claimed bound {d_lower} exceeds wt(C2^perp) = {w_all}")
        if w_out < 0:
            return QuantumParams(n, k, w_all, None, False, None, "exhaustive")
        return QuantumParams(n, k, w_all, w_out, w_all == w_out, combination(D.gen, m_out), "exhaustive")
    lo = max(d_lower or 1, kernel_distance_certificate(C2.gen))
    if lo % 2 and BinaryVector.ones(n) in C2:
        lo += 1  # C2^⊥ is an even code
    w, witness, its = information_set_search(
        C2.gen, budget=budget, seed=seed, stop_at=lo, exclude=C1.gen
    )
    if witness is None:
        return QuantumParams(n, k, lo, None, False, None, "isd", its)
    if w < lo:
        raise InconsistencyError(f"found a word of weight {w} below the certified bound {lo}")
    return QuantumParams(n, k, lo, w, w == lo, witness, "isd", its)


def extension_space(C1: BinaryCode, C2: BinaryCode) -> BinaryCode:
    """``C2^⊥ ∩ (C1 ⋆ C2)^⊥``: the vectors that may be added to ``C1``."""
    _check_lengths(C1, C2)
    E = dual(code_sum(C2, schur(C1, C2)))
    if not contains(E, C1):
        raise InconsistencyError("extension space does not contain C1; is (C1, C2) a CSS-T pair?")
    return E


def propagate(
    C1: BinaryCode,
    C2: BinaryCode,
    bound_d_lower: int | None = None,
    *,
    params: QuantumParams | None = None,
    verify_steps: bool = False,
) -> tuple[list[BinaryCode], QuantumParams]:
    """Grow ``C1`` one vector at a time until it is maximal in the first slot.

    Each step adds the first RREF generator of the extension space not in
    the current ``C1``.  The distance bounds of ``params`` (if given)
    remain valid along the chain: ``wt(C2^⊥)`` does not change and a
    witness outside ``C1^⊥`` stays outside the smaller ``C1'^⊥``.
    """
    chain: list[BinaryCode] = []
    cur = C1
    while True:
        E = extension_space(cur, C2)
        if E == cur:
            break
        y = first_outside(cur, E)
        cur = code_sum(cur, BinaryCode.span([y], cur.n))
        if verify_steps and not verify_csst(cur, C2).is_pair:
            raise InconsistencyError("propagation step left the set of CSS-T pairs")
        chain.append(cur)
    k = cur.k - C2.k
    if params is not None:
        lo = max(params.d_lower, bound_d_lower or 1)
        final = QuantumParams(C1.n, k, lo, params.d_upper, params.d_upper == lo, params.witness, params.method, params.iterations)
    else:
        final = QuantumParams(C1.n, k, bound_d_lower or 1)
    return chain, final


def is_maximal_in_c2(C1: BinaryCode, C2: BinaryCode) -> bool:
    return C2 == intersect(C1, dual(schur_power(C1, 2)))


def is_maximal_in_c1(C1: BinaryCode, C2: BinaryCode) -> bool:
    return C1 == extension_space(C1, C2)


def is_maximal(C1: BinaryCode, C2: BinaryCode) -> bool:
    """``C1^⊥ = C1 ⋆ C2`` and ``C2^⊥ = C1^{⋆2}``, cross-checked against both slot predicates."""
    full = dual(C1) == schur(C1, C2) and dual(C2) == schur_power(C1, 2)
    if full != (is_maximal_in_c1(C1, C2) and is_maximal_in_c2(C1, C2)):
        raise InconsistencyError("full maximality disagrees with the per-slot predicates")
    return full


def maximality_flags(C1: BinaryCode, C2: BinaryCode) -> tuple[bool, bool, bool]:
    return is_maximal_in_c1(C1, C2), is_maximal_in_c2(C1, C2), is_maximal(C1, C2)


@dataclass(frozen=True)
class SpecialCaseFlags:
    square_is_dual: bool  # (C, C) maximal
    square_is_self: bool | None  # (C, C^⊥) maximal; None when C^⊥ ⊄ C or C^⊥ = {0}


def special_case_checks(C: BinaryCode) -> SpecialCaseFlags:
    sq = schur_power(C, 2)
    Cd = dual(C)
    flag1 = sq == Cd
    pair1 = C.k > 0 and verify_csst(C, C).is_pair
    if flag1 != (pair1 and is_maximal(C, C)):
        raise InconsistencyError("C^2 = C^perp disagrees with maximality of (C, C)")
    flag2 = None
    if Cd.k > 0 and contains(C, Cd):
        flag2 = sq == C
        pair2 = verify_csst(C, Cd).is_pair
        if flag2 != (pair2 and is_maximal(C, Cd)):
            raise InconsistencyError("C^2 = C disagrees with maximality of (C, C^perp)")
    return SpecialCaseFlags(flag1, flag2)


def strong_nonextendability_c1(C1: BinaryCode, cap: int = STRONG_NONEXTENDABILITY_CAP) -> bool:
    """True iff ``C1 ⋆ y = C1^⊥`` for every nonzero ``y ∈ C1 ∩ (C1^{⋆2})^⊥``.

    In that case no CSS-T pair has a first code strictly containing ``C1``.
    """
    Y = intersect(C1, dual(schur_power(C1, 2)))
    if Y.k > cap:
        raise CapacityError(f"C1 ∩ (C1^2)^perp has dimension {Y.k} > {cap}")
    target = dual(C1)
    for w in codeword_words(Y, cap=cap)[1:]:
        y = BinaryCode.span([BinaryVector(C1.n, w)], C1.n)
        if schur(C1, y) != target:
            return False
    return True


def strong_nonextendability_c2(C2: BinaryCode) -> bool:
    """True iff ``C2^{⋆2} = C2^⊥``, i.e. ``(C2, C2)`` is maximal."""
    return schur_power(C2, 2) == dual(C2)


def check_triorthogonality_consequence(C2: BinaryCode) -> bool:
    """``𝟙 ∈ (C2^{⋆3})^⊥``: every generator of the Schur cube has even weight."""
    cube = schur_power(C2, 3)
    return bool(np.all(cube.gen.row_weights() % 2 == 0))


def is_triorthogonal_matrix(G: BinaryMatrix) -> bool:
    """Even weight for every product of two and of three distinct rows."""
    w = G.words
    for a, b in combinations(range(G.n_rows), 2):
        if int(np.bitwise_count(w[a] & w[b]).sum()) & 1:
            return False
    if G.n_rows >= 3:
        idx = np.array(list(combinations(range(G.n_rows), 3)))
        prods = w[idx[:, 0]] & w[idx[:, 1]] & w[idx[:, 2]]
        if np.any(row_weights(prods) & 1):
            return False
    return True


def scaling_exponent(n: int, k: int, d: int) -> float:
    """``log2(n / k) / log2(d)``."""
    if k < 1:
        raise DomainError("scaling exponent needs k >= 1")
    if d < 2:
        raise DomainError("scaling exponent needs d >= 2")
    return math.log2(n / k) / math.log2(d)


def pair_family_dmin2(n: int) -> tuple[BinaryCode, BinaryCode]:
    """``(⟨e_{2i-1} + e_{2i}⟩, ⟨𝟙⟩)`` for even ``n``: parameters ``[[n, n/2 - 1, 2]]``."""
    if n < 2 or n % 2:
        raise DomainError("the distance-2 family needs an even length >= 2")
    rows = np.zeros((n // 2, n), dtype=np.uint8)
    for i in range(n // 2):
        rows[i, 2 * i] = rows[i, 2 * i + 1] = 1
    return BinaryCode.from_bits(rows), BinaryCode.repetition(n)


def _random_step(cur: BinaryCode, E: BinaryCode, rng: np.random.Generator) -> BinaryVector:
    while True:
        pick = rng.integers(0, 2, E.k).astype(bool)
        if not pick.any():
            continue
        v = BinaryVector(cur.n, np.bitwise_xor.reduce(E.gen.words[pick], axis=0))
        if v not in cur:
            return v


@dataclass
class PropagationSearch:
    chain: list[BinaryCode]  # the longest chain found
    params: QuantumParams
    outcomes: list[int]  # final quantum dimension of every chain, deterministic first


def propagate_search(
    C1: BinaryCode,
    C2: BinaryCode,
    bound_d_lower: int | None = None,
    *,
    params: QuantumParams | None = None,
    restarts: int = 32,
    seed: int = 0,
) -> PropagationSearch:
    """The deterministic chain plus ``restarts`` seeded random chains.

    Random chains add a uniformly random vector of the extension space
    outside the current ``C1``.  Different choices can end in maximal
    pairs of different dimension, so all final dimensions are reported.
    Ties keep the earlier chain.
    """
    best, final = propagate(C1, C2, bound_d_lower, params=params)
    outcomes = [final.k]
    rng = np.random.default_rng(seed)
    for _ in range(restarts):
        chain: list[BinaryCode] = []
        cur = C1
        while True:
            E = extension_space(cur, C2)
            if E == cur:
                break
            cur = code_sum(cur, BinaryCode.span([_random_step(cur, E, rng)], cur.n))
            chain.append(cur)
        outcomes.append(cur.k - C2.k)
        if len(chain) > len(best):
            best = chain
    k = (best[-1].k if best else C1.k) - C2.k
    final = QuantumParams(final.n, k, final.d_lower, final.d_upper, final.d_exact, final.witness, final.method, final.iterations)
    return PropagationSearch(best, final, outcomes)
