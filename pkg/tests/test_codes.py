import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from csst.codes import (
    BinaryCode,
    code_sum,
    codeword_words,
    codewords,
    contains,
    dual,
    information_set_search,
    intersect,
    is_even,
    is_self_orthogonal,
    kernel_distance_certificate,
    min_weight,
    puncture,
    schur,
    schur_power,
    shorten,
    weight_distribution,
)
from csst.errors import CapacityError, DomainError, StructuralError
from csst.gf2 import BinaryMatrix, BinaryVector

import oracles


def codes(max_n=10, max_k=5):
    return st.integers(2, max_n).flatmap(
        lambda n: st.lists(st.integers(0, (1 << n) - 1), max_size=max_k).map(lambda ms: (n, ms))
    )


def make(n, masks):
    return BinaryCode.from_rows([[(m >> j) & 1 for j in range(n)] for m in masks], n)


def span_of(C):
    return oracles.span(oracles.rows_masks(C))


@settings(max_examples=80, deadline=None)
@given(codes())
def test_dual_brute(data):
    n, ms = data
    C = make(n, ms)
    assert span_of(dual(C)) == oracles.dual_span(ms, n)
    assert dual(dual(C)) == C
    assert C.k + dual(C).k == n


@settings(max_examples=80, deadline=None)
@given(codes(), st.lists(st.integers(0, 1023), max_size=5))
def test_sum_intersection_schur(data, other):
    n, ms = data
    other = [m & ((1 << n) - 1) for m in other]
    A, B = make(n, ms), make(n, other)
    SA, SB = oracles.span(ms), oracles.span(other)
    assert span_of(code_sum(A, B)) == oracles.span(ms + other)
    assert span_of(intersect(A, B)) == SA & SB
    assert span_of(schur(A, B)) == oracles.schur_span(SA, SB)
    assert span_of(schur(A, A)) == oracles.schur_span(SA, SA)
    assert contains(code_sum(A, B), A)
    assert (A <= B) == (SA <= SB)


def test_schur_power_fixpoint():
    C = BinaryCode.from_rows(["110000", "011000", "000111"])
    assert schur_power(C, 1) == C
    sq = schur_power(C, 2)
    assert schur_power(C, 5) == schur_power(C, 3) or schur_power(C, 4) == schur_power(C, 5)
    assert contains(sq, C)
    with pytest.raises(DomainError):
        schur_power(C, 0)


@settings(max_examples=60, deadline=None)
@given(codes(max_n=9), st.sets(st.integers(0, 8), max_size=3))
def test_puncture_shorten_brute(data, S):
    n, ms = data
    S = {i for i in S if i < n}
    C = make(n, ms)
    keep = [j for j in range(n) if j not in S]

    def restrict(x):
        return sum(((x >> j) & 1) << i for i, j in enumerate(keep))

    SC = oracles.span(ms)
    assert span_of(puncture(C, S)) == {restrict(x) for x in SC}
    Smask = sum(1 << i for i in S)
    assert span_of(shorten(C, S)) == {restrict(x) for x in SC if not x & Smask}


def test_puncture_range_error():
    with pytest.raises(DomainError):
        puncture(BinaryCode.full(3), [3])


def test_even_and_self_orthogonal():
    C = BinaryCode.from_rows(["1100", "0110"])
    assert is_even(C)
    assert not is_self_orthogonal(C)
    assert is_self_orthogonal(BinaryCode.from_rows(["1111", "1100"]))
    # weight parity is additive, so even generators give an even code
    assert is_even(BinaryCode.from_rows(["110000", "101000", "100100"]))
    assert not is_even(BinaryCode.from_rows(["111000"]))


def test_equality_independent_of_generators():
    A = BinaryCode.from_rows(["1100", "0110"])
    B = BinaryCode.from_rows(["1010", "0110"])
    assert A == B and hash(A) == hash(B)
    with pytest.raises(StructuralError):
        code_sum(A, BinaryCode.full(5))


@settings(max_examples=40, deadline=None)
@given(codes(max_n=12, max_k=6))
def test_weight_distribution_and_codewords(data):
    n, ms = data
    C = make(n, ms)
    W = weight_distribution(C)
    ref = [0] * (n + 1)
    for x in oracles.span(ms):
        ref[oracles.weight(x)] += 1
    assert W == ref
    assert {oracles.vec_mask(v) for v in codewords(C)} == oracles.span(ms)


def test_enumeration_cap():
    with pytest.raises(CapacityError):
        codeword_words(BinaryCode.full(30), cap=20)


@settings(max_examples=60, deadline=None)
@given(codes(max_n=14, max_k=7))
def test_min_weight_exhaustive(data):
    n, ms = data
    C = make(n, ms)
    if C.k == 0:
        with pytest.raises(DomainError):
            min_weight(C)
        return
    r = min_weight(C)
    assert r.exact and r.lower == r.upper == oracles.min_weight(ms)
    assert r.witness.weight == r.upper
    assert r.witness in C


def test_kernel_distance_certificate():
    assert kernel_distance_certificate(BinaryMatrix.from_rows(["101", "100"])) == 1
    assert kernel_distance_certificate(BinaryMatrix.from_rows(["110", "111"])) == 2
    H = BinaryMatrix.from_rows(["1110100", "1101010", "1011001"])  # Hamming [7,4,3]
    assert kernel_distance_certificate(H) == 3


@pytest.mark.parametrize("seed", range(6))
def test_isd_matches_exhaustive(seed):
    rng = np.random.default_rng(seed)
    n, k = 40, 14
    G = BinaryMatrix.from_bits(rng.integers(0, 2, size=(k, n)))
    C = BinaryCode(G)
    exact = min_weight(C).upper
    r = min_weight(C, exact_threshold=0, seed=seed)
    assert r.witness in C
    assert r.upper >= exact
    assert r.upper == exact  # tiny instance: the budget is ample
    assert r.lower <= exact


def test_isd_exclusion():
    # words of ker H orthogonal to every row of E are skipped
    C = BinaryCode.from_rows(["1100000", "0011000", "0000111"])
    H = dual(C).gen
    E = BinaryMatrix.from_rows(["1000000"])
    w, x, _ = information_set_search(H, budget=200, seed=1, exclude=E)
    assert x is not None and x[0] == 1 and w == 2
    w, x, _ = information_set_search(H, budget=200, seed=1, exclude=BinaryMatrix.empty(7))
    assert x is None
