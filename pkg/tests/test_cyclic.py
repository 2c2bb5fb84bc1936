import itertools

import numpy as np
import pytest

from csst.codes import BinaryCode, code_sum, dual, min_weight, schur, weight_distribution
from csst.core import is_maximal_in_c1, is_maximal_in_c2, verify_csst
from csst.cyclic import (
    CosetSet,
    amplitude,
    bch_delta,
    complement,
    coset_by_restricted_weight,
    coset_of,
    csst_cyclic_check,
    cyc_maximality,
    cyclic_code,
    design_distance,
    extended_cyclic_code,
    generator_polynomial,
    greedy_search,
    minimal_cosets,
    minkowski_sum,
    negate,
    restricted_csst,
    restricted_weight,
    union,
)
from csst.errors import DomainError, StructuralError
from csst.field import field_new
from csst.reed_muller import rm_code, rm_motivating_pair

import oracles

F4, F5, F6 = field_new(4), field_new(5), field_new(6)


def unions(n, extended=False):
    cos = minimal_cosets(n, extended)
    for bits in itertools.product((0, 1), repeat=len(cos)):
        yield union([c for c, b in zip(cos, bits) if b], n, extended)


def sampled_unions(n, count, seed, extended=False):
    rng = np.random.default_rng(seed)
    cos = minimal_cosets(n, extended)
    extra = [coset_of(n, 0, True)] if extended else []
    for _ in range(count):
        pick = [c for c in cos + extra if rng.random() < 0.5]
        yield union(pick, n, extended)


def S(n, elems, extended=False):
    return CosetSet.from_elems(n, elems, extended)


# cosets and sums -------------------------------------------------------------


def test_minimal_cosets_15():
    assert [c.sorted() for c in minimal_cosets(15)] == [[1, 2, 4, 8], [3, 6, 9, 12], [5, 10], [7, 11, 13, 14], [15]]
    assert [c.sorted() for c in minimal_cosets(3)] == [[1, 2], [3]]


def test_minimal_cosets_127():
    cos = minimal_cosets(127)
    assert sorted(len(c) for c in cos) == [1] + [7] * 18
    assert set().union(*(c.elems for c in cos)) == set(range(1, 128))


def test_even_modulus_rejected():
    with pytest.raises(DomainError):
        minimal_cosets(16)


def test_not_doubling_closed_rejected():
    with pytest.raises(StructuralError):
        S(15, [1, 2])


def test_minkowski_example():
    I1, I2 = S(15, [1, 2, 4, 8, 15]), S(15, [1, 2, 4, 8])
    assert (I1 + I2).sorted() == [1, 2, 3, 4, 5, 6, 8, 9, 10, 12]
    assert (I1 + I1).sorted() == [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15]
    assert (I1 + I1 + I2).sorted() == list(range(1, 15))
    assert I2 + S(15, [15]) == I2


def test_minkowski_against_set_sums():
    rng = np.random.default_rng(3)
    for n in (15, 31, 63, 127):
        cos = minimal_cosets(n)
        for _ in range(250):
            A = union([c for c in cos if rng.random() < 0.3], n)
            B = union([c for c in cos if rng.random() < 0.3], n)
            ref = {((a + b) % n) or n for a in A.elems for b in B.elems}
            assert (A + B).elems == ref  # CosetSet construction also checks doubling closure


def test_extended_minkowski_rules():
    n = 15
    Z = coset_of(n, 0, True)
    A = S(n, [0, 1, 2, 4, 8], True)
    assert (Z + Z).elems == {0}
    assert (Z + A).elems == A.elems
    assert 0 not in (S(n, [1, 2, 4, 8], True) + S(n, [7, 11, 13, 14], True))
    assert (S(n, [15], True) + S(n, [0], True)).elems == {15}


def test_negate_and_complement():
    I = S(15, [1, 2, 4, 8, 15])
    assert negate(I).sorted() == [7, 11, 13, 14, 15]
    assert complement(I).sorted() == [3, 5, 6, 7, 9, 10, 11, 12, 13, 14]


# amplitude --------------------------------------------------------------------


def test_amplitude_examples():
    assert amplitude(S(15, [15])) == 1
    J2 = complement(S(15, [1, 2, 4, 8]))
    assert 15 - amplitude(J2) + 1 == 3
    with pytest.raises(DomainError):
        amplitude(CosetSet.empty(15))


@pytest.mark.parametrize("n", [15, 21, 31, 63])
def test_amplitude_and_delta_against_window_scan(n):
    for I in sampled_unions(n, 60, n):
        if len(I):
            assert amplitude(I) == oracles.amplitude_naive(set(I.elems), n)
            assert bch_delta(I) == oracles.cyclic_run(set(I.elems), n)
            if len(I) < n:
                assert n - amplitude(complement(negate(I))) + 1 == bch_delta(I) + 1


# code construction ----------------------------------------------------------


def test_repetition_and_rm():
    assert cyclic_code(F4, 15, S(15, [15])) == BinaryCode.repetition(15)
    C1, C2 = rm_motivating_pair()
    A = cyclic_code(F4, 15, S(15, [1, 2, 4, 8, 15]))
    B = cyclic_code(F4, 15, S(15, [1, 2, 4, 8]))
    assert weight_distribution(A) == weight_distribution(C1)
    assert weight_distribution(B) == weight_distribution(C2)
    assert set(B.gen.row_weights()) <= {8} and min_weight(B).upper == 8


@pytest.mark.parametrize("n,F", [(15, F4), (31, F5), (63, F6)])
def test_generator_polynomial_divides(n, F):
    for I in sampled_unions(n, 20, 1):
        g = generator_polynomial(F, n, I)
        q, r = oracles.poly_divmod((1 << n) | 1, g)
        assert r == 0 and g.bit_length() - 1 == n - len(I)


def test_routes_agree_15_31():
    for n, F in ((15, F4), (31, F5)):
        for I in unions(n):
            assert cyclic_code(F, n, I, "A") == cyclic_code(F, n, I, "B")


def test_routes_agree_63_sampled():
    for I in sampled_unions(63, 40, 9):
        assert cyclic_code(F6, 63, I, "A") == cyclic_code(F6, 63, I, "B")


def test_subfield_order_63_with_n_21():
    for I in sampled_unions(21, 10, 2):
        assert cyclic_code(F6, 21, I, "A") == cyclic_code(F6, 21, I, "B")


def test_cyclic_identities_15():
    codes = {I: cyclic_code(F4, 15, I) for I in unions(15)}
    for I, C in codes.items():
        assert dual(C) == codes[negate(complement(I))]
    items = list(codes.items())
    for (I1, C1), (I2, C2) in itertools.product(items[::3], items[::2]):
        if len(I1) and len(I2):
            assert schur(C1, C2) == codes[I1 + I2]
        assert code_sum(C1, C2) == codes[I1 | I2]


def test_extended_basic():
    assert extended_cyclic_code(F4, 15, coset_of(15, 0, True)) == BinaryCode.repetition(16)
    I = coset_by_restricted_weight(4, 1, 4, extended=True)
    assert I.sorted() == [0, 1, 2, 4, 8]
    assert weight_distribution(extended_cyclic_code(F4, 15, I)) == weight_distribution(rm_code(4, 1))


@pytest.mark.parametrize("n,F", [(15, F4), (31, F5)])
def test_extended_methods_and_dimension(n, F):
    for I in sampled_unions(n, 50, 4, extended=True):
        A = extended_cyclic_code(F, n, I, "dual")
        assert A.k == len(I) and A.n == n + 1
        assert A == extended_cyclic_code(F, n, I, "kernel")


def test_extended_schur_identity():
    rng_sets = list(sampled_unions(15, 30, 12, extended=True))
    for I1, I2 in zip(rng_sets[::2], rng_sets[1::2]):
        if len(I1) and len(I2):
            lhs = schur(extended_cyclic_code(F4, 15, I1), extended_cyclic_code(F4, 15, I2))
            assert lhs == extended_cyclic_code(F4, 15, I1 + I2)


@pytest.mark.parametrize("n,F,extended", [(15, F4, False), (15, F4, True), (31, F5, False), (31, F5, True)])
def test_design_distance_is_a_lower_bound(n, F, extended):
    for I in sampled_unions(n, 40, 5, extended):
        if len(I) == 0:
            continue
        C = extended_cyclic_code(F, n, I) if extended else cyclic_code(F, n, I)
        D = dual(C)
        if D.k == 0:
            continue
        assert design_distance(I) <= min_weight(D).upper


# CSS-T criterion --------------------------------------------------------------


def test_cyclic_check_examples():
    ok, p = csst_cyclic_check(S(15, [1, 2, 4, 8, 15]), S(15, [1, 2, 4, 8]))
    assert ok and (p.n, p.k, p.d_lower) == (15, 1, 3)
    ok, _ = csst_cyclic_check(S(15, [15]), S(15, [15]))
    assert not ok
    with pytest.raises(StructuralError):
        csst_cyclic_check(S(15, [15]), S(31, [31]))


def test_cyclic_check_matches_matrices_15():
    codes = {I: cyclic_code(F4, 15, I) for I in unions(15)}
    for I1, I2 in itertools.product(codes, codes):
        if not len(I2):
            continue
        ok, _ = csst_cyclic_check(I1, I2)
        assert ok == verify_csst(codes[I1], codes[I2]).is_pair


def test_cyc_maximality_example_and_agreement():
    I1, I2 = S(15, [1, 2, 4, 8, 15]), S(15, [1, 2, 4, 8])
    m = cyc_maximality(I1, I2)
    assert m.maximal and m.maximal_in_c1 and m.maximal_in_c2
    with pytest.raises(DomainError):
        cyc_maximality(S(15, [1, 2, 4, 8, 15]), S(15, [15]))
    codes = {I: cyclic_code(F4, 15, I) for I in unions(15)}
    for I1, I2 in itertools.product(codes, codes):
        if len(I2) and csst_cyclic_check(I1, I2)[0]:
            m = cyc_maximality(I1, I2)
            assert m.maximal_in_c1 == is_maximal_in_c1(codes[I1], codes[I2])
            assert m.maximal_in_c2 == is_maximal_in_c2(codes[I1], codes[I2])


# restricted weight -------------------------------------------------------------


def test_restricted_weight_examples():
    assert restricted_weight(15, 4, 4) == 4
    assert restricted_weight(15, 2, 4) == 2
    assert coset_by_restricted_weight(4, 1, 4).sorted() == [1, 2, 4, 8]
    with pytest.raises(DomainError):
        restricted_weight(3, 5, 4)


@pytest.mark.parametrize("s", [4, 5, 6])
def test_restricted_weight_subadditive_and_invariant(s):
    n = (1 << s) - 1
    for t in range(1, s + 1):
        w = [restricted_weight(a, t, s) for a in range(n + 1)]
        for a in range(1, n + 1):
            assert w[(2 * a) % n or n] == w[a]
            for b in range(1, n + 1):
                assert w[(a + b) % n or n] <= w[a] + w[b]


def test_restricted_csst():
    ok, I1, I2 = restricted_csst(4, 1, 1, 4)
    assert ok and I1.sorted() == [1, 2, 4, 8]
    ok, _, _ = restricted_csst(4, 1, 2, 4)
    assert not ok
    for s in range(2, 9):
        for t in range(1, s + 1):
            for mu1 in range(1, t + 1):
                for mu2 in range(1, mu1 + 1):
                    restricted_csst(t, mu1, mu2, s)  # asserts the criterion internally when ok


# greedy -------------------------------------------------------------------------


def test_greedy_small():
    g = greedy_search(4, 1)
    assert g.I1.sorted() == [1, 2, 4, 8, 15] and g.I2.sorted() == [1, 2, 4, 8]
    assert (g.params.n, g.params.k, g.params.d_lower) == (15, 1, 3)
    with pytest.raises(DomainError):
        greedy_search(4, 2)


@pytest.mark.parametrize(
    "t,extended,expected",
    [(1, False, (127, 29, 3)), (2, False, (127, 15, 5)), (3, False, (127, 8, 7)),
     (1, True, (128, 28, 4)), (2, True, (128, 14, 6)), (3, True, (128, 7, 8))],
)
def test_greedy_s7(t, extended, expected):
    p = greedy_search(7, t, extended).params
    assert (p.n, p.k, p.d_lower) == expected


@pytest.mark.parametrize("s", [4, 5, 6])
def test_greedy_constructs_pairs(s):
    F = field_new(s)
    n = (1 << s) - 1
    for ext in (False, True):
        g = greedy_search(s, 1, ext)
        C1 = extended_cyclic_code(F, n, g.I1) if ext else cyclic_code(F, n, g.I1)
        C2 = extended_cyclic_code(F, n, g.I2) if ext else cyclic_code(F, n, g.I2)
        assert verify_csst(C1, C2).is_pair
        assert C1.k - C2.k == g.params.k


def test_propagated_31_5_3_against_brute_force():
    from itertools import combinations

    from csst.core import propagate_search
    from csst.tables import _pair

    C1, C2, d, _ = _pair("cyclic", 5, 1)
    F = propagate_search(C1, C2, d, restarts=256, seed=0xC557).chain[-1]
    a, b = oracles.rows_masks(F), oracles.rows_masks(C2)
    assert F.k - C2.k == 5 and oracles.csst_brute(a, b, 31)

    def logical(m):  # in C2^⊥ but not in C1^⊥
        return all(oracles.dot(m, x) == 0 for x in b) and any(oracles.dot(m, x) for x in a)

    low = [w for w in (1, 2, 3) for c in combinations(range(31), w) if logical(sum(1 << i for i in c))]
    assert low and min(low) == 3
