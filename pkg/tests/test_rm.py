from math import comb

import pytest

from csst.codes import BinaryCode, dual, min_weight, puncture, schur, schur_power, shorten, weight_distribution
from csst.core import is_maximal, quantum_params, verify_csst
from csst.errors import DomainError
from csst.reed_muller import RmSpec, rm_code, rm_csst_params, rm_motivating_pair, rm_schur_identity_check, rm_table_rows


def test_order_zero_is_repetition():
    for m in range(1, 6):
        assert rm_code(m, 0) == BinaryCode.repetition(1 << m)


def test_rm41_parameters():
    C = rm_code(4, 1)
    assert (C.n, C.k) == (16, 5)
    assert min_weight(C).upper == 8
    assert weight_distribution(C) == [1] + [0] * 7 + [30] + [0] * 7 + [1]


@pytest.mark.parametrize("m", range(1, 9))
def test_dual_order_identity(m):
    for d in range(m):
        C = rm_code(m, d)
        assert C.k == sum(comb(m, i) for i in range(d + 1))
        assert dual(C) == rm_code(m, m - 1 - d)


@pytest.mark.parametrize("m", range(1, 7))
def test_schur_identity_exhaustive(m):
    for d1 in range(m):
        for d2 in range(m - d1):
            assert rm_schur_identity_check(m, d1, d2)


def test_rm72_square_is_dual():
    C = rm_code(7, 2)
    assert schur_power(C, 2) == rm_code(7, 4) == dual(C)


def test_motivating_identities():
    C1, C2 = rm_motivating_pair()
    assert (C1.n, C1.k, C2.k) == (15, 5, 4)
    rm42 = rm_code(4, 2)
    assert schur_power(C1, 2) == puncture(rm42, [0])
    assert dual(schur_power(C1, 2)) == C2
    assert schur(C1, C2) == shorten(rm42, [0]) == dual(C1)
    assert verify_csst(C1, C2).is_pair and is_maximal(C1, C2)
    assert str(quantum_params(C1, C2)) == "[[15,1,3]]"


@pytest.mark.parametrize("m", range(2, 8))
def test_csst_condition_matches_verification(m):
    for d1 in range(m):
        for d2 in range(m):
            pair = verify_csst(rm_code(m, d1), rm_code(m, d2)).is_pair
            assert pair == (rm_csst_params(m, d1, d2) is not None)


def test_table_rows():
    got = {(m, r[3], r[4]) for m in range(7, 11) for r in rm_table_rows(m)}
    assert got == {(7, 21, 4), (8, 84, 4), (9, 120, 4), (9, 84, 8), (10, 375, 4), (10, 120, 8)}


def test_distance_formula():
    for m, d1, d2 in [(5, 2, 0), (6, 2, 1), (7, 2, 1)]:
        n, k, d = rm_csst_params(m, d1, d2)
        qp = quantum_params(rm_code(m, d1), rm_code(m, d2), seed=1)
        assert (qp.n, qp.k, qp.d_lower, qp.d_upper) == (n, k, d, d)


def test_spec_range():
    with pytest.raises(DomainError):
        RmSpec(3, 4)
    assert RmSpec(5, 2).distance == 8
