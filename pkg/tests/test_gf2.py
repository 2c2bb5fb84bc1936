import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from csst.errors import DomainError, StructuralError
from csst.gf2 import BinaryMatrix, BinaryVector, in_rowspace, kernel, rank, rref

import oracles


def bit_matrices(max_rows=8, max_cols=70):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=0, max_size=max_rows).map(
            lambda rows: (n, rows)
        )
    )


def test_vector_roundtrip_and_weight():
    v = BinaryVector.from_bits("1011000000000000000000000000000000000000000000000000000000000000001")
    assert v.length == 67
    assert v.weight == 4
    assert v.support() == [0, 2, 3, 66]
    assert str(v)[-1] == "1"
    assert v[66] == 1 and v[1] == 0


def test_vector_ops():
    a = BinaryVector.from_bits([1, 1, 0, 1])
    b = BinaryVector.from_bits([0, 1, 1, 1])
    assert str(a ^ b) == "1010"
    assert str(a & b) == "0101"
    assert a.dot(b) == 0
    assert BinaryVector.ones(4).weight == 4
    assert BinaryVector.unit(4, 2).support() == [2]
    with pytest.raises(StructuralError):
        a ^ BinaryVector.zeros(5)
    with pytest.raises(DomainError):
        BinaryVector.unit(3, 3)


def test_parse_errors():
    with pytest.raises(StructuralError):
        BinaryVector.from_bits("10x1")
    with pytest.raises(StructuralError):
        BinaryMatrix.from_rows(["101", "10"])
    with pytest.raises(StructuralError):
        BinaryVector.from_bits([0, 2])


def test_padding_bits_cleared():
    v = BinaryVector(3, np.array([0xFF], dtype=np.uint64))
    assert v.weight == 3
    M = BinaryMatrix(3, np.array([[0xFF]], dtype=np.uint64))
    assert M.row_weights().tolist() == [3]


def test_identity_and_empty():
    assert rank(BinaryMatrix.identity(130)) == 130
    E = BinaryMatrix.empty(5)
    assert E.shape == (0, 5)
    assert kernel(E).n_rows == 5


@settings(max_examples=150, deadline=None)
@given(bit_matrices())
def test_rref_against_xor_basis(data):
    n, rows = data
    M = BinaryMatrix.from_rows(rows, n_cols=n)
    R, r, piv = rref(M)
    masks = [oracles.to_mask(row) for row in rows]
    assert r == oracles.rank(masks)
    assert piv == sorted(piv)
    bits = R.bits()
    for i, p in enumerate(piv):  # reduced: pivot columns are unit columns
        assert bits[:, p].tolist() == [1 if j == i else 0 for j in range(r)]
    assert oracles.same_space([oracles.to_mask(x) for x in bits], masks)


@settings(max_examples=60, deadline=None)
@given(bit_matrices(max_rows=6, max_cols=11))
def test_kernel_against_brute_force(data):
    n, rows = data
    M = BinaryMatrix.from_rows(rows, n_cols=n)
    K = kernel(M)
    masks = [oracles.to_mask(row) for row in rows]
    assert oracles.span([oracles.to_mask(x) for x in K.bits()]) == oracles.dual_span(masks, n)


@settings(max_examples=60, deadline=None)
@given(bit_matrices(max_rows=5, max_cols=9), st.integers(0, 511))
def test_in_rowspace(data, x):
    n, rows = data
    x &= (1 << n) - 1
    M = BinaryMatrix.from_rows(rows, n_cols=n)
    v = BinaryVector.from_bits([(x >> j) & 1 for j in range(n)])
    assert in_rowspace(M, v) == (x in oracles.span([oracles.to_mask(r) for r in rows]))


def test_columns_transpose():
    M = BinaryMatrix.from_rows(["110", "011"])
    cols = M.columns()
    assert cols.shape == (3, 1)
    assert cols[:, 0].tolist() == [1, 3, 2]
