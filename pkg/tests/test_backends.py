"""The compiled kernels and the numpy fallback must agree bit for bit."""

import os
import subprocess
import sys

import numpy as np
import pytest

from csst import _fallback
from csst._backend import BACKEND, compiled_kernels
from csst._bits import pack_bits

ck = compiled_kernels()
needs_compiled = pytest.mark.skipif(ck is None, reason="compiled extension not built")


def _rand_words(rng, rows, n):
    return np.ascontiguousarray(pack_bits(rng.integers(0, 2, size=(rows, n)).astype(np.uint8)))


@needs_compiled
@pytest.mark.parametrize("seed", range(20))
def test_eliminate_agrees(seed):
    rng = np.random.default_rng(seed)
    rows, n = int(rng.integers(1, 40)), int(rng.integers(1, 200))
    M = _rand_words(rng, rows, n)
    ascending = bool(seed % 2)
    order = np.arange(n, dtype=np.int64) if ascending else rng.permutation(n).astype(np.int64)
    A, B = M.copy(), M.copy()
    pa = _fallback.eliminate(A, order, ascending)
    pb = ck.eliminate(B, order, ascending)
    assert list(pa) == list(pb)
    assert np.array_equal(A, B)


@needs_compiled
@pytest.mark.parametrize("seed", range(12))
def test_gray_agrees(seed):
    rng = np.random.default_rng(100 + seed)
    k, n = int(rng.integers(1, 17)), int(rng.integers(2, 90))
    G = _rand_words(rng, k, n)
    S = _rand_words(rng, k, int(rng.integers(0, 4))) if seed % 3 else np.zeros((k, 0), dtype=np.uint64)
    assert tuple(_fallback.gray_min_weight(G, S)) == tuple(ck.gray_min_weight(G, S))


@needs_compiled
@pytest.mark.parametrize("seed", range(12))
def test_isd_agrees(seed):
    rng = np.random.default_rng(200 + seed)
    r, n = int(rng.integers(2, 20)), int(rng.integers(20, 120))
    H = _rand_words(rng, r, n)
    perm = rng.permutation(n).astype(np.int64)
    E = _rand_words(rng, n, 3) if seed % 2 else None
    bound = n + 1
    wa, xa = _fallback.isd_search(H, n, perm, 2, bound, E)
    wb, xb = ck.isd_search(H, n, perm, 2, bound, E)
    assert wa == wb
    assert (xa is None) == (xb is None)
    if xa is not None:
        assert np.array_equal(np.asarray(xa), np.asarray(xb))


def test_pure_python_switch():
    env = dict(os.environ, CSST_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import csst; print(csst.BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"
    assert BACKEND in ("cython", "python")


def test_end_to_end_pure_python():
    env = dict(os.environ, CSST_PURE_PYTHON="1")
    code = (
        "from csst import rm_motivating_pair, quantum_params;"
        "C1, C2 = rm_motivating_pair(); print(quantum_params(C1, C2))"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "[[15,1,3]]"
