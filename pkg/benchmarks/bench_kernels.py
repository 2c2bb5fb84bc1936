"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--seed N]

Each kernel runs on identical random inputs under both backends; the
outputs are compared before timings are reported.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from csst import _fallback
from csst._backend import compiled_kernels
from csst._bits import pack_bits


def words(rng, rows, n):
    return np.ascontiguousarray(pack_bits(rng.integers(0, 2, size=(rows, n)).astype(np.uint8)))


def cases(rng):
    """``(name, callable taking a backend module)`` pairs."""
    M = words(rng, 200, 1024)
    order = np.arange(1024, dtype=np.int64)
    G = words(rng, 18, 255)
    S = words(rng, 18, 8)
    H = words(rng, 120, 255)
    perm = rng.permutation(255).astype(np.int64)
    return [
        ("eliminate 200x1024", lambda k: list(k.eliminate(M.copy(), order, True))),
        ("gray_min_weight k=18 n=255", lambda k: tuple(k.gray_min_weight(G, S))),
        ("isd_search r=120 n=255 p=2", lambda k: k.isd_search(H, 255, perm, 2, 256, None)[0]),
    ]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


END_TO_END = (
    "import time; from csst.tables import table1_row; t0 = time.perf_counter(); "
    "r = table1_row('cyclic', 8, 3); print(r.label, time.perf_counter() - t0)"
)


def end_to_end(pure: bool) -> tuple[str, float]:
    env = dict(os.environ, CSST_PURE_PYTHON="1" if pure else "")
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    label, secs = out.stdout.split()
    return label, float(secs)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0xC557)
    args = ap.parse_args(argv)
    ck = compiled_kernels()
    if ck is None:
        print("compiled extension not built; build it with `pip install -e . --no-build-isolation`")
        return 1
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<30}{'cython (s)':>12}{'numpy (s)':>12}{'speedup':>10}")
    for name, fn in cases(rng):
        tc, oc = best_of(lambda: fn(ck), args.repeat)
        tp, op = best_of(lambda: fn(_fallback), args.repeat)
        if oc != op:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<30}{tc:>12.4f}{tp:>12.4f}{tp / tc:>9.1f}x")
    (lc, tc), (lp, tp) = end_to_end(False), end_to_end(True)
    if lc != lp:
        raise SystemExit(f"table row differs between backends: {lc} vs {lp}")
    print(f"{'table row ' + lc:<30}{tc:>12.4f}{tp:>12.4f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
