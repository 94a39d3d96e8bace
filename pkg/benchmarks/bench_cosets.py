"""Compare the numba and numpy coset-key kernels.

    python3 benchmarks/bench_cosets.py [--repeat 3]

Each case enumerates right cosets of a double coset ``U g U`` in GL_2(Q_p)
from scratch (the decomposition cache is bypassed) and checks that both
backends return the same representatives.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from heckegl import padic
from heckegl.padic import GL2Element, _kernels
from heckegl.padic.cosets import _integral_scaling

CASES = [
    ("K diag(1,5) K", "K", GL2Element(1, 0, 0, 5), 5),
    ("K diag(1,25) K", "K", GL2Element(1, 0, 0, 25), 5),
    ("K diag(1,125) K", "K", GL2Element(1, 0, 0, 125), 5),
    ("K diag(1,81) K", "K", GL2Element(1, 0, 0, 81), 3),
    ("I s I, p=7", "I", GL2Element(0, 1, 1, 0), 7),
    ("I diag(1,49) I", "I", GL2Element(1, 0, 0, 49), 7),
]


def _inputs(level, g, p):
    G = _integral_scaling(g, p)
    N = padic.valuation(G.det, p) + 2
    Gmod = np.array([int(x) % p**N for x in G.entries()], dtype=np.int64)
    return Gmod, p, padic.congruence_level(g, p), N, level == "I"


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    # warm the JIT so compile time is not charged to the first case
    _kernels.enumerate_coset_keys(*_inputs("K", GL2Element(1, 0, 0, 2), 2), backend="numba", normalized=True)

    print(f"{'case':<18} {'cosets':>7} {'numba [s]':>10} {'numpy [s]':>10} {'speedup':>8}")
    for name, level, g, p in CASES:
        inp = _inputs(level, g, p)
        t_nb, a = _time(lambda: _kernels.enumerate_coset_keys(*inp, backend="numba", normalized=True), args.repeat)
        t_np, b = _time(lambda: _kernels.enumerate_coset_keys(*inp, backend="numpy", normalized=True), args.repeat)
        if not np.array_equal(a, b):
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:<18} {len(a):>7} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
