"""Compare the compiled and pure-Python residue kernels on full enumerations.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from ivpoly import _pykernels, kernels

CASES = [
    # (label, n, d, degree of g)
    ("divisibility n=2 d=12", "div", 2, 12, 8),
    ("divisibility n=3 d=12", "div", 3, 12, 8),
    ("divisibility n=4 d=10", "div", 4, 10, 12),
    ("companion    n=2 d=12", "comp", 2, 12, 8),
    ("companion    n=3 d=12", "comp", 3, 12, 8),
    ("companion    n=3 d=30", "comp", 3, 30, 12),
]


def _run(backend, kind, gbar, n, d):
    scan = backend.scan_divisibility if kind == "div" else backend.scan_companion
    return scan(gbar, n, d, 0, d**n, False)


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels._ckernels is None:
        print("compiled kernels unavailable; only the Python backend can be timed")
    rng = random.Random(0)
    print(f"{'case':24} {'cases':>8} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for label, kind, n, d, deg in CASES:
        gbar = [rng.randrange(d) for _ in range(deg + 1)]
        t_py, out_py = _best(lambda: _run(_pykernels, kind, gbar, n, d), args.repeat)
        if kernels._ckernels is not None:
            t_c, out_c = _best(lambda: _run(kernels._ckernels, kind, gbar, n, d), args.repeat)
            assert out_c == out_py, "backends disagree"
            print(f"{label:24} {d**n:8d} {t_py:11.4f} {t_c:11.4f} {t_py / t_c:7.1f}x")
        else:
            print(f"{label:24} {d**n:8d} {t_py:11.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
