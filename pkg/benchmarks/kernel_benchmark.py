#!/usr/bin/env python3
"""Time every hot kernel in both backends (numba @njit vs pure numpy).

Run:  python3 benchmarks/kernel_benchmark.py [--quick]

The numba flavor is the production default; the numpy flavor is the
fallback selected by LCIWORD_NO_NUMBA=1.  Both compute identical results
(asserted here on the benchmark inputs as well as in the test suite).
"""

import argparse
import time

import numpy as np

from lciword.kernels import IMPLS
from lciword.rng import stream
from lciword.words import Word, WordStats


def bench(fn, args, repeats):
    fn(*args)  # warm (JIT compile on first call)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def make_inputs(quick):
    rng = stream(2024, 0)
    n = 3000 if quick else 20000
    x2 = rng.integers(1, 3, n).astype(np.int32)
    y2 = rng.integers(1, 3, n).astype(np.int32)
    x3 = rng.integers(1, 4, n).astype(np.int32)
    y3 = rng.integers(1, 4, n).astype(np.int32)
    band = int(np.ceil(6 * np.sqrt(n)))
    sx = WordStats(Word(rng.integers(1, 4, n), 3))
    sy = WordStats(Word(rng.integers(1, 4, n), 3))
    side = 60 if quick else 150
    w2 = rng.exponential(1.0, size=(side, side))
    w3 = rng.exponential(1.0, size=(side, side, 4))
    w4 = rng.exponential(1.0, size=(25, 25, 25, 3))
    G = 300 if quick else 600
    D = rng.standard_normal((2, 2, G + 1))
    c = rng.standard_normal(2)
    words = rng.integers(1, 4, size=(2000, 300)).astype(np.int32)
    kvec = np.array([5, 3], np.int64)
    return {
        "lci_full (m=2)": (("lci_full",), (x2, y2, 2, False)),
        "lci_full (m=3)": (("lci_full",), (x3, y3, 3, False)),
        "lci_banded (m=3)": (("lci_banded",), (x3, y3, 3, band, False)),
        "repr_scan (m=3)": (("repr_scan",), (sx.occ_flat, sx.occ_off, sx.cum,
                                             sy.occ_flat, sy.occ_off, sy.cum, 3)),
        "lpp_unit2": (("lpp_unit2",), (w2,)),
        "lpp_jump2": (("lpp_jump2",), (w3,)),
        "lpp_jump3": (("lpp_jump3",), (w4,)),
        "chamber_max (d=2)": (("chamber_max",), (c[0], c[1], D[0], D[1])),
        "star_batch": (("star_batch",), (words, kvec, 3)),
    }


def close(a, b):
    if isinstance(a, tuple):
        return all(close(u, v) for u, v in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.allclose(a, b)
    return abs(float(a) - float(b)) <= 1e-9 * max(1.0, abs(float(a)))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    cases = make_inputs(args.quick)
    flavors = sorted({f for impls in IMPLS.values() for f in impls})
    if len(flavors) < 2:
        print("only the numpy backend is available (numba missing or disabled);")
        print("nothing to compare.")
        return
    print(f"{'kernel':24} {'numba [ms]':>12} {'numpy [ms]':>12} {'speedup':>9}")
    for label, ((name,), inputs) in cases.items():
        t_nb, out_nb = bench(IMPLS[name]["numba"], inputs, args.repeats)
        t_np, out_np = bench(IMPLS[name]["numpy"], inputs, args.repeats)
        assert close(out_nb, out_np), f"backend mismatch in {name}"
        print(
            f"{label:24} {t_nb * 1e3:12.2f} {t_np * 1e3:12.2f} {t_np / t_nb:8.1f}x"
        )


if __name__ == "__main__":
    main()
