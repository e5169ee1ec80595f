"""Compiled kernel vs numpy fallback.

Two measurements: a single sparse gate applied to a weight-sparse state of
growing size, and full invariant evaluations with each backend swapped in.

    python3 benchmarks/bench_kernels.py [--repeat N] [--heavy]
"""
import argparse
import time

import numpy as np

from spinrt import corpus, kernels
from spinrt.scalar import ScalarContext
from spinrt.surgery import birth_around, invariant_N, k1_move, k2_move


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def micro(repeat):
    rng = np.random.default_rng(0)
    print("single gate (r=8 two-strand gate, 90% zero state)")
    print(f"{'state size':>12} {'compiled ms':>12} {'numpy ms':>10} {'speedup':>8}")
    M = Mo = 64
    nnz = 400
    rows = rng.integers(0, Mo, nnz).astype(np.intp)
    cols = rng.integers(0, M, nnz).astype(np.intp)
    vals = rng.normal(size=nnz) + 1j * rng.normal(size=nnz)
    for L, R in ((8, 8), (8, 64), (64, 64), (64, 512)):
        state = rng.normal(size=L * M * R) + 1j * rng.normal(size=L * M * R)
        state[rng.random(state.size) < 0.9] = 0
        out = np.empty(L * Mo * R, dtype=complex)
        fast = best_of(lambda: kernels.apply_gate(state, L, M, R, rows, cols, vals, Mo, out=out),
                       repeat)
        slow = best_of(lambda: kernels.apply_gate_py(state, L, M, R, rows, cols, vals, Mo,
                                                     out=out), repeat)
        print(f"{L * M * R:>12} {fast * 1e3:>12.3f} {slow * 1e3:>10.3f} {slow / fast:>8.1f}")


def _cases(heavy):
    c8 = ScalarContext(8)
    base = corpus.lens_with_meridian(3, 0.2)
    out = [("KII slide, r=8", c8, k2_move(base, 1, 0).presentation),
           ("birth move, r=8", c8, birth_around(c8, base, 0).presentation),
           ("L(4,1) two slides, r=4", ScalarContext(4), _lens_slides(ScalarContext(4)))]
    if heavy:
        out.append(("L(4,1) two slides, r=8", c8, _lens_slides(c8)))
    return out


def _lens_slides(ctx):
    q = k1_move(ctx, corpus.lens_space(4, 0.5), 0, -1).presentation
    return k2_move(k2_move(q, 0, 1).presentation, 0, 1).presentation


def end_to_end(repeat, heavy):
    print("\ninvariant N, full evaluation")
    print(f"{'case':>26} {'compiled s':>11} {'numpy s':>9} {'speedup':>8}")
    compiled = kernels.apply_gate
    for name, ctx, p in _cases(heavy):
        if not heavy:
            invariant_N(ctx, p)  # fill the plan and gate caches before timing
        timings = []
        for impl in (compiled, kernels.apply_gate_py):
            kernels.apply_gate = impl
            try:
                timings.append(best_of(lambda: invariant_N(ctx, p), 1 if heavy else repeat))
            finally:
                kernels.apply_gate = compiled
        print(f"{name:>26} {timings[0]:>11.3f} {timings[1]:>9.3f} {timings[1] / timings[0]:>8.1f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--heavy", action="store_true", help="add a ~1 minute r=8 case")
    args = ap.parse_args()
    print(f"active backend: {kernels.BACKEND}")
    if kernels.BACKEND != "compiled":
        print("compiled extension not built; both columns use the fallback")
    micro(args.repeat)
    end_to_end(args.repeat, args.heavy)


if __name__ == "__main__":
    main()
