"""Compare the compiled and pure-Python elimination kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Two workloads: random small-integer matrices, and the real oracle matrices
(Plucker relation blocks for Gr(3,6) in degree 3, the heaviest kernel the
test suite hits).
"""

import argparse
import random
import time

from rdegen import linalg, oracle
from rdegen.combinatorics import full_interval


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def random_workload(seed=0, count=500, size=10):
    rng = random.Random(seed)
    return [[[rng.randint(-3, 3) for _ in range(size)] for _ in range(size)] for _ in range(count)]


def oracle_workload():
    """Substitution matrices of every content block of Gr(3,6), degree 3."""
    mats = []
    for key, monos in oracle._all_by_content(3, 6, 3).items():
        images = [oracle.substitute({m: 1}).terms for m in monos]
        xs = sorted({x for img in images for x in img})
        pos = {x: j for j, x in enumerate(xs)}
        rows = []
        for img in images:
            r = [0] * len(xs)
            for x, c in img.items():
                r[pos[x]] = c
            rows.append(r)
        # the oracle eliminates the transpose when it takes a left kernel
        mats.append([[rows[i][j] for i in range(len(rows))] for j in range(len(xs))])
    return mats


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if linalg._rref_c is None:
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
        return
    workloads = {"random 10x10 x500": random_workload(), "Gr(3,6) d=3 blocks": oracle_workload()}
    print(f"{'workload':<22}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, mats in workloads.items():
        ncols = [len(m[0]) if m else 0 for m in mats]
        py = _time(lambda: [linalg.rref(m, c, "python") for m, c in zip(mats, ncols)], args.repeat)
        cy = _time(lambda: [linalg.rref(m, c, "cython") for m, c in zip(mats, ncols)], args.repeat)
        same = all(linalg.rref(m, c, "python") == linalg.rref(m, c, "cython") for m, c in zip(mats, ncols))
        print(f"{name:<22}{py:>10.3f}{cy:>10.3f}{py / cy:>8.1f}x  identical={same}")
    iv = full_interval(3, 6)
    oracle.clear_caches()
    t0 = time.perf_counter()
    oracle.richardson_ideal_piece(iv.v, iv.w, 3)
    print(f"end-to-end Gr(3,6) degree-3 ideal piece with the {linalg.BACKEND} backend: "
          f"{time.perf_counter() - t0:.3f} s")


if __name__ == "__main__":
    main()
