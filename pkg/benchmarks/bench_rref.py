"""Row reduction over GF(p): numba kernel vs vectorised numpy vs the generic exact path.

    python3 benchmarks/bench_rref.py [--sizes 16 64 256] [--p 5] [--repeat 3]

The first numba call includes JIT compilation and is timed separately.
All three backends must agree exactly; the script exits non-zero otherwise.
"""

import argparse
import sys
import time

import numpy as np

from hopfwit import _kernels
from hopfwit.exactfield import GF
from hopfwit.linalg import Matrix, _rref_generic


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 64, 128, 256])
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    F = GF(args.p)
    rng = np.random.default_rng(args.seed)
    if _kernels.HAS_NUMBA:
        warm = rng.integers(0, args.p, (4, 4), dtype=np.int64)
        t0 = time.perf_counter()
        _kernels.rref_mod_p_numba(warm, np.int64(args.p))
        print(f"numba compile (or cache load): {time.perf_counter() - t0:.3f}s")

    print(f"{'n':>5} {'numba':>10} {'numpy':>10} {'generic':>10}")
    ok = True
    for n in args.sizes:
        # rank-deficient on purpose so the free-column path is exercised
        a = rng.integers(0, args.p, (n, n), dtype=np.int64)
        a[n // 2] = (a[0] + a[1]) % args.p
        row = []
        results = []
        if _kernels.HAS_NUMBA:
            t, out = best_of(lambda: _kernels.rref_mod_p_numba(a, np.int64(args.p)), args.repeat)
            row.append(f"{t:10.4f}")
            results.append(out)
        else:
            row.append(f"{'n/a':>10}")
        t, out = best_of(lambda: _kernels.rref_mod_p_numpy(a, args.p), args.repeat)
        row.append(f"{t:10.4f}")
        results.append(out)
        rows = [[F(int(x)) for x in r] for r in a]
        t, (red, piv) = best_of(lambda: _rref_generic([list(r) for r in rows], n), 1)
        row.append(f"{t:10.4f}")
        generic = (np.array([[x.value for x in r] for r in red], dtype=np.int64),
                   np.array(piv, dtype=np.int64))
        results.append(generic)
        for red_i, piv_i in results[1:]:
            ok &= np.array_equal(red_i, results[0][0]) and np.array_equal(piv_i, results[0][1])
        print(f"{n:>5} " + " ".join(row))
    print("backends agree" if ok else "BACKENDS DISAGREE")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
