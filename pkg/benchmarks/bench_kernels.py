"""Time the numba and numpy kernels against each other.

    python3 benchmarks/bench_kernels.py [--sizes 4 8 16 32] [--repeat 5]

The numba functions are called once before timing so compilation is not
counted.  Both backends must return the same value for every case.
"""

import argparse
import time

import numpy as np

from octachain import _kernels
from octachain.decomposition import laplacian_array
from octachain.graphs import build_chain

PRIME = 2**31 - 1


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return result, min(times)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 16, 32, 64])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    warm = build_chain(1, "mobius")
    _kernels.distance_sum_numba(*_kernels.to_csr(warm.adjacency_lists()))
    _kernels.det_mod_numba(np.eye(2, dtype=np.int64), PRIME)

    print(f"{'kernel':<14}{'n':>5}{'|V|':>6}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for n in args.sizes:
        g = build_chain(n, "mobius")
        csr = _kernels.to_csr(g.adjacency_lists())
        reduced = laplacian_array(g).astype(np.int64)[1:, 1:]
        cases = [
            ("bfs_sum", lambda: _kernels.distance_sum_numba(*csr),
             lambda: _kernels.distance_sum_numpy(*csr)),
            ("det_mod_p", lambda: _kernels.det_mod_numba(reduced, PRIME),
             lambda: _kernels.det_mod_numpy(reduced, PRIME)),
        ]
        for name, fast, slow in cases:
            a, ta = best_of(fast, args.repeat)
            b, tb = best_of(slow, args.repeat)
            if a != b:
                raise SystemExit(f"{name} n={n}: backends disagree ({a} vs {b})")
            print(f"{name:<14}{n:>5}{8 * n:>6}{ta * 1e3:>12.3f}{tb * 1e3:>12.3f}{tb / ta:>9.1f}x")


if __name__ == "__main__":
    main()
