"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends must give the same answer on every case; a mismatch aborts.
"""
import argparse
import sys
import time

import numpy as np

from fracgap import _kernels
from fracgap import graph as G
from fracgap.config import DEFAULT
from fracgap.cycles import _csr


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def jacobi_cases():
    rng = np.random.default_rng(7)
    for name, g in (("C_31", G.cycle(31)), ("Petersen", G.petersen()),
                    ("L(Petersen)", G.line_graph(G.petersen())), ("Q_6", G.hypercube(6))):
        yield name, g.adjacency()
    for n in (40, 80):
        m = rng.normal(size=(n, n))
        yield f"random {n}x{n}", (m + m.T) / 2


def cycle_cases():
    yield "Petersen, L=5", G.petersen(), 5
    yield "L(Petersen), L=5", G.line_graph(G.petersen()), 5
    yield "blow-up(2,3), L=5", G.blow_up_odd_cycle(2, 3), 5
    yield "blow-up(3,3), L=7", G.blow_up_odd_cycle(3, 3), 7
    yield "K_9, L=7", G.complete(9), 7


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    kernels = _kernels.backends()
    if "cython" not in kernels:
        print("compiled kernels not built; only the Python backend is available", file=sys.stderr)
    names = sorted(kernels, reverse=True)  # python first
    header = f"{'case':<26}" + "".join(f"{n:>12}" for n in names) + (f"{'speedup':>10}" if len(names) > 1 else "")
    tol = DEFAULT

    print("jacobi_eigh (seconds, best of %d)" % args.repeat)
    print(header)
    for name, a in jacobi_cases():
        row, results = [], []
        for kname in names:
            t, out = best_of(lambda: kernels[kname].jacobi_eigh(a.copy(), tol.convergence, tol.max_sweeps), args.repeat)
            row.append(t)
            results.append(np.sort(out[0]))
        for r in results[1:]:
            if np.max(np.abs(r - results[0])) > 1e-9:
                sys.exit(f"eigenvalue mismatch on {name}")
        print(f"{name:<26}" + "".join(f"{t:12.4f}" for t in row) + (f"{row[0] / row[1]:9.1f}x" if len(row) > 1 else ""))

    print()
    print("enumerate_cycles (seconds, best of %d)" % args.repeat)
    print(header)
    for name, g, length in cycle_cases():
        indptr, indices = _csr(g)
        dist = G.distance_matrix(g)
        row, results = [], []
        for kname in names:
            t, out = best_of(lambda: kernels[kname].enumerate_cycles(indptr, indices, dist, g.n, length, tol.node_limit),
                             args.repeat)
            row.append(t)
            results.append(sorted(out[0]))
        if any(r != results[0] for r in results[1:]):
            sys.exit(f"cycle mismatch on {name}")
        print(f"{name:<26}" + "".join(f"{t:12.4f}" for t in row) + (f"{row[0] / row[1]:9.1f}x" if len(row) > 1 else "")
              + f"   ({len(results[0])} cycles)")


if __name__ == "__main__":
    main()
