"""Benchmark the compiled kernel core against the pure-Python fallback.

Times the four hot kernels on representative workloads (the S4 group with
the seven-element lattice and its product with the two-chain) plus the
full interval enumeration that powers maximality checks and L-subgroup
censuses.  Run:

    python benchmarks/bench_kernels.py [--repeat N]

The compiled core must be built (pip install -e . --no-build-isolation);
otherwise only the pure column is reported.
"""

import argparse
import random
import time

from lgroup import instances
from lgroup._kernels import pure

try:
    from lgroup._kernels import _core as compiled
except ImportError:
    compiled = None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    G = instances.s4()
    M2 = instances.m_times_2()
    mu, eta = instances.example3()
    n, m = G.order, len(M2.elements)
    rng = random.Random(19)
    seeds = [rng.getrandbits(n) for _ in range(2000)]

    def closure(kern):
        for s in seeds:
            kern.closure(G.mul_flat, n, s)

    gen_args = (n, m, list(eta.vals), eta.tip_id, M2.bottom.id,
                G.mul_flat, M2.leq_flat, M2.join_flat)

    def generated(kern):
        for _ in range(500):
            kern.generated_values(*gen_args)

    wu_args = (n, m, list(eta.vals), list(mu.vals), G.conj_flat,
               M2.leq_flat, M2.meet_flat)

    def wu(kern):
        for _ in range(5000):
            kern.wu_normal(*wu_args)

    D4, M = instances.d4(), instances.lattice_m()
    lo = [M.bottom.id] * D4.order
    hi = [M.top.id] * D4.order
    enum_args = (D4.order, len(M.elements), D4.mul_flat, D4.inv, lo, hi,
                 M.leq_flat, M.join_flat, M.meet_flat, 10 ** 8, 1 << 62)

    def enum(kern):
        kern.enum_interval(*enum_args)

    max_args = (G.order, m, G.mul_flat, G.inv, list(eta.vals), list(mu.vals),
                M2.leq_flat, M2.join_flat, M2.meet_flat, 10 ** 8, 3)

    def maximality(kern):
        for _ in range(50):
            kern.enum_interval(*max_args)

    return [
        ("closure x2000 (S4)", closure),
        ("generated_values x500 (S4, 14-elt lattice)", generated),
        ("wu_normal x5000 (S4)", wu),
        ("enum_interval full census (D4 x M, 2273 subgroups)", enum),
        ("enum_interval maximality x50 (worked dihedral pair)", maximality),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best of N runs")
    args = parser.parse_args()

    print(f"{'workload':<55} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in workloads():
        tp = timeit(lambda: fn(pure), args.repeat)
        if compiled is not None:
            tc = timeit(lambda: fn(compiled), args.repeat)
            print(f"{name:<55} {tp*1e3:>8.1f}ms {tc*1e3:>8.1f}ms {tp/tc:>7.1f}x")
        else:
            print(f"{name:<55} {tp*1e3:>8.1f}ms {'n/a':>10} {'':>8}")
    if compiled is None:
        print("\ncompiled core not available; install with the extension to compare")


if __name__ == "__main__":
    main()
