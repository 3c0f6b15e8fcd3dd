#!/usr/bin/env python3
"""Benchmark the compiled search kernels against the numpy fallback.

Times each hot kernel on representative rings, then a full property-vector
decision end to end under each backend.  Run after `pip install -e .`:

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

import numpy as np

import ringrange as rr
from ringrange import _kernels
from ringrange.harness import CorpusConfig, property_vector


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_cases():
    cases = []

    z97 = rr.realize("Z97")
    z96 = rr.realize("Z96")
    z64 = rr.realize("Z64")
    z36 = rr.realize("Z36")
    p16 = rr.realize("Z4[x]/(x^2)")

    for ring in (z97, z96, z64, z36, p16):
        ring.unimodular_table  # warm the shared cache so kernels time only themselves

    def unimodular(k, ring=z97):
        k.unimodular_table(ring.principal_table, ring.one_minus)

    cases.append(("unimodular_table Z97", unimodular))

    def range1(k, ring=z96):
        ys = np.arange(ring.order, dtype=np.int32)
        k.range1_first_violation(ring.add, ring.mul, ring.unimodular_table, ring.unit_mask, ys)

    cases.append(("range1 (SR1) Z96", range1))

    def sr2(k, ring=z64):
        k.sr2_first_violation(
            ring.add, ring.mul, ring.principal_table, ring.unimodular_table, ring.one_minus
        )

    cases.append(("sr2 Z64", sr2))

    def sr2_poly(k, ring=p16):
        k.sr2_first_violation(
            ring.add, ring.mul, ring.principal_table, ring.unimodular_table, ring.one_minus
        )

    cases.append(("sr2 Z4[x]/(x^2)", sr2_poly))

    def hermite(k, ring=z96):
        k.hermite_first_violation(ring.mul, ring.principal_table, ring.unimodular_table)

    cases.append(("hermite Z96", hermite))

    def hermite_fail(k, ring=p16):
        k.hermite_first_violation(ring.mul, ring.principal_table, ring.unimodular_table)

    cases.append(("hermite Z4[x]/(x^2)", hermite_fail))

    return cases


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()

    backends = _kernels.available()
    if len(backends) < 2:
        print("compiled kernels not built; only the pure backend is available")

    print(f"backends: {', '.join(backends)}  (repeat={args.repeat}, best-of)")
    header = f"{'kernel':<28}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for name, call in kernel_cases():
        times = {}
        for backend in backends:
            mod = _kernels.backend_module(backend)
            times[backend] = timeit(lambda: call(mod), args.repeat)
        row = f"{name:<28}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            row += f"{times['pure'] / max(times['compiled'], 1e-9):>9.1f}x"
        print(row)

    print()
    previous = _kernels.active_name()
    cfg = CorpusConfig()
    try:
        for backend in backends:
            _kernels.use(backend)
            ring = rr.realize("Z60")
            ring._cache.clear()
            t0 = time.perf_counter()
            property_vector(ring, cfg)
            dt = time.perf_counter() - t0
            print(f"full property vector Z60, {backend:>8}: {dt * 1e3:8.1f}ms")
    finally:
        _kernels.use(previous)


if __name__ == "__main__":
    main()
