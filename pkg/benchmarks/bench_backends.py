#!/usr/bin/env python3
"""Timing comparison of the kernel backends on the hot scan paths.

Each workload runs on every available backend ("py" pure Python,
"c" compiled) with identical inputs; outputs are compared for equality
before any time is reported, so the table doubles as a parity check.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

import numpy as np

from ringlab import algebra, gf, kernels, structure, theorems


def _ring_data(alg):
    # fresh RingData per benchmark so per-backend context caches start cold
    return kernels.RingData(
        [alg.field.q] * alg.dim, alg.table, alg.unity, alg.field
    )


def bench_census_f2():
    field = gf.make_field(2)
    fadd, fmul, _ = field.tables()
    return lambda: np.asarray(
        kernels.census_scan(2, 3, fadd, fmul, 0, 4096)
    )


def bench_census_f3_slice():
    field = gf.make_field(3)
    fadd, fmul, _ = field.tables()
    return lambda: np.asarray(
        kernels.census_scan(3, 3, fadd, fmul, 0, 30000)
    )


def bench_fixpoints():
    prod = algebra.make_product(
        algebra.make_S(gf.make_field(5)), algebra.make_qring(gf.make_field(5), 1)
    )
    rd = _ring_data(prod)
    return lambda: np.asarray(kernels.power_defects(rd, 5))


def bench_units_radical():
    m2 = algebra.make_matrix(gf.make_field(3), 2)
    rd = _ring_data(m2)

    def run():
        units = kernels.scan_units(rd)
        return np.asarray(kernels.scan_radical(rd, units))

    return run


def bench_lemma_sweep():
    s4 = algebra.make_S(gf.make_field(2, 2))
    rd = _ring_data(s4)
    q = 4
    defects = kernels.power_defects(rd, q)
    cen = np.zeros(rd.size, dtype=np.uint8)
    cen[list(structure.center(s4).members)] = 1
    scalars = np.array(
        sorted(
            s4.encode(s4.scalar(f, s4.unity)) for f in s4.field.elements()
        ),
        dtype=np.int64,
    )
    return lambda: np.asarray(
        kernels.lemma_sweep(rd, scalars, defects, cen)
    )


WORKLOADS = [
    ("census GF(2) dim 3, full", bench_census_f2),
    ("census GF(3) dim 3, 30k slice", bench_census_f3_slice),
    ("power defects, S(F5) x F5", bench_fixpoints),
    ("units + radical, M2(F3)", bench_units_radical),
    ("shift-witness sweep, S(F4)", bench_lemma_sweep),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats")
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (active: {kernels.backend_name()})")
    header = f"{'workload':<32}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, setup in WORKLOADS:
        times = {}
        results = {}
        for backend in backends:
            previous = kernels.set_backend(backend)
            try:
                fn = setup()
                fn()  # warm caches, exclude one-time context building
                best = min(
                    _timed(fn) for _ in range(max(1, args.repeat))
                )
                times[backend] = best
                results[backend] = fn()
            finally:
                kernels.set_backend(previous)
        baseline = list(results.values())[0]
        for backend, value in results.items():
            if not np.array_equal(np.asarray(value), np.asarray(baseline)):
                raise SystemExit(f"backend disagreement in {label!r} ({backend})")
        row = f"{label:<32}" + "".join(
            f"{times[b] * 1000:>10.2f}ms" for b in backends
        )
        if len(backends) > 1 and "c" in times and "py" in times:
            row += f"{times['py'] / times['c']:>9.1f}x"
        print(row)


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
