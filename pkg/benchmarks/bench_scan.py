"""Benchmark the lattice-scan backends against each other.

Runs the box classification of the embedded Barnette fan once per backend
and reports wall times and speedups.  The compiled Cython kernel and the
vectorized numpy fallback are compared at the requested bound; the pure
arbitrary-precision backend joins in only at small bounds (it exists for
exactness beyond 64 bits, not for speed).

    python benchmarks/bench_scan.py --bound 20 --workers 2
"""

import argparse
import os
import time

from fankit.barnette import barnette_fan
from fankit.scan import COMPILED_KERNEL_AVAILABLE, scan_box

PYTHON_BACKEND_MAX_BOUND = 6


def run(fan, bound, backend, workers):
    started = time.perf_counter()
    report = scan_box(fan, bound, workers=workers, backend=backend)
    elapsed = time.perf_counter() - started
    assert report.sum_matches
    return elapsed, report


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bound", type=int, default=20)
    parser.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    parser.add_argument(
        "--include-python", action="store_true",
        help=f"benchmark the pure backend even above bound {PYTHON_BACKEND_MAX_BOUND}",
    )
    args = parser.parse_args()

    fan = barnette_fan()
    total = (2 * args.bound + 1) ** fan.ambient_dim
    print(f"scan of {total:,} points (bound {args.bound}), workers {args.workers}")

    backends = []
    if COMPILED_KERNEL_AVAILABLE:
        backends.append("compiled")
    else:
        print("compiled kernel not available; rebuilding the package would enable it")
    backends.append("numpy")
    if args.include_python or args.bound <= PYTHON_BACKEND_MAX_BOUND:
        backends.append("python")

    timings = {}
    reference_counts = None
    for backend in backends:
        elapsed, report = run(fan, args.bound, backend, args.workers)
        timings[backend] = elapsed
        if reference_counts is None:
            reference_counts = report.counts_by_dim
        elif report.counts_by_dim != reference_counts:
            raise SystemExit(f"backend {backend} disagrees: {report.counts_by_dim}")
        rate = total / elapsed
        print(f"  {backend:<9} {elapsed:9.3f} s   {rate / 1e6:8.2f} Mpoints/s")

    if "compiled" in timings:
        for other in backends:
            if other != "compiled":
                print(f"  compiled is {timings[other] / timings['compiled']:.1f}x"
                      f" faster than {other}")
    print(f"counts by minimal-face dimension: {reference_counts}")


if __name__ == "__main__":
    main()
