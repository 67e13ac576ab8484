#!/usr/bin/env python3
"""Benchmark the GF(2) chamber scan: compiled core vs pure Python.

Usage: python benchmarks/bench_scan.py [--bound 5] [--counts]

The compiled backend is the Cython module _scan_core; the pure backend is
scan_py.  Both run the same enumeration, so the reported counts must
agree; a mismatch is a bug, not a benchmark result.
"""

import argparse
import time

from conifold_flop import scan


def run(backend, bound, with_counts):
    t0 = time.perf_counter()
    result = scan.scan_stable_dimvectors(1, bound, with_counts=with_counts, backend=backend)
    return time.perf_counter() - t0, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=5)
    ap.add_argument("--counts", action="store_true",
                    help="full enumeration instead of stopping at the first stable")
    ns = ap.parse_args()

    backends = scan.get_backends()
    print("scan of dimension vectors with d0 + d1 <= %d (%s mode)"
          % (ns.bound, "count" if ns.counts else "exists"))
    results = {}
    for name, _ in backends:
        elapsed, result = run(name, ns.bound, ns.counts)
        results[name] = result
        print("  %-9s %8.3f s   %s" % (name, elapsed, sorted(result.items())))
    if len(results) == 2 and results["pure"] != results["compiled"]:
        raise SystemExit("backend results disagree!")
    if len(results) < 2:
        print("  (compiled backend not built; run pip install -e . with cython)")


if __name__ == "__main__":
    main()
