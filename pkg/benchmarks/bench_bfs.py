"""Compare the compiled and pure-Python BFS kernels on small groups.

Usage: python benchmarks/bench_bfs.py [--repeat N]
"""

import argparse
import time

from reflen import kernels
from reflen.oracle import bfs_lengths, enumerate_group, reflections_of

GROUPS = [
    ("GL", 2, 3),
    ("GL", 3, 2),
    ("GL", 2, 5),
    ("GA", 2, 3),
    ("GA", 3, 2),
]


def time_backend(table, refl, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = bfs_lengths(table, refl, backend=backend).lengths
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["pure"]
    if kernels.HAVE_SPEEDUPS:
        backends.append("compiled")
    else:
        print("compiled kernel unavailable; timing the pure backend only")

    print("%-12s %10s %12s %12s %8s" % ("group", "elements", *backends[:2], "speedup")
          if len(backends) == 2
          else "%-12s %10s %12s" % ("group", "elements", "pure"))
    for kind, n, p in GROUPS:
        table = enumerate_group(kind, n, p)
        refl = reflections_of(table)
        times = {}
        results = {}
        for b in backends:
            times[b], results[b] = time_backend(table, refl, b, args.repeat)
        if len(backends) == 2:
            assert results["pure"] == results["compiled"], "backends disagree"
            print(
                "%-12s %10d %11.4fs %11.4fs %7.1fx"
                % (
                    "%s_%d(F_%d)" % (kind, n, p),
                    len(table),
                    times["pure"],
                    times["compiled"],
                    times["pure"] / max(times["compiled"], 1e-9),
                )
            )
        else:
            print(
                "%-12s %10d %11.4fs"
                % ("%s_%d(F_%d)" % (kind, n, p), len(table), times["pure"])
            )


if __name__ == "__main__":
    main()
