#!/usr/bin/env python3
"""Sweep the no-linked-pair verification over a range of k, with timings.

For each k the moment-curve configuration on 2k+3 integer parameters is
built in R^{2k}, certified to be in general position, and every (k+1)-subset
is checked against every face of its complementary simplex.  The expected
outcome is zero linked pairs and all cross-check counts equal and even.
"""

import argparse
import sys
import time

from linkparity.linking import verify_counterexample


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=5)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    header = f"{'k':>3} {'n':>4} {'d':>4} {'subsets':>8} {'linked':>7} {'ok':>4} {'seconds':>8}"
    print(header)
    print("-" * len(header))
    all_ok = True
    for k in range(1, args.max_k + 1):
        start = time.perf_counter()
        result = verify_counterexample(k, workers=args.workers)
        elapsed = time.perf_counter() - start
        report = result.report
        all_ok = all_ok and result.ok
        print(
            f"{k:>3} {report.n:>4} {report.dimension:>4} "
            f"{len(report.per_subset):>8} {report.total_linked:>7} "
            f"{'yes' if result.ok else 'NO':>4} {elapsed:>8.2f}"
        )
        for failure in result.failures:
            print(f"    failure: {failure}")
    return 0 if all_ok else 2


if __name__ == "__main__":
    sys.exit(main())
