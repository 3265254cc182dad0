#!/usr/bin/env python3
"""Random-configuration experiment: linked-count parity and pair existence.

Samples general-position integer configurations of n = d + 3 points in R^d
(d even), tallies the distribution of total linked counts, and confirms two
facts on every sample: the total is even, and some disjoint pair of
(d/2 + 1)-subsets has intersecting convex hulls.
"""

import argparse
import sys
from collections import Counter

from linkparity.configuration import sample_random_configuration
from linkparity.linking import find_intersecting_pair, total_linked_parity


def run_shape(n: int, d: int, trials: int, base_seed: int, bound: int) -> bool:
    totals = Counter()
    attempts = 0
    for trial in range(trials):
        config = sample_random_configuration(n, d, seed=base_seed + trial, bound=bound)
        attempts += config.provenance.attempts
        report = total_linked_parity(config)
        totals[report.total_linked] += 1
        if not report.parity_ok:
            print(f"  ODD TOTAL at seed {base_seed + trial}: {report.total_linked}")
            return False
        if find_intersecting_pair(config) is None:
            print(f"  NO INTERSECTING PAIR at seed {base_seed + trial}")
            return False
    print(f"(n={n}, d={d}): {trials} trials, {attempts} sampling attempts")
    for total in sorted(totals):
        print(f"  total linked = {total:>3}: {totals[total]:>4} configurations")
    print("  all totals even, intersecting pair found in every configuration")
    return True


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--bound", type=int, default=1000)
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--d", type=int, default=None)
    args = parser.parse_args()

    shapes = [(args.n, args.d)] if args.n and args.d else [(5, 2), (7, 4)]
    ok = all(run_shape(n, d, args.trials, args.seed, args.bound) for n, d in shapes)
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
