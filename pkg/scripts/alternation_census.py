#!/usr/bin/env python3
"""Census of alternating-subset counts by case, for a range of k.

For every (k+1)-subset I of [2k+3] the number of equal-size subsets of the
complement alternating with I is 0 or 2, split across five structural cases.
This prints how many subsets fall into each case and cross-checks the closed
form against brute-force enumeration.
"""

import argparse
import itertools
import sys
from collections import Counter

from linkparity.combinatorics import (
    alternating_count_bruteforce,
    alternating_count_closed_form,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=6)
    args = parser.parse_args()

    for k in range(1, args.max_k + 1):
        n = 2 * k + 3
        cases = Counter()
        mismatches = 0
        for subject in itertools.combinations(range(1, n + 1), k + 1):
            breakdown = alternating_count_closed_form(subject, n)
            cases[breakdown.case_tag.value] += 1
            if breakdown.count != alternating_count_bruteforce(subject, n):
                mismatches += 1
        total = sum(cases.values())
        print(f"k={k} (n={n}, {total} subsets, {mismatches} closed-form mismatches)")
        for case, count in sorted(cases.items()):
            print(f"  {case:>15}: {count}")
        if mismatches:
            return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
