#!/usr/bin/env python3
"""Sweep orbit censuses of the zero-sum module over a grid of (n, q).

Prints one CSV block per feasible pair and flags which pairs admit a
regular orbit.  Pairs whose vector count exceeds the census cap are
skipped with a note instead of failing.
"""

import argparse
import sys
import time

from vangraph.caps import CapExceeded, default_caps
from vangraph.deleted import census_csv, group_order, orbit_census
from vangraph.numth import is_prime

DEFAULT_NS = (3, 4, 5, 6, 7)
DEFAULT_QS = (2, 3, 5, 7, 11, 13)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="*", default=DEFAULT_NS)
    ap.add_argument("--q", type=int, nargs="*", default=DEFAULT_QS)
    args = ap.parse_args()

    caps = default_caps()
    for q in args.q:
        if not is_prime(q):
            print(f"skipping q={q}: not prime", file=sys.stderr)
            continue
        for n in args.n:
            if q <= n:
                continue
            t0 = time.perf_counter()
            try:
                census, regular = orbit_census(n, q, caps)
            except CapExceeded as exc:
                print(f"# n={n} q={q}: skipped ({exc})")
                continue
            dt = time.perf_counter() - t0
            print(f"# n={n} q={q} group_order={group_order(n, q)}"
                  f" regular_orbit={'yes' if regular else 'no'}"
                  f" ({dt:.2f}s)")
            print(census_csv(census), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
