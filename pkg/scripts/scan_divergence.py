#!/usr/bin/env python3
"""Tabulate exact vs stable class counts per loop count m.

Prints one row per m with the number of exact and stable isomorphism classes
of weights N in [0, m-2], marks where the two classifications diverge, and
reports the smallest divergent m.
"""

import argparse

from oneideal import divergence_table, smallest_divergence


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=40)
    args = parser.parse_args()

    print(f"{'m':>4}  {'exact':>6}  {'stable':>6}")
    for m, exact, stable in divergence_table(args.max_m):
        mark = "  <-- diverges" if exact != stable else ""
        print(f"{m:>4}  {exact:>6}  {stable:>6}{mark}")
    print(f"\nsmallest divergent m: {smallest_divergence(args.max_m)}")


if __name__ == "__main__":
    main()
