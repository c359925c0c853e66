#!/usr/bin/env python3
"""Complement cohomology of a closed stratum across a ladder of ambient degrees.

Adding an elliptic quadratic factor embeds the degree-n picture into degree
n + 2; the complement tables become constant low degrees first.  Prints one
table per ambient degree and flags the first degree where consecutive tables
differ, or writes the whole ladder as CSV with --csv.
"""

import argparse
import sys

from polystrata.compositions import parse_parts
from polystrata.strata import stabilization_report


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lambda", dest="parts", required=True,
                        help="comma-separated parts, e.g. 1,2")
    parser.add_argument("--n-min", type=int, default=None,
                        help="smallest ambient degree (default: the weight)")
    parser.add_argument("--n-max", type=int, default=9)
    parser.add_argument("--csv", action="store_true")
    args = parser.parse_args()

    partition = tuple(sorted(parse_parts(args.parts)))
    n_min = args.n_min if args.n_min is not None else sum(partition)
    report = stabilization_report(partition, n_min, args.n_max)
    if args.csv:
        sys.stdout.write(report.to_csv())
        return
    print("lambda = %s" % (partition,))
    for n, table in zip(report.ambients, report.tables):
        print("  n = %d: %s" % (n, table))
    for (a, b), degree in zip(
        zip(report.ambients, report.ambients[1:]), report.first_unstable
    ):
        if degree is None:
            print("  n=%d vs n=%d: tables agree everywhere" % (a, b))
        else:
            print("  n=%d vs n=%d: first difference in degree %d" % (a, b, degree))


if __name__ == "__main__":
    main()
