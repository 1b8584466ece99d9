#!/usr/bin/env python3
"""Tabulate Euler characteristics and character multiplicities by rank.

Usage: python scripts/euler_report.py [--group B|C|D] [--max-rank N]
"""

import argparse

from springerec.euler import euler_char, multiplicities
from springerec.partitions import enumerate_orbits, format_partition


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--group", choices=("A", "B", "C", "D"), default="C")
    ap.add_argument("--max-rank", type=int, default=4)
    args = ap.parse_args()
    for n in range(args.max_rank + 1):
        print("# rank %d" % n)
        for lam in enumerate_orbits(args.group, n):
            mv = multiplicities(args.group, lam, over="A")
            pretty = ", ".join("%s:%d" % kv for kv in mv.items())
            print("%-16s EC=%-8d %s" % (format_partition(lam), euler_char(args.group, lam), pretty))


if __name__ == "__main__":
    main()
