#!/usr/bin/env python3
"""Survey how much of each type the graded (degree-by-degree) recursion covers.

For every valid B/C/D label up to --max-size, attempt the graded table and
report the in-scope fraction plus a few partitions that escape (either
directly or through a recursive dependency).

Usage: python scripts/graded_scope_survey.py [--max-size N]
"""

import argparse
from collections import Counter

from springerec.betti import betti_bcd
from springerec.errors import OutOfScope
from springerec.partitions import format_partition
from springerec.verification import bcd_labels


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=14)
    args = ap.parse_args()
    for group in ("B", "C", "D"):
        stats = Counter()
        escapes = []
        for g, lam in bcd_labels(args.max_size):
            if g != group:
                continue
            try:
                betti_bcd(group, lam)
                stats["in"] += 1
            except OutOfScope as err:
                stats["out"] += 1
                if len(escapes) < 6:
                    escapes.append("%s (via %s)" % (format_partition(lam), format_partition(err.parts)))
        total = stats["in"] + stats["out"]
        print(
            "type %s: %d/%d labels in scope (%.0f%%)"
            % (group, stats["in"], total, 100.0 * stats["in"] / max(total, 1))
        )
        for e in escapes:
            print("   escapes: %s" % e)


if __name__ == "__main__":
    main()
