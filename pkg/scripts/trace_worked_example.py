#!/usr/bin/env python3
"""Print the level-by-level Euler-characteristic expansion of one orbit.

Usage: python scripts/trace_worked_example.py [TYPE PARTITION]
Defaults to the Sp_12 orbit 6,4,2.
"""

import sys

from springerec.euler import euler_char, trace_expansion
from springerec.partitions import format_partition, parse_partition


def main():
    group = sys.argv[1] if len(sys.argv) > 2 else "C"
    parts = parse_partition(sys.argv[2] if len(sys.argv) > 2 else "6,4,2")
    print("EC(%s)  [type %s]" % (format_partition(parts), group))
    for level in trace_expansion(group, parts)[1:]:
        terms = []
        for p in sorted(level, reverse=True):
            c = level[p]
            terms.append("%sEC(%s)" % ("" if c == 1 else "%d*" % c, format_partition(p)))
        print(" = " + " + ".join(terms))
    print(" = %d" % euler_char(group, parts))


if __name__ == "__main__":
    main()
