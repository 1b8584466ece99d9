"""Partition arithmetic underlying nilpotent orbits of the classical groups.

Partitions are plain tuples of positive integers, sorted weakly decreasing.
Group types are the one-letter strings ``A``, ``B``, ``C``, ``D``, standing
for GL_n, SO_{2n+1}, Sp_{2n} and SO_{2n}.  An orbit is labelled by a valid
partition of the dimension of the defining representation; for very even
type-D partitions the label optionally carries a ``+``/``-`` sign that
distinguishes the two orbits sharing that partition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import (
    EmptyPartition,
    InvalidLabel,
    MissingPart,
    PartTooSmall,
)

GROUP_TYPES = ("A", "B", "C", "D")


def as_partition(parts) -> tuple:
    """Sort ``parts`` weakly decreasing and return them as a tuple.

    Raises InvalidLabel on non-integral or non-positive entries.
    """
    out = tuple(sorted(parts, reverse=True))
    for p in out:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise InvalidLabel("partition parts must be positive integers, got %r" % (p,))
    return out


def size(lam) -> int:
    return sum(lam)


def mults(lam) -> dict:
    """Multiplicity view: map part size i to its multiplicity r_i."""
    return dict(Counter(lam))


def validate(group: str, lam) -> bool:
    """True iff ``lam`` labels a nilpotent orbit of the given group type.

    A: any partition.  B: odd total size, even part sizes occur with even
    multiplicity.  C: even total size, odd part sizes with even multiplicity.
    D: even total size, even part sizes with even multiplicity.
    """
    if group not in GROUP_TYPES:
        raise InvalidLabel("unknown group type %r" % (group,))
    lam = tuple(lam)
    if group == "A":
        return True
    n = size(lam)
    ms = mults(lam)
    if group == "B":
        return n % 2 == 1 and all(r % 2 == 0 for i, r in ms.items() if i % 2 == 0)
    if group == "C":
        return n % 2 == 0 and all(r % 2 == 0 for i, r in ms.items() if i % 2 == 1)
    return n % 2 == 0 and all(r % 2 == 0 for i, r in ms.items() if i % 2 == 0)


def require_valid(group: str, lam) -> None:
    if not validate(group, lam):
        raise InvalidLabel("%s is not a type-%s orbit label" % (lam, group))


def remove_box(lam, i: int) -> tuple:
    """Remove one box from a row of length i, re-sorting rows."""
    ms = mults(lam)
    if ms.get(i, 0) < 1:
        raise MissingPart("no part of size %d in %s" % (i, lam))
    out = list(lam)
    out.remove(i)
    if i > 1:
        out.append(i - 1)
    return tuple(sorted(out, reverse=True))


def remove_h(lam, i: int) -> tuple:
    """Remove a horizontal domino from a row of length i (needs i >= 2)."""
    if i < 2:
        raise PartTooSmall("horizontal removal needs part size >= 2, got %d" % i)
    ms = mults(lam)
    if ms.get(i, 0) < 1:
        raise MissingPart("no part of size %d in %s" % (i, lam))
    out = list(lam)
    out.remove(i)
    if i > 2:
        out.append(i - 2)
    return tuple(sorted(out, reverse=True))


def remove_v(lam, i: int) -> tuple:
    """Remove a vertical domino from two rows of length i (needs r_i >= 2)."""
    ms = mults(lam)
    if ms.get(i, 0) < 2:
        raise MissingPart("need two parts of size %d in %s" % (i, lam))
    out = list(lam)
    out.remove(i)
    out.remove(i)
    if i > 1:
        out.extend((i - 1, i - 1))
    return tuple(sorted(out, reverse=True))


def d_index(lam, i: int) -> int:
    """Number of rows strictly longer than i."""
    return sum(1 for p in lam if p > i)


def xi_min_part(lam) -> int:
    """Smallest part size occurring in ``lam``."""
    if not lam:
        raise EmptyPartition("empty partition has no smallest part")
    return min(lam)


def is_very_even(group: str, lam) -> bool:
    """True iff the label is type D with all parts even.

    Such partitions label two distinct orbits.
    """
    require_valid(group, lam)
    return group == "D" and bool(lam) and all(p % 2 == 0 for p in lam)


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of n in reverse lexicographic order."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for head in range(max_part, 0, -1):
        for tail in partitions_of(n - head, head):
            yield (head,) + tail


def orbit_size(group: str, n: int) -> int:
    """Total partition size labelling rank-n orbits: n, 2n+1, 2n, 2n."""
    if group == "A":
        return n
    if group == "B":
        return 2 * n + 1
    return 2 * n


def enumerate_orbits(group: str, n: int) -> list:
    """All valid orbit partitions at rank n, in reverse lexicographic order.

    Very even type-D partitions appear once; they each label two orbits.
    """
    if group not in GROUP_TYPES:
        raise InvalidLabel("unknown group type %r" % (group,))
    total = orbit_size(group, n)
    return [lam for lam in partitions_of(total) if validate(group, lam)]


def parse_partition(text: str) -> tuple:
    """Parse a comma-separated partition such as ``"6,4,2"``.

    Input is sorted, not rejected, when given out of order.  The empty
    string parses to the empty partition.
    """
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InvalidLabel("cannot parse partition %r" % (text,)) from None
    return as_partition(parts)


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam)


@dataclass(frozen=True)
class OrbitLabel:
    """A nilpotent orbit: group type, partition, optional very even sign."""

    group: str
    parts: tuple
    sign: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "parts", as_partition(self.parts))
        require_valid(self.group, self.parts)
        if self.sign is not None:
            if self.sign not in ("+", "-"):
                raise InvalidLabel("orbit sign must be '+' or '-', got %r" % (self.sign,))
            if not is_very_even(self.group, self.parts):
                raise InvalidLabel("sign only allowed on very even type-D labels")

    def __str__(self):
        tag = self.sign or ""
        return "%s(%s)%s" % (self.group, format_partition(self.parts), tag)
