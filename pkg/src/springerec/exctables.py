"""Embedded multiplicity tables for the exceptional groups.

The data ships as a TSV resource with columns group, orbit, a_group, phi,
mult: one row per (orbit, irreducible character of the orbit's component
group), in table order.  Orbits use Bala-Carter labels; component groups
are symmetric groups S_n (n <= 5) or trivial, and their characters are
labelled by partitions of n written as digit strings ("21", "1111", ...),
with "." for the trivial group.  The Euler characteristic of the fiber over
an orbit is the dimension-weighted sum of the multiplicities.
"""

from __future__ import annotations

import difflib
import unicodedata
from dataclasses import dataclass
from importlib import resources
from math import factorial

from .errors import BadLabel, UnknownOrbit

EXC_GROUPS = ("E6", "E7", "E8", "F4", "G2")

WEYL_ORDER = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
}

REGULAR_ORBIT = {"E6": "E_6", "E7": "E_7", "E8": "E_8", "F4": "F_4", "G2": "G_2"}

_A_GROUP_RANK = {"S2": 2, "S3": 3, "S4": 4, "S5": 5}


@dataclass(frozen=True)
class ExcRow:
    group: str
    orbit: str
    a_group: str
    phi: str
    mult: int


_TABLES = None


def _load():
    global _TABLES
    if _TABLES is not None:
        return _TABLES
    text = resources.files(__package__).joinpath("data/exceptional_tables.tsv").read_text()
    tables = {g: {} for g in EXC_GROUPS}
    for line in text.strip().splitlines():
        group, orbit, a_group, phi, mult = line.split("\t")
        row = ExcRow(group, orbit, a_group, phi, int(mult))
        tables[group].setdefault(orbit, []).append(row)
    _TABLES = tables
    return tables


def normalize_orbit(label: str) -> str:
    """Canonical form of a Bala-Carter label.

    Strips whitespace, maps typographic prime marks to ASCII apostrophes,
    and folds tilde spellings (combining accents, trailing tildes) into a
    leading ``~``: any of A-tilde_1, ``A~_1`` or ``A_1~`` becomes ``~A_1``.
    """
    s = unicodedata.normalize("NFD", label)
    s = "".join(ch for ch in s if not ch.isspace())
    for mark in ("′", "’", "ʹ", "`"):
        s = s.replace(mark, "'")
    s = s.replace("′", "'")
    # fold X~ or X(combining tilde) into ~X for the single letter it follows
    out = []
    for ch in s:
        if ch in ("~", "̃") and out:
            out.insert(len(out) - 1, "~")
        else:
            out.append(ch)
    s = "".join(out)
    # a tilde that drifted in front of an underscore group: ~A_1~ handled above;
    # A_1~ leaves "~" before "1", so pull it to the front of the token
    if "~" in s and not s.startswith("~") and "+" not in s:
        s = "~" + s.replace("~", "")
    elif "~" in s and "+" in s:
        parts = s.split("+")
        parts = ["~" + p.replace("~", "") if "~" in p and not p.startswith("~") else p for p in parts]
        s = "+".join(parts)
    return s


def _lookup(group: str, orbit: str):
    if group not in EXC_GROUPS:
        raise UnknownOrbit("unknown exceptional group %r" % (group,))
    table = _load()[group]
    wanted = normalize_orbit(orbit)
    if wanted in table:
        return wanted, table[wanted]
    close = difflib.get_close_matches(wanted, table.keys(), n=3, cutoff=0.5)
    hint = (" (did you mean: %s?)" % ", ".join(close)) if close else ""
    raise UnknownOrbit("no orbit %r in the %s table%s" % (orbit, group, hint))


def orbits(group: str) -> list:
    if group not in EXC_GROUPS:
        raise UnknownOrbit("unknown exceptional group %r" % (group,))
    return list(_load()[group].keys())


def query(group: str, orbit: str) -> list:
    """All (character label, multiplicity) rows of one orbit, in table order."""
    _, rows = _lookup(group, orbit)
    return [(r.phi, r.mult) for r in rows]


def a_group_of(group: str, orbit: str) -> str:
    _, rows = _lookup(group, orbit)
    return rows[0].a_group


def parse_phi(phi: str) -> tuple:
    if phi == ".":
        return ()
    try:
        parts = tuple(int(ch) for ch in phi)
    except ValueError:
        raise BadLabel("cannot parse character label %r" % (phi,)) from None
    if any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise BadLabel("character label %r is not a partition" % (phi,))
    return parts


def irrep_dim(n: int, phi) -> int:
    """Dimension of the S_n irreducible labelled by the partition phi.

    Computed by the hook length formula: n! divided by the product of hook
    lengths of the Young diagram.
    """
    parts = parse_phi(phi) if isinstance(phi, str) else tuple(phi)
    if sum(parts) != n:
        raise BadLabel("label %r is not a partition of %d" % (phi, n))
    if n == 0:
        return 1
    cols = [0] * parts[0]
    for row_len in parts:
        for c in range(row_len):
            cols[c] += 1
    hooks = 1
    for r, row_len in enumerate(parts):
        for c in range(row_len):
            hooks *= (row_len - c) + (cols[c] - r) - 1
    dim, rem = divmod(factorial(n), hooks)
    assert rem == 0
    return dim


def orbit_euler(group: str, orbit: str) -> int:
    """Euler characteristic of the fiber: sum of dim(phi) * mult over the orbit."""
    _, rows = _lookup(group, orbit)
    a_group = rows[0].a_group
    if a_group == ".":
        assert len(rows) == 1
        return rows[0].mult
    n = _A_GROUP_RANK[a_group]
    return sum(irrep_dim(n, r.phi) * r.mult for r in rows)


def table_counts() -> dict:
    """Per group: (number of orbits, number of rows)."""
    tables = _load()
    return {g: (len(tables[g]), sum(len(v) for v in tables[g].values())) for g in EXC_GROUPS}


def check_tables() -> list:
    """Integrity scan of the embedded data; returns a list of failures."""
    failures = []
    tables = _load()
    expected_counts = {"E6": (21, 25), "E7": (45, 60), "E8": (70, 113), "F4": (16, 26), "G2": (5, 7)}
    for g, (orbs, rows) in table_counts().items():
        if (orbs, rows) != expected_counts[g]:
            failures.append("%s table has %d orbits / %d rows, expected %s" % (g, orbs, rows, expected_counts[g]))
    for g in EXC_GROUPS:
        for orbit, rows in tables[g].items():
            a_groups = {r.a_group for r in rows}
            if len(a_groups) != 1:
                failures.append("%s %s mixes component groups %s" % (g, orbit, a_groups))
                continue
            a_group = rows[0].a_group
            if a_group == ".":
                if len(rows) != 1 or rows[0].phi != ".":
                    failures.append("%s %s: trivial group must have a single '.' row" % (g, orbit))
            else:
                n = _A_GROUP_RANK[a_group]
                from .partitions import partitions_of

                want = ["".join(str(p) for p in mu) for mu in partitions_of(n)]
                got = [r.phi for r in rows]
                if sorted(got) != sorted(want):
                    failures.append("%s %s: characters %s do not cover S_%d" % (g, orbit, got, n))
            if any(r.mult < 0 for r in rows):
                failures.append("%s %s has a negative multiplicity" % (g, orbit))
            trivial = rows[0].mult if a_group == "." else {r.phi: r.mult for r in rows}[str(_A_GROUP_RANK[a_group])]
            if any(r.mult > trivial for r in rows):
                failures.append("%s %s: trivial character is not dominant" % (g, orbit))
        if orbit_euler(g, "A_0") != WEYL_ORDER[g]:
            failures.append("%s zero orbit misses the Weyl group order" % g)
        if orbit_euler(g, REGULAR_ORBIT[g]) != 1:
            failures.append("%s regular orbit should have Euler characteristic 1" % g)
    return failures
