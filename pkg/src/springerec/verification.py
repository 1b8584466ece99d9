"""Cross-checking suites wired to the ``verify`` CLI subcommand.

Each suite returns {"suite", "checked", "failures"}; an empty failure list
means the suite passed.  The suites deliberately re-derive values through
independent routes (closed forms, identity-level expansion, symbolic
restriction) and compare exactly.
"""

from __future__ import annotations

from . import agroup, betti, exctables, restrict, symfunc, tworow
from .errors import OutOfScope, RankTooSmall, SpringerError
from .euler import euler_char, multiplicities, twisted_euler, type_a_closed_form, weak_euler
from .partitions import enumerate_orbits, orbit_size, partitions_of, size


def bcd_labels(max_size: int):
    """All valid (group, partition) pairs of types B, C, D up to a total size."""
    for group in ("B", "C", "D"):
        n = 0
        while orbit_size(group, n) <= max_size:
            for lam in enumerate_orbits(group, n):
                yield group, lam
            n += 1


def suite_recursion(max_size: int = 12, type_a_max: int = 10) -> dict:
    failures = []
    checked = 0

    for n in range(type_a_max + 1):
        for lam in partitions_of(n):
            checked += 1
            rec = euler_char("A", lam)
            closed = type_a_closed_form(lam)
            if rec != closed:
                failures.append("type A %s: recursion %d != closed form %d" % (lam, rec, closed))

    for group, lam in bcd_labels(max_size):
        ec = euler_char(group, lam)
        checked += 1
        if ec <= 0:
            failures.append("%s %s: Euler characteristic %d not positive" % (group, lam, ec))
        weak = weak_euler(group, lam)
        if weak != ec:
            failures.append("%s %s: identity expansion %d != recursion %d" % (group, lam, weak, ec))

        shape = agroup.shape_of(group, lam)
        values = {}
        for z in agroup.elements(shape, "Atilde"):
            t = twisted_euler(group, lam, z)
            values[z] = t
            checked += 1
            if abs(t) > ec:
                failures.append("%s %s: |trace at %s| exceeds %d" % (group, lam, sorted(z), ec))

        try:
            full = agroup.hadamard_multiplicities(shape, values, "Atilde")
            sub = multiplicities(group, lam, over="A")
        except SpringerError as exc:
            failures.append("%s %s: %s" % (group, lam, exc))
            continue
        # each subgroup multiplicity is the sum over its negation class
        for signs in agroup.characters(shape, "A"):
            name = agroup.char_name(signs)
            flipped = agroup.char_name(tuple(-s for s in signs)) if shape.gens else name
            expect = full[name] if flipped == name or shape.group in ("A", "C") else full[name] + full[flipped]
            if sub[name] != expect:
                failures.append("%s %s: class sum mismatch at %s" % (group, lam, name))
        checked += 1

        try:
            fsum = restrict.expand(group, lam)
        except RankTooSmall:
            continue
        for z in agroup.elements(shape, "Atilde"):
            checked += 1
            got = restrict.evaluate_at_identity(fsum, z)
            want = values[z]
            if got != want:
                failures.append(
                    "%s %s at %s: expansion evaluates to %d, trace is %d"
                    % (group, lam, sorted(z), got, want)
                )
    return {"suite": "recursion", "checked": checked, "failures": failures}


def graded_in_scope(group, lam):
    """The graded table, or None when the label (or a dependency) escapes."""
    try:
        return betti.betti_bcd(group, lam)
    except OutOfScope:
        return None


def suite_graded(max_size: int = 12, type_a_max: int = 12) -> dict:
    """Sanity of every computable graded table: h^0, parity, mass, columns."""
    failures = []
    checked = 0

    def check(table, group, lam):
        nonlocal checked
        checked += 1
        if any(deg % 2 for deg in table.entries):
            failures.append("%s %s: odd cohomology degree present" % (group, lam))
        bottom = table.entries.get(0, {})
        if sum(bottom.values()) != 1:
            failures.append("%s %s: h^0 != 1" % (group, lam))
        elif "-" in next(iter(bottom)):
            failures.append("%s %s: h^0 is not the trivial character" % (group, lam))
        ec = euler_char(group, lam)
        if table.mass() != ec:
            failures.append("%s %s: graded mass %d != Euler characteristic %d" % (group, lam, table.mass(), ec))
        if group != "A":
            cols = table.column_sums()
            mv = multiplicities(group, lam, over="A")
            for name, m in mv.items():
                if cols.get(name, 0) != m:
                    failures.append("%s %s: column %s sums to %d, multiplicity %d" % (group, lam, name, cols.get(name, 0), m))

    for n in range(type_a_max + 1):
        for lam in partitions_of(n):
            check(betti.betti_type_a(lam), "A", lam)

    for group, lam in bcd_labels(max_size):
        table = graded_in_scope(group, lam)
        if table is not None:
            check(table, group, lam)
    return {"suite": "graded", "checked": checked, "failures": failures}


def _two_row_pairs(group, max_sum):
    admissible = {
        "A": tworow.gl_admissible,
        "B": tworow.b_admissible,
        "C": tworow.c_admissible,
        "D": tworow.d_admissible,
    }[group]
    lo = 0 if group in ("A", "C") else 1
    for i in range(1, max_sum + 1):
        for j in range(lo, i + 1):
            if i + j <= max_sum and admissible(i, j):
                yield i, j


def suite_tworow(max_sum: int = 16) -> dict:
    failures = []
    checked = 0
    for group in ("A", "B", "C", "D"):
        for i, j in _two_row_pairs(group, max_sum):
            label = tworow.two_row_label(group, i, j)
            closed = tworow.closed_table(group, i, j)
            slots = dict(tworow.character_slots(group, i, j))
            if group == "A":
                table = betti.betti_type_a(label.parts)
            else:
                table = betti.betti_bcd(label)
            checked += 1
            for deg in set(closed) | set(table.entries):
                want_row = closed.get(deg, {})
                got_row = dict(table.entries.get(deg, {}))
                seen = set()
                for slot, value in want_row.items():
                    name = slots.get(slot)
                    if name is None:
                        if value:
                            failures.append("%s (%d,%d) deg %d: slot %s should not exist" % (group, i, j, deg, slot))
                        continue
                    seen.add(name)
                    if got_row.get(name, 0) != value:
                        failures.append(
                            "%s (%d,%d) deg %d slot %s: closed %d, recursion %d"
                            % (group, i, j, deg, slot, value, got_row.get(name, 0))
                        )
                for name, value in got_row.items():
                    if name not in seen and value:
                        failures.append("%s (%d,%d) deg %d: unexpected character %s=%d" % (group, i, j, deg, name, value))
            # weighted totals
            ec = euler_char(label.group, label.parts)
            total = sum(sum(r.values()) for r in closed.values())
            if total != ec:
                failures.append("%s (%d,%d): closed form total %d != Euler %d" % (group, i, j, total, ec))
            mv = multiplicities(label.group, label.parts, over="A")
            col = {}
            for row in closed.values():
                for slot, value in row.items():
                    name = slots.get(slot)
                    if name is not None:
                        col[name] = col.get(name, 0) + value
            for name, m in mv.items():
                if col.get(name, 0) != m:
                    failures.append("%s (%d,%d): character %s totals %d, multiplicity %d" % (group, i, j, name, col.get(name, 0), m))
    return {"suite": "tworow", "checked": checked, "failures": failures}


def suite_symfunc(max_n: int = 8) -> dict:
    report = symfunc.verify_h1_pairing(max_n)
    return {"suite": "symfunc", "checked": report["checked"], "failures": report["failures"]}


def suite_exc() -> dict:
    failures = exctables.check_tables()
    spot = [
        ("E7", "A_4+A_1", [("2", 7308), ("11", 4788)]),
        ("F4", "F_4(a_3)", [("4", 42), ("31", 19), ("22", 10), ("211", 1), ("1111", 0)]),
        ("G2", "G_2(a_1)", [("3", 3), ("21", 1), ("111", 0)]),
        ("E6", "A_0", [(".", 51840)]),
    ]
    checked = 5 * 2 + len(spot)
    for group, orbit, rows in spot:
        if exctables.query(group, orbit) != rows:
            failures.append("%s %s rows differ from the source table" % (group, orbit))
    if exctables.orbit_euler("E8", "2A_4") != 907284:
        failures.append("E8 2A_4 Euler characteristic mismatch")
    return {"suite": "exc", "checked": checked, "failures": failures}


SUITES = {
    "recursion": suite_recursion,
    "graded": suite_graded,
    "tworow": suite_tworow,
    "symfunc": suite_symfunc,
    "exc": suite_exc,
}


def run_suite(name: str, max_n: int | None = None) -> dict:
    if name == "recursion":
        return suite_recursion(max_size=max_n or 12)
    if name == "graded":
        return suite_graded(max_size=max_n or 12)
    if name == "tworow":
        return suite_tworow(max_sum=max_n or 16)
    if name == "symfunc":
        return suite_symfunc(max_n=max_n or 8)
    if name == "exc":
        return suite_exc()
    raise ValueError("unknown suite %r" % (name,))
