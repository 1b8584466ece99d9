"""Closed-form graded multiplicities for two-row orbits.

Parameters are (i, j) with i >= j; the orbit partitions are (i, j) for
types A, C, D and (i, j, 1) for type B.  Admissibility mirrors the parity
rules: B and D need i, j odd unless i = j; C needs i, j even unless i = j.
All formulas use binomial coefficients with out-of-range lower index equal
to zero, and every value is an exact nonnegative integer.

GL(i, j):        h^{2k} = C(i+j, k) - C(i+j, k-1)            for 0 <= k <= j.

SO_{2n+1}(i, j, 1):  degrees are gated by 0 <= 2k <= j+2.  The component
group contributes up to four isotypic slots (++, +-, -+, --), labelled by
the values of a character on z_i z_j and on z_j z_1:

    h_{++} = C((i+j)/2, k)
    h_{+-} = C((i+j)/2, k-2)          (only when i > j > 1 or i = j odd)
    h_{-+} = [2k = j+1] * (i-j)/(i+j+2) * C((i+j+2)/2, (j+1)/2)
             (for j = 1 this degenerates to (i-1)/2 at degree 2)
    h_{--} = 0

For the even squares i = j the component group is trivial and the graded
recursion determines the table as two shifted copies of the full table of
(i-1, i-1, 1); the naive C(i, k) only survives for i = 2.

Sp(i, j):  after the quotient by the image of the central -1 there are at
most two characters Id and sgn:

    h_Id  = C(fl((i+1)/2) + fl((j+1)/2), k)       for 0 <= 2k <= j
          = half of that                           at 2k = j+1 (j odd)
    h_sgn = C((i+j)/2, k-1)  for 0 <= 2k <= j, when i, j are both even > 0

SO_{2n}(i, j):   h^{2k} = C((i+j)/2, k) for 0 <= 2k <= j-1 and half of that
at 2k = j; the component-group action on cohomology is trivial.
"""

from __future__ import annotations

from math import comb

from . import agroup
from .errors import InvalidLabel, NonIntegralMultiplicity
from .partitions import OrbitLabel


def _check(cond, msg):
    if not cond:
        raise InvalidLabel(msg)


def gl_admissible(i, j) -> bool:
    return i >= j >= 0 and i >= 1


def b_admissible(i, j) -> bool:
    return i >= j >= 1 and (i == j or (i % 2 == 1 and j % 2 == 1))


def c_admissible(i, j) -> bool:
    return i >= j >= 0 and i >= 1 and (i == j or (i % 2 == 0 and j % 2 == 0))


def d_admissible(i, j) -> bool:
    return i >= j >= 1 and (i == j or (i % 2 == 1 and j % 2 == 1))


def two_row_label(group, i, j) -> OrbitLabel:
    """The orbit label behind the (i, j) parameters; validates admissibility."""
    ok = {"A": gl_admissible, "B": b_admissible, "C": c_admissible, "D": d_admissible}
    _check(group in ok, "unknown group type %r" % (group,))
    _check(ok[group](i, j), "(%d, %d) is not an admissible type-%s two-row shape" % (i, j, group))
    parts = [p for p in (i, j) if p > 0]
    if group == "B":
        parts.append(1)
    return OrbitLabel(group, tuple(parts))


def gl_two_row(i, j, k) -> int:
    _check(gl_admissible(i, j), "(%d, %d) is not admissible for GL" % (i, j))
    if not 0 <= k <= j:
        return 0
    return comb(i + j, k) - comb(i + j, k - 1) if k >= 1 else comb(i + j, 0)


def b_two_row(i, j, k) -> tuple:
    """(h_{++}, h_{+-}, h_{-+}, h_{--}) at degree 2k for the orbit (i, j, 1)."""
    _check(b_admissible(i, j), "(%d, %d) is not admissible for SO(odd)" % (i, j))
    if not 0 <= 2 * k <= j + 2:
        return (0, 0, 0, 0)
    if i == j and i % 2 == 0:
        # Even square: the graded recursion gives two shifted copies of the
        # next odd square's full table (both of its isotypic columns), which
        # differs from C(i, k) in middle degrees once i >= 4.  The component
        # group is trivial here, so everything sits in the (+,+) slot.
        m = i - 1

        def child(kk):
            if 0 <= 2 * kk <= m + 2:
                return comb(m, kk) + (comb(m, kk - 2) if kk >= 2 else 0)
            return 0

        return (child(k) + child(k - 1), 0, 0, 0)
    s = (i + j) // 2
    pp = comb(s, k)
    if i > j > 1 or (i == j and i % 2 == 1 and i > 1):
        pm = comb(s, k - 2) if k >= 2 else 0
    else:
        pm = 0  # the (+,-) slot does not exist for j = 1 or even i = j
    mp = 0
    if i > j and 2 * k == j + 1:
        num = (i - j) * comb((i + j + 2) // 2, (j + 1) // 2)
        if num % (i + j + 2) != 0:
            raise NonIntegralMultiplicity("degree-%d twisted slot of (%d,%d,1)" % (2 * k, i, j))
        mp = num // (i + j + 2)
    return (pp, pm, mp, 0)


def c_two_row(i, j, k) -> tuple:
    """(h_Id, h_sgn) at degree 2k for the Sp orbit (i, j)."""
    _check(c_admissible(i, j), "(%d, %d) is not admissible for Sp" % (i, j))
    m = (i + 1) // 2 + (j + 1) // 2
    if 0 <= 2 * k <= j:
        h_id = comb(m, k)
    elif 2 * k == j + 1:
        val = comb(m, k)
        if val % 2 != 0:
            raise NonIntegralMultiplicity("half-binomial at top degree of (%d,%d)" % (i, j))
        h_id = val // 2
    else:
        h_id = 0
    h_sgn = 0
    if i % 2 == 0 and j % 2 == 0 and j > 0 and 0 <= 2 * k <= j and k >= 1:
        h_sgn = comb((i + j) // 2, k - 1)
    return (h_id, h_sgn)


def d_two_row(i, j, k) -> int:
    """Betti number at degree 2k for the SO(even) orbit (i, j)."""
    _check(d_admissible(i, j), "(%d, %d) is not admissible for SO(even)" % (i, j))
    s = (i + j) // 2
    if 0 <= 2 * k <= j - 1:
        return comb(s, k)
    if 2 * k == j:
        val = comb(s, k)
        if val % 2 != 0:
            raise NonIntegralMultiplicity("half-binomial at top degree of (%d,%d)" % (i, j))
        return val // 2
    return 0


def degree_bound(group, i, j) -> int:
    """Largest degree 2k the closed forms can populate."""
    return {"A": 2 * j, "B": j + 2, "C": j + 1, "D": j}[group]


def character_slots(group, i, j) -> list:
    """Slot names paired with the component-group character they refine.

    The second entry of each pair is the character's name over the label's
    special-group component group, enabling exact comparison against the
    graded recursions.  Slots that are identically zero map to None.
    """
    label = two_row_label(group, i, j)
    shape = agroup.shape_of(group, label.parts)
    chars = {agroup.char_name(s): s for s in agroup.characters(shape, "A")}

    def named(pairs):
        # pairs: slot -> {generator element: sign}; pick the A-character matching
        out = []
        for slot, constraints in pairs:
            match = None
            for name, signs in chars.items():
                if all(
                    agroup.char_value(shape, signs, frozenset(elem)) == want
                    for elem, want in constraints.items()
                ):
                    match = name
                    break
            out.append((slot, match))
        return out

    if group == "A":
        return [("h", ".")]
    if group == "D":
        return [("h", agroup.char_name(next(iter(chars.values()))) if len(chars) == 1 else "++")]
    if group == "C":
        if i % 2 == 0 and j % 2 == 0 and j > 0:
            if i == j:
                return named([("Id", {(i,): 1}), ("sgn", {(i,): -1})])
            return named([("Id", {(j,): 1, (i,): 1}), ("sgn", {(j,): -1, (i,): -1})])
        return [("Id", agroup.char_name(next(iter(chars.values()))))]
    # group B, partition (i, j, 1)
    if i > j > 1:
        return named(
            [
                ("++", {(i, j): 1, (j, 1): 1}),
                ("+-", {(i, j): 1, (j, 1): -1}),
                ("-+", {(i, j): -1, (j, 1): 1}),
                ("--", {(i, j): -1, (j, 1): -1}),
            ]
        )
    if i == j and i % 2 == 1 and i > 1:
        return named([("++", {(i, 1): 1}), ("+-", {(i, 1): -1})])
    if i > 1 and j == 1:
        return named([("++", {(i, 1): 1}), ("-+", {(i, 1): -1})])
    # i = j even, or i = j = 1: trivial special-group component group
    return [("++", agroup.char_name(next(iter(chars.values()))))]


def closed_table(group, i, j) -> dict:
    """Map degree 2k -> {slot name: value} over the gated degree range."""
    label = two_row_label(group, i, j)
    del label
    out = {}
    for k in range(degree_bound(group, i, j) // 2 + 1):
        if group == "A":
            row = {"h": gl_two_row(i, j, k)}
        elif group == "B":
            pp, pm, mp, mm = b_two_row(i, j, k)
            row = {"++": pp, "+-": pm, "-+": mp, "--": mm}
        elif group == "C":
            h_id, h_sgn = c_two_row(i, j, k)
            row = {"Id": h_id, "sgn": h_sgn}
        else:
            row = {"h": d_two_row(i, j, k)}
        if any(row.values()):
            out[2 * k] = row
    return out
