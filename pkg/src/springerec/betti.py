"""Graded multiplicities: Betti tables of Springer fibers, degree by degree.

Type A admits a full graded recursion: with lam = (lam_1 >= ... >= lam_r),

    h^k(lam) = sum_{t=1..r} h^{k-2t+2}(lam with a box removed from row t).

For types B, C, D the graded refinement only holds on a family of labels
classified below; outside it the package refuses rather than guesses.
Writing xi for the smallest part size and d_i for the number of rows longer
than i, the in-scope cases and their recursions (as characters, with the
same generator transport and sgn/tau conventions as the Euler recursion)
are:

  a1  (B/D) xi even, every odd multiplicity <= 1:
      H^k = sum_{i>1 odd, r_i=1} H^{k-2d_i}(h_i)
          + sum_{i even} sum_{j<r_i} H^{k-2d_i-2j}(v_i)
  a2  (B/D) xi odd > 1, other odd multiplicities <= 1, r_xi in {1,2,3}:
      r_xi=1: the a1 formula;
      r_xi=2: a1-type sums over i > xi, plus
          H^{k-2d-2}(h_xi)^tau - sgn_xi H^{k-2d}(h_xi)^tau + (1+sgn_xi) H^{k-2d}(v_xi)
      r_xi=3: a1-type sums over i > xi, plus
          H^{k-2d-4}(h_xi)^tau - H^{k-2d-2}(h_xi)^tau + H^{k-2d-2}(h_xi)
          + H^{k-2d}(v_xi) + H^{k-2d-2}(v_xi)
  a3  (B/D) xi = 1 with r_1 = 1: the a1/a2 formula read at the smallest
      part size above 1.
  a4  (B/D) xi = 1 with r_1 > 1, other odd multiplicities <= 1:
      a1-type sums over i > 1, plus sum_{j<=r_1-2} H^{k-2d_1-2j}(v_1),
      and for even r_1 additionally sgn_1 H^{k-2d_1-r_1+2}(v_1)
  b1/b2 (C): the mirror images of a1/a2 with even and odd exchanged.

Intermediate isotypic coefficients may go negative (the tau terms enter
with signs); final tables are validated to be nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import agroup
from .agroup import IDENTITY
from .errors import InvalidLabel, OutOfScope
from .euler import _cache_limit
from .partitions import (
    OrbitLabel,
    as_partition,
    d_index,
    mults,
    remove_box,
    remove_h,
    remove_v,
    require_valid,
    size,
    xi_min_part,
)


@dataclass
class GradedTable:
    """Per-degree character multiplicities; odd degrees are identically zero."""

    group: str
    parts: tuple
    entries: dict  # even degree -> {character name: multiplicity}, zeros omitted

    def betti_numbers(self) -> dict:
        return {k: sum(v.values()) for k, v in self.entries.items()}

    def mass(self) -> int:
        return sum(sum(v.values()) for v in self.entries.values())

    def max_degree(self) -> int:
        return max(self.entries, default=0)

    def poincare(self) -> list:
        """Total Betti numbers [h^0, h^2, h^4, ...] as coefficients in q."""
        top = self.max_degree()
        nums = self.betti_numbers()
        return [nums.get(2 * k, 0) for k in range(top // 2 + 1)]

    def column_sums(self) -> dict:
        out: dict = {}
        for row in self.entries.values():
            for name, m in row.items():
                out[name] = out.get(name, 0) + m
        return out

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "partition": list(self.parts),
            "degrees": {str(k): dict(sorted(v.items())) for k, v in sorted(self.entries.items())},
        }


# ---------------------------------------------------------------------------
# classification

def _odd_mults_at_most_one(ms, exclude=()) -> bool:
    return all(r <= 1 for i, r in ms.items() if i % 2 == 1 and i not in exclude)


def _even_mults_at_most_one(ms, exclude=()) -> bool:
    return all(r <= 1 for i, r in ms.items() if i % 2 == 0 and i not in exclude)


def _bd_case(lam) -> str:
    if not lam:
        return "a1"
    ms = mults(lam)
    xi = xi_min_part(lam)
    if xi % 2 == 0:
        return "a1" if _odd_mults_at_most_one(ms) else "out_of_scope"
    if xi > 1:
        if ms[xi] in (1, 2, 3) and _odd_mults_at_most_one(ms, exclude=(xi,)):
            return "a2"
        return "out_of_scope"
    if ms[1] == 1:
        sub = _bd_case(remove_box(lam, 1))
        return "a3" if sub in ("a1", "a2") else "out_of_scope"
    return "a4" if _odd_mults_at_most_one(ms, exclude=(1,)) else "out_of_scope"


def _c_case(lam) -> str:
    if not lam:
        return "b1"
    ms = mults(lam)
    xi = xi_min_part(lam)
    if xi % 2 == 1:
        return "b1" if _even_mults_at_most_one(ms) else "out_of_scope"
    if ms[xi] in (1, 2, 3) and _even_mults_at_most_one(ms, exclude=(xi,)):
        return "b2"
    return "out_of_scope"


def classify_bcd(group: str, lam) -> str:
    """Which graded case covers the label, or ``"out_of_scope"``."""
    lam = as_partition(lam)
    if group == "A":
        raise InvalidLabel("classification applies to types B, C, D only")
    require_valid(group, lam)
    return _c_case(lam) if group == "C" else _bd_case(lam)


def _plan(group, lam, case):
    """Resolve a case label to (mode, xi): mode in plain / xi2 / xi3 / ones."""
    ms = mults(lam)
    if case in ("a1", "b1"):
        return "plain", None
    if case in ("a2", "b2"):
        xi = xi_min_part(lam)
        return ("plain", None) if ms[xi] == 1 else ("xi%d" % ms[xi], xi)
    if case == "a3":
        xi = min(p for p in lam if p > 1)
        if xi % 2 == 0 or ms[xi] == 1:
            return "plain", None
        return "xi%d" % ms[xi], xi
    return "ones", None  # a4


# ---------------------------------------------------------------------------
# graded twisted traces

_GCACHE: dict = {}


def clear_cache() -> None:
    _GCACHE.clear()


def _add(out, table, shift, coeff=1):
    for deg, v in table.items():
        out[deg + shift] = out.get(deg + shift, 0) + coeff * v


def _half_sum(a, b) -> dict:
    out = {}
    for deg in set(a) | set(b):
        tot = a.get(deg, 0) + b.get(deg, 0)
        assert tot % 2 == 0
        if tot:
            out[deg] = tot // 2
    return out


def graded_twisted(group, lam, z=IDENTITY) -> dict:
    """Map even degree -> trace of z on that cohomology degree.

    Raises OutOfScope (naming the offending partition) when the label or any
    partition the recursion reaches falls outside the classified family.
    """
    lam = as_partition(lam)
    require_valid(group, lam)
    shape = agroup.shape_of(group, lam)
    z = agroup.require_element(shape, z)
    return _graded(group, lam, z, _cache_limit())


def _graded(group, lam, z, limit):
    key = (group, lam, z)
    hit = _GCACHE.get(key)
    if hit is not None:
        return hit
    val = _graded_compute(group, lam, z, limit)
    if limit is None or len(_GCACHE) < limit:
        _GCACHE[key] = val
    return val


def _graded_compute(group, lam, z, limit):
    if group == "B" and lam == (1,):
        return {0: 1}
    if group == "C" and not lam:
        return {0: 1}
    if group == "D" and size(lam) <= 2:
        return {0: 1}

    case = classify_bcd(group, lam)
    if case == "out_of_scope":
        raise OutOfScope(group, lam)
    mode, xi = _plan(group, lam, case)

    parent = agroup.shape_of(group, lam)
    special_parity = 1 if group in ("B", "D") else 0
    ms = mults(lam)
    out: dict = {}

    def v_table(i):
        child = remove_v(lam, i)
        y = agroup.push_v(parent, agroup.shape_of(group, child), z, i)
        return _graded(group, child, y, limit)

    def h_parts(i):
        child = remove_h(lam, i)
        cshape = agroup.shape_of(group, child)
        y = agroup.push_h(parent, cshape, z, i)
        tau = agroup.tau_element(cshape, i)
        return child, y, tau

    for i in sorted(ms):
        r = ms[i]
        d = 2 * d_index(lam, i)
        if i % 2 != special_parity:
            table = v_table(i)
            for j in range(r):
                _add(out, table, d + 2 * j)
        elif i == 1:
            if mode == "ones":
                table = v_table(1)
                for j in range(r - 1):
                    _add(out, table, d + 2 * j)
                if r % 2 == 0:
                    _add(out, table, d + r - 2, coeff=agroup.sgn(1, z))
            # in the other modes r_1 <= 1 and row 1 contributes nothing
        elif xi is not None and i == xi:
            child, y, tau = h_parts(xi)
            plain = _graded(group, child, y, limit)
            fixed = _half_sum(plain, _graded(group, child, y ^ tau, limit))
            s = agroup.sgn(xi, z)
            if mode == "xi2":
                _add(out, fixed, d + 2)
                _add(out, fixed, d, coeff=-s)
                if 1 + s:
                    _add(out, v_table(xi), d, coeff=1 + s)
            else:  # xi3
                _add(out, fixed, d + 4)
                _add(out, fixed, d + 2, coeff=-1)
                _add(out, plain, d + 2)
                table = v_table(xi)
                _add(out, table, d)
                _add(out, table, d + 2)
        else:
            assert r == 1, "classification should exclude r_%d = %d" % (i, r)
            child, y, _ = h_parts(i)
            _add(out, _graded(group, child, y, limit), d)
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# public tables

def betti_type_a(lam) -> GradedTable:
    """Full graded table for a type-A label (trivial component group)."""
    lam = as_partition(lam)
    table = _graded_a(lam, _cache_limit())
    return GradedTable("A", lam, {deg: {".": v} for deg, v in table.items()})


def _graded_a(lam, limit):
    key = ("A", lam)
    hit = _GCACHE.get(key)
    if hit is not None:
        return hit
    if not lam:
        val = {0: 1}
    else:
        val = {}
        for row, part in enumerate(lam):
            _add(val, _graded_a(remove_box(lam, part), limit), 2 * row)
    if limit is None or len(_GCACHE) < limit:
        _GCACHE[key] = val
    return val


def betti_bcd(group, lam=None, sign=None) -> GradedTable:
    """Graded character table for an in-scope B/C/D label.

    The multiplicity vector at each degree is taken over the special-group
    component group; entries are validated nonnegative integers.
    """
    if isinstance(group, OrbitLabel):
        label = group
    else:
        label = OrbitLabel(group, lam, sign)
    group, lam = label.group, label.parts
    shape = agroup.shape_of(group, lam)
    limit = _cache_limit()
    tables = {zz: _graded(group, lam, zz, limit) for zz in agroup.elements(shape, "A")}
    degrees = sorted(set().union(*tables.values()) if tables else ())
    entries = {}
    for deg in degrees:
        values = {zz: tables[zz].get(deg, 0) for zz in tables}
        vec = agroup.hadamard_multiplicities(shape, values, "A")
        row = {name: m for name, m in vec.items() if m}
        if row:
            entries[deg] = row
    return GradedTable(group, lam, entries)


def graded_table(label: OrbitLabel) -> GradedTable:
    if label.group == "A":
        return betti_type_a(label.parts)
    return betti_bcd(label)


def poincare_polynomial(group, lam=None, sign=None) -> list:
    """Total Betti numbers as coefficients of q (one step of q per degree 2).

    Summing the coefficients (q = 1) gives the Euler characteristic.
    """
    if isinstance(group, OrbitLabel):
        label = group
    else:
        label = OrbitLabel(group, lam, sign)
    if label.group == "A":
        table = _graded_a(label.parts, _cache_limit())
    else:
        table = graded_twisted(label.group, label.parts)
    top = max(table, default=0)
    return [table.get(2 * k, 0) for k in range(top // 2 + 1)]
