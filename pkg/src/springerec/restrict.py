"""Symbolic one-step restriction of total Springer characters.

``expand`` writes the restriction of TSp(lam) to the next-lower classical
group as a formal sum of child characters TSp(mu), one term per removal,
with coefficients that are affine in the sgn_i characters of the component
group.  ``evaluate_at_identity`` specializes a formal sum at the identity
Weyl element and an arbitrary component-group element z; by construction it
reproduces ``twisted_euler`` on the parent label.

Type-D bookkeeping: when a vertical removal produces a very even child the
two orbits over that partition enter as an explicit +/- pair of terms.  A
pair term contributes only when sgn_e(z) = +1 (the element z_e swaps the two
summands, killing the trace), which is recorded by the ``pair`` flag rather
than by a half-integral coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import agroup
from .agroup import IDENTITY
from .errors import RankTooSmall
from .euler import twisted_euler
from .partitions import (
    OrbitLabel,
    format_partition,
    is_very_even,
    mults,
    remove_box,
    remove_h,
    remove_v,
    size,
)


@dataclass(frozen=True)
class FormalTerm:
    target: OrbitLabel
    removal: tuple  # ("box" | "h" | "v", part size)
    coeff_const: int = 0
    coeff_sgn: tuple = ()  # sorted ((part size, integer), ...)
    tau_fixed: bool = False
    pair: bool = False

    @property
    def coeff_sgn_dict(self) -> dict:
        return dict(self.coeff_sgn)

    def coefficient_at(self, parent_shape, z) -> int:
        c = self.coeff_const + sum(w * agroup.sgn(i, z) for i, w in self.coeff_sgn)
        if self.pair:
            c *= (1 + agroup.sgn(self.removal[1], z)) // 2
        return c


@dataclass
class FormalSum:
    group: str
    parts: tuple
    terms: list


_MIN_EXPAND_SIZE = {"A": 1, "B": 3, "C": 2, "D": 4}


def expand(group, lam=None, sign=None) -> FormalSum:
    """One-step restriction of TSp over the given orbit, as a formal sum."""
    if isinstance(group, OrbitLabel):
        label = group
    else:
        label = OrbitLabel(group, lam, sign)
    group, lam = label.group, label.parts
    if size(lam) < _MIN_EXPAND_SIZE[group]:
        raise RankTooSmall("no lower-rank group to restrict %s to" % (label,))

    terms = []
    ms = mults(lam)
    if group == "A":
        for i in sorted(ms, reverse=True):
            terms.append(
                FormalTerm(OrbitLabel("A", remove_box(lam, i)), ("box", i), coeff_const=ms[i])
            )
        return FormalSum(group, lam, terms)

    special_parity = 1 if group in ("B", "D") else 0
    very_even_parent = group == "D" and is_very_even("D", lam)
    for i in sorted(ms, reverse=True):
        r = ms[i]
        if i % 2 != special_parity:
            terms.append(
                FormalTerm(OrbitLabel(group, remove_v(lam, i)), ("v", i), coeff_const=r)
            )
            continue
        if very_even_parent:
            continue  # no special-parity parts exist on a very even label
        pair_child = None
        if group == "D" and r >= 2:
            child = remove_v(lam, i)
            if is_very_even("D", child):
                pair_child = child
        if i == 1:
            if r < 2:
                continue
            if pair_child is not None:
                terms.append(FormalTerm(OrbitLabel("D", pair_child, "+"), ("v", 1), 1, pair=True))
                terms.append(FormalTerm(OrbitLabel("D", pair_child, "-"), ("v", 1), 1, pair=True))
            elif r % 2 == 1:
                terms.append(
                    FormalTerm(OrbitLabel(group, remove_v(lam, 1)), ("v", 1), coeff_const=r - 1)
                )
            else:
                terms.append(
                    FormalTerm(
                        OrbitLabel(group, remove_v(lam, 1)),
                        ("v", 1),
                        coeff_const=r - 1,
                        coeff_sgn=((1, 1),),
                    )
                )
            continue
        if r % 2 == 1:
            terms.append(FormalTerm(OrbitLabel(group, remove_h(lam, i)), ("h", i), coeff_const=1))
            if r >= 3:
                terms.append(
                    FormalTerm(OrbitLabel(group, remove_v(lam, i)), ("v", i), coeff_const=r - 1)
                )
        else:
            terms.append(
                FormalTerm(
                    OrbitLabel(group, remove_h(lam, i)),
                    ("h", i),
                    coeff_const=1,
                    coeff_sgn=((i, -1),),
                    tau_fixed=True,
                )
            )
            if pair_child is not None:
                # r = 2 here; the v coefficient (1 + sgn_i) splits across the pair
                terms.append(FormalTerm(OrbitLabel("D", pair_child, "+"), ("v", i), 1, pair=True))
                terms.append(FormalTerm(OrbitLabel("D", pair_child, "-"), ("v", i), 1, pair=True))
            else:
                terms.append(
                    FormalTerm(
                        OrbitLabel(group, remove_v(lam, i)),
                        ("v", i),
                        coeff_const=r - 1,
                        coeff_sgn=((i, 1),),
                    )
                )
    return FormalSum(group, lam, terms)


def evaluate_at_identity(fsum: FormalSum, z=IDENTITY) -> int:
    """Value of the formal sum at the identity Weyl element and at z.

    Equals ``twisted_euler(fsum.group, fsum.parts, z)`` for every z in the
    full component group of the parent label.
    """
    parent = agroup.shape_of(fsum.group, fsum.parts)
    z = agroup.require_element(parent, z)
    total = 0
    for term in fsum.terms:
        c = term.coefficient_at(parent, z)
        if c == 0:
            continue
        kind, i = term.removal
        child = term.target
        cshape = agroup.shape_of_label(child)
        if kind == "box":
            y = IDENTITY
        elif kind == "h":
            y = agroup.push_h(parent, cshape, z, i)
        else:
            y = agroup.push_v(parent, cshape, z, i)
        if term.tau_fixed:
            tau = agroup.tau_element(cshape, i)
            both = twisted_euler(child.group, child.parts, y) + twisted_euler(
                child.group, child.parts, y ^ tau
            )
            num = c * both
            assert num % 2 == 0
            total += num // 2
        else:
            total += c * twisted_euler(child.group, child.parts, y)
    return total


def _coeff_text(term: FormalTerm) -> str:
    if not term.coeff_sgn:
        return "" if term.coeff_const == 1 else "%d*" % term.coeff_const
    bits = [] if term.coeff_const == 0 else [str(term.coeff_const)]
    for i, w in term.coeff_sgn:
        mag = "" if abs(w) == 1 else "%d*" % abs(w)
        bits.append(("+" if w > 0 else "-") if bits else ("" if w > 0 else "-"))
        bits.append("%ssgn_%d" % (mag, i))
    return "(%s)*" % "".join(b if b in "+-" else b for b in bits)


def _target_text(term: FormalTerm) -> str:
    name = "TSp"
    if term.tau_fixed:
        name = "TSp^tau_%d" % term.removal[1]
    body = format_partition(term.target.parts)
    if term.target.sign:
        return "%s(%s; %s)" % (name, body, term.target.sign)
    return "%s(%s)" % (name, body)


def render_text(fsum: FormalSum) -> str:
    lhs = "TSp(%s)|W'" % format_partition(fsum.parts)
    if not fsum.terms:
        return "%s = 0" % lhs
    rhs = " + ".join(_coeff_text(t) + _target_text(t) for t in fsum.terms)
    return "%s = %s" % (lhs, rhs)


def to_json(fsum: FormalSum) -> dict:
    return {
        "group": fsum.group,
        "partition": list(fsum.parts),
        "terms": [
            {
                "target": {
                    "group": t.target.group,
                    "partition": list(t.target.parts),
                    "sign": t.target.sign,
                },
                "removal": {"kind": t.removal[0], "part": t.removal[1]},
                "coeff_const": t.coeff_const,
                "coeff_sgn": {str(i): w for i, w in t.coeff_sgn},
                "tau_fixed": t.tau_fixed,
                "pair": t.pair,
            }
            for t in fsum.terms
        ],
    }
