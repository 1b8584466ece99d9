"""Symmetric-function arithmetic in the monomial basis, over exact integers.

A symmetric function of homogeneous degree n is stored as a map from
partitions of n to integer coefficients of the monomial symmetric functions
m_mu (zero coefficients omitted).  The inner product is normalized by
<h_lam, m_mu> = delta, so pairing against h_lam is a coefficient lookup.

The point of the module is an independent verification of the type-A
restriction rule: for lam with multiplicities r_i,

    <h_lam, m_mu h_1>  =  r_i   if mu = lam with one box removed in row i,
                          0     otherwise,

equivalently h_lam h_1-pairs the same way as sum_i r_i h_{lam^i}.  The
product by h_1 is implemented twice: via the single-box growth rule

    m_mu h_1 = sum_{r'_i >= 1} (r'_{i+1} + 1) m_{mu with an i -> i+1}
             + (r'_1 + 1) m_{mu plus a new part 1}

and via a generic counting rule for multiplication by any h_k, so the two
routes cross-check each other.
"""

from __future__ import annotations

from math import factorial

from .errors import DegreeMismatch
from .partitions import as_partition, mults, partitions_of, remove_box, size


def degree_of(f: dict) -> int:
    if not f:
        return 0
    degs = {size(mu) for mu in f}
    if len(degs) != 1:
        raise DegreeMismatch("mixed-degree coefficient map: %s" % sorted(degs))
    return degs.pop()


def _clean(f: dict) -> dict:
    return {mu: c for mu, c in f.items() if c}


def _placement_count(mu, nu) -> int:
    """Number of padded rearrangements of mu fitting under nu componentwise.

    Parts of mu are placed injectively on the rows of nu, each part on a row
    at least as long; rearrangements that permute equal parts coincide.
    """
    rows = sorted(nu, reverse=True)
    total = 1
    for t, part in enumerate(sorted(mu, reverse=True)):
        eligible = sum(1 for row in rows if row >= part)
        total *= eligible - t
        if total <= 0:
            return 0
    for r in mults(mu).values():
        total //= factorial(r)
    return total


def mul_hk(f: dict, k: int) -> dict:
    """Product with the complete homogeneous function h_k, in the m-basis."""
    if k == 0:
        return dict(f)
    deg = degree_of(f)
    out: dict = {}
    targets = list(partitions_of(deg + k))
    for mu, c in f.items():
        for nu in targets:
            w = _placement_count(mu, nu)
            if w:
                out[nu] = out.get(nu, 0) + c * w
    return _clean(out)


def h_to_m(lam) -> dict:
    """Expansion of h_lam = prod_t h_{lam_t} in the monomial basis."""
    lam = as_partition(lam)
    f = {(): 1}
    for part in lam:
        f = mul_hk(f, part)
    return f


def mul_h1(f: dict) -> dict:
    """Product with h_1 by the single-box growth rule (see module docstring)."""
    out: dict = {}
    for mu, c in f.items():
        ms = mults(mu)
        for i in ms:
            grown = dict(ms)
            grown[i] -= 1
            grown[i + 1] = grown.get(i + 1, 0) + 1
            nu = _from_mults(grown)
            out[nu] = out.get(nu, 0) + c * grown[i + 1]
        added = dict(ms)
        added[1] = added.get(1, 0) + 1
        nu = _from_mults(added)
        out[nu] = out.get(nu, 0) + c * added[1]
    return _clean(out)


def _from_mults(ms: dict) -> tuple:
    parts = []
    for i, r in ms.items():
        parts.extend([i] * r)
    return tuple(sorted(parts, reverse=True))


def inner_h(lam, f: dict) -> int:
    """<h_lam, f> for f in the m-basis: the coefficient of m_lam."""
    lam = as_partition(lam)
    if f and size(lam) != degree_of(f):
        raise DegreeMismatch(
            "pairing degree %d against degree %d" % (size(lam), degree_of(f))
        )
    return f.get(lam, 0)


def box_removal_pairings(lam) -> dict:
    """Expected pairings: map mu -> r_i whenever mu is lam minus a box at i."""
    out: dict = {}
    for i, r in mults(lam).items():
        out[remove_box(lam, i)] = r
    return out


def verify_h1_pairing(max_n: int) -> dict:
    """Exhaustive check of the restriction pairing up to degree ``max_n``.

    For every lam of size m <= max_n and every mu of size m-1 the value
    <h_lam, m_mu h_1> must equal r_i when mu arises from lam by removing one
    box in a row of length i, and zero otherwise.  Both h_1-product routes
    are compared along the way.  Returns {"max_n", "checked", "failures"}.
    """
    failures = []
    checked = 0
    for m in range(1, max_n + 1):
        lams = list(partitions_of(m))
        mus = list(partitions_of(m - 1))
        products = {}
        for mu in mus:
            via_rule = mul_h1({mu: 1})
            via_count = mul_hk({mu: 1}, 1)
            if via_rule != via_count:
                failures.append("h_1 product routes disagree at m_%s" % (mu,))
            products[mu] = via_rule
        for lam in lams:
            expected = box_removal_pairings(lam)
            for mu in mus:
                checked += 1
                got = inner_h(lam, products[mu])
                want = expected.get(mu, 0)
                if got != want:
                    failures.append(
                        "<h_%s, m_%s h_1> = %d, expected %d" % (lam, mu, got, want)
                    )
    return {"max_n": max_n, "checked": checked, "failures": failures}
