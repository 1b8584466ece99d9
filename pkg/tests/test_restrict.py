import json

import pytest
from hypothesis import given

from conftest import bcd_label_strategy
from springerec import agroup, restrict
from springerec.errors import RankTooSmall
from springerec.euler import twisted_euler
from springerec.partitions import OrbitLabel, size


def _targets(fsum):
    return [(t.removal, t.target.parts, t.target.sign) for t in fsum.terms]


def test_expand_sp_worked_example():
    fsum = restrict.expand("C", (6, 4, 2))
    assert _targets(fsum) == [
        (("h", 6), (4, 4, 2), None),
        (("h", 4), (6, 2, 2), None),
        (("h", 2), (6, 4), None),
    ]
    assert all(t.coeff_const == 1 and not t.coeff_sgn for t in fsum.terms)
    assert (
        restrict.render_text(fsum)
        == "TSp(6,4,2)|W' = TSp(4,4,2) + TSp(6,2,2) + TSp(6,4)"
    )


def test_expand_type_a():
    fsum = restrict.expand("A", (2, 1))
    assert _targets(fsum) == [(("box", 2), (1, 1), None), (("box", 1), (2,), None)]
    assert [t.coeff_const for t in fsum.terms] == [1, 1]


def test_expand_very_even():
    fsum = restrict.expand("D", (2, 2))
    assert _targets(fsum) == [(("v", 2), (1, 1), None)]
    assert fsum.terms[0].coeff_const == 2


def test_expand_very_even_child_pair():
    fsum = restrict.expand("D", (3, 3))
    kinds = {(t.removal, t.target.sign, t.pair, t.tau_fixed) for t in fsum.terms}
    assert (("h", 3), None, False, True) in kinds
    assert (("v", 3), "+", True, False) in kinds
    assert (("v", 3), "-", True, False) in kinds
    # at the identity the pair contributes both orbits once, the tau term nothing
    assert restrict.evaluate_at_identity(fsum) == 4
    assert restrict.evaluate_at_identity(fsum, frozenset({3})) == 2


def test_expand_sgn_coefficients():
    fsum = restrict.expand("B", (3, 3, 1))
    by_removal = {t.removal: t for t in fsum.terms}
    h = by_removal[("h", 3)]
    assert h.tau_fixed and h.coeff_const == 1 and h.coeff_sgn_dict == {3: -1}
    v = by_removal[("v", 3)]
    assert not v.tau_fixed and v.coeff_const == 1 and v.coeff_sgn_dict == {3: 1}
    # a bottom row of even multiplicity picks up the (r_1 - 1 + sgn_1) factor
    one = {t.removal: t for t in restrict.expand("B", (3, 1, 1)).terms}[("v", 1)]
    assert one.coeff_const == 1 and one.coeff_sgn_dict == {1: 1}


def test_rank_too_small():
    for group, lam in [("B", (1,)), ("C", ()), ("D", (1, 1)), ("A", ())]:
        with pytest.raises(RankTooSmall):
            restrict.expand(group, lam)


def test_evaluate_empty_sum():
    fsum = restrict.FormalSum("C", (2,), [])
    assert restrict.evaluate_at_identity(fsum) == 0


def test_no_duplicate_terms():
    fsum = restrict.expand("B", (5, 3, 3, 1, 1))
    keys = [(t.target, t.removal, t.tau_fixed) for t in fsum.terms]
    assert len(keys) == len(set(keys))


def test_coefficient_sum_type_a():
    # coefficients sum to the number of box choices counted with multiplicity
    lam = (4, 2, 2, 1)
    fsum = restrict.expand("A", lam)
    assert sum(t.coeff_const for t in fsum.terms) == len(lam)


def test_json_rendering_roundtrip():
    fsum = restrict.expand("D", (3, 3))
    blob = json.dumps(restrict.to_json(fsum))
    data = json.loads(blob)
    assert data["group"] == "D" and data["partition"] == [3, 3]
    assert len(data["terms"]) == len(fsum.terms)
    for term, raw in zip(fsum.terms, data["terms"]):
        assert raw["removal"] == {"kind": term.removal[0], "part": term.removal[1]}
        assert raw["tau_fixed"] == term.tau_fixed
        assert raw["pair"] == term.pair


@given(bcd_label_strategy(10))
def test_roundtrip_small(label):
    group, lam = label
    try:
        fsum = restrict.expand(group, lam)
    except RankTooSmall:
        return
    shape = agroup.shape_of(group, lam)
    for z in agroup.elements(shape, "Atilde"):
        assert restrict.evaluate_at_identity(fsum, z) == twisted_euler(group, lam, z)


def test_roundtrip_type_a():
    for lam in [(3, 1), (2, 2, 1), (4, 3, 1, 1)]:
        fsum = restrict.expand("A", lam)
        assert restrict.evaluate_at_identity(fsum) == twisted_euler("A", lam)


def test_all_h_targets_valid():
    fsum = restrict.expand("B", (5, 3, 3, 1, 1))
    for t in fsum.terms:
        OrbitLabel(t.target.group, t.target.parts, t.target.sign)  # revalidates
        assert size(t.target.parts) == size((5, 3, 3, 1, 1)) - 2
