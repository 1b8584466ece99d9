import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_partitions
from oracle_polynomials import h_poly, m_poly, poly_mul, poly_to_m
from springerec import symfunc as sf
from springerec.errors import DegreeMismatch


def test_h_to_m_examples():
    assert sf.h_to_m((1,)) == {(1,): 1}
    assert sf.h_to_m((2,)) == {(2,): 1, (1, 1): 1}
    assert sf.h_to_m((2, 1)) == {(3,): 1, (2, 1): 2, (1, 1, 1): 3}


def test_h_to_m_positive():
    for lam in all_partitions(7):
        assert all(c > 0 for c in sf.h_to_m(lam).values())


def test_mul_h1_examples():
    assert sf.mul_h1({(1,): 1}) == {(2,): 1, (1, 1): 2}
    assert sf.mul_h1({(2,): 1}) == {(3,): 1, (2, 1): 1}
    assert sf.mul_h1({}) == {}


def test_inner_h():
    f = sf.h_to_m((2, 1))
    assert sf.inner_h((2, 1), f) == 2
    assert sf.inner_h((3,), f) == 1
    assert sf.inner_h((2, 1), {(2, 1): 1}) == 1
    assert sf.inner_h((3,), {(2, 1): 1}) == 0
    with pytest.raises(DegreeMismatch):
        sf.inner_h((2,), {(2, 1): 1})


def test_mul_h1_matches_polynomial_oracle():
    for mu in all_partitions(6):
        deg = sum(mu)
        nvars = deg + 1
        got = sf.mul_h1({mu: 1})
        want = poly_to_m(poly_mul(m_poly(mu, nvars), h_poly(1, nvars)), deg + 1, nvars)
        assert got == want, mu


@settings(max_examples=40, deadline=None)
@given(
    st.integers(1, 5).flatmap(
        lambda d: st.sampled_from([mu for mu in all_partitions(d) if sum(mu) == d])
    ),
    st.integers(1, 3),
)
def test_mul_hk_matches_polynomial_oracle(mu, k):
    deg = sum(mu)
    nvars = deg + k
    got = sf.mul_hk({mu: 1}, k)
    want = poly_to_m(poly_mul(m_poly(mu, nvars), h_poly(k, nvars)), deg + k, nvars)
    assert got == want


def test_h_to_m_matches_polynomial_oracle():
    for lam in all_partitions(5):
        if not lam:
            continue
        deg = sum(lam)
        poly = {(0,) * deg: 1} if deg else {}
        nvars = max(deg, 1)
        poly = {(0,) * nvars: 1}
        for part in lam:
            poly = poly_mul(poly, h_poly(part, nvars))
        assert sf.h_to_m(lam) == poly_to_m(poly, deg, nvars)


def test_h_times_h1_is_h_with_extra_one():
    for lam in all_partitions(5):
        grown = tuple(sorted(lam + (1,), reverse=True))
        assert sf.mul_h1(sf.h_to_m(lam)) == sf.h_to_m(grown)


def test_verify_pairing():
    assert sf.verify_h1_pairing(1)["failures"] == []
    report = sf.verify_h1_pairing(5)
    assert report["failures"] == []
    assert report["checked"] > 0
