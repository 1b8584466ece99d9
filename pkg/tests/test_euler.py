import threading

import pytest
from hypothesis import given

from conftest import all_partitions, bcd_label_strategy, valid_labels
from springerec import agroup, euler
from springerec.errors import InvalidElement, InvalidLabel
from springerec.partitions import OrbitLabel, validate


def test_worked_example():
    assert euler.euler_char("C", (6, 4, 2)) == 142


def test_twisted_examples():
    assert euler.twisted_euler("B", (3, 1, 1), frozenset({1, 3})) == 2
    assert euler.twisted_euler("B", (1,)) == 1
    assert euler.twisted_euler("D", (3, 3)) == 4
    assert euler.twisted_euler("C", (2, 2), frozenset({2})) == 2


def test_euler_char_examples():
    assert euler.euler_char("A", (1, 1, 1, 1)) == 24
    assert euler.euler_char("A", (7,)) == 1
    assert euler.euler_char("B", (5, 3, 1)) == 14
    assert euler.euler_char("B", (1, 1, 1)) == 2
    assert euler.euler_char("D", (1, 1, 1, 1)) == 4  # Weyl group of SO_4


def test_closed_form():
    assert euler.type_a_closed_form((2, 1)) == 3
    assert euler.type_a_closed_form((1,) * 6) == 720
    assert euler.type_a_closed_form((3, 3)) == 20


def test_type_a_oracle():
    for lam in all_partitions(10):
        assert euler.euler_char("A", lam) == euler.type_a_closed_form(lam)


def test_weak_form_matches_twisted_at_identity():
    for group, lam in valid_labels(11):
        assert euler.weak_euler(group, lam) == euler.euler_char(group, lam)


def test_multiplicity_examples():
    assert euler.multiplicities("B", (3, 1, 1), over="A") == {"++": 3, "+-": 1}
    assert euler.multiplicities("C", (2, 2), over="A") == {"+": 3, "-": 1}
    assert euler.multiplicities("A", (4, 2), over="A") == {".": euler.euler_char("A", (4, 2))}
    full = euler.multiplicities("B", (3, 1, 1), over="Atilde")
    assert full == {"++": 3, "+-": 0, "-+": 1, "--": 0}


def test_trace_expansion_worked_example():
    levels = euler.trace_expansion("C", (6, 4, 2))
    assert levels == [
        {(6, 4, 2): 1},
        {(6, 4): 1, (6, 2, 2): 1, (4, 4, 2): 1},
        {(6, 2): 1, (6, 1, 1): 2, (4, 4): 2, (4, 2, 2): 1, (3, 3, 2): 2},
        {(6,): 5, (4, 2): 1, (4, 1, 1): 4, (3, 3): 6, (2, 2, 2): 5},
        {(4,): 14, (2, 2): 18, (2, 1, 1): 14},
        {(2,): 42, (1, 1): 50},
    ]


def test_d_sign_independence():
    plus = OrbitLabel("D", (4, 4, 2, 2), "+")
    minus = OrbitLabel("D", (4, 4, 2, 2), "-")
    assert euler.euler_char(plus) == euler.euler_char(minus)
    assert euler.multiplicities(plus.group, plus.parts) == euler.multiplicities(
        minus.group, minus.parts
    )


def test_invalid_inputs():
    with pytest.raises(InvalidLabel):
        euler.euler_char("C", (3, 1))
    with pytest.raises(InvalidElement):
        euler.twisted_euler("B", (3, 1, 1), frozenset({2}))
    with pytest.raises(InvalidElement):
        euler.twisted_euler("A", (2, 1), frozenset({1}))


@given(bcd_label_strategy(10))
def test_twisted_bound_and_positivity(label):
    group, lam = label
    ec = euler.euler_char(group, lam)
    assert ec > 0
    shape = agroup.shape_of(group, lam)
    for z in agroup.elements(shape, "Atilde"):
        assert abs(euler.twisted_euler(group, lam, z)) <= ec


@given(bcd_label_strategy(10))
def test_negation_class_consistency(label):
    group, lam = label
    shape = agroup.shape_of(group, lam)
    sub = euler.multiplicities(group, lam, over="A")
    full = euler.multiplicities(group, lam, over="Atilde")
    for signs in agroup.characters(shape, "A"):
        name = agroup.char_name(signs)
        if group in ("A", "C") or not shape.gens:
            assert sub[name] == full[name]
        else:
            flipped = agroup.char_name(tuple(-s for s in signs))
            assert sub[name] == full[name] + full[flipped]


def test_minus_identity_invariance_type_b():
    # the central -1 of the odd orthogonal group acts trivially on flags, so
    # twisting by its component-group image never changes the trace
    for group, lam in valid_labels(9, groups=("B",)):
        shape = agroup.shape_of(group, lam)
        zeta = agroup.minus_identity_image(shape, lam)
        for z in agroup.elements(shape, "Atilde"):
            assert euler.twisted_euler(group, lam, z) == euler.twisted_euler(
                group, lam, z ^ zeta
            )


def test_cache_transparency(monkeypatch):
    euler.clear_cache()
    warm = euler.euler_char("C", (6, 4, 2))
    euler.clear_cache()
    monkeypatch.setenv("SPRINGER_CACHE_LIMIT", "0")
    cold = euler.euler_char("C", (6, 4, 2))
    assert euler.cache_size() == 0
    monkeypatch.setenv("SPRINGER_CACHE_LIMIT", "5")
    euler.clear_cache()
    capped = euler.euler_char("C", (6, 4, 2))
    assert euler.cache_size() <= 5
    assert warm == cold == capped == 142
    monkeypatch.delenv("SPRINGER_CACHE_LIMIT")
    euler.clear_cache()


def test_concurrent_queries_agree():
    euler.clear_cache()
    labels = [(g, lam) for g, lam in valid_labels(10) if validate(g, lam)][:40]
    expected = {key: euler.euler_char(*key) for key in labels}
    euler.clear_cache()
    results = {}
    lock = threading.Lock()

    def worker(chunk):
        for key in chunk:
            val = euler.euler_char(*key)
            with lock:
                results[key] = val

    threads = [threading.Thread(target=worker, args=(labels[k::4],)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == expected
