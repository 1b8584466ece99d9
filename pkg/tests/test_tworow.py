import pytest

from springerec import tworow
from springerec.errors import InvalidLabel
from springerec.verification import suite_tworow


def test_gl_examples():
    assert tworow.gl_two_row(2, 2, 2) == 2
    assert tworow.gl_two_row(7, 0, 0) == 1
    assert tworow.gl_two_row(2, 1, 1) == 2
    assert tworow.gl_two_row(2, 1, 2) == 0


def test_b_examples():
    assert tworow.b_two_row(1, 1, 0) == (1, 0, 0, 0)
    assert tworow.b_two_row(1, 1, 1) == (1, 0, 0, 0)
    assert tworow.b_two_row(3, 1, 1) == (2, 0, 1, 0)
    assert tworow.b_two_row(5, 3, 2) == (6, 1, 2, 0)
    assert tworow.b_two_row(5, 3, 9) == (0, 0, 0, 0)


def test_b_even_square_follows_recursion():
    # the naive binomial table would give 6 in the middle degree; the graded
    # recursion forces 7 (and mass 16)
    assert [tworow.b_two_row(4, 4, k)[0] for k in range(5)] == [1, 4, 7, 4, 0]
    assert sum(tworow.b_two_row(4, 4, k)[0] for k in range(5)) == 16


def test_c_examples():
    assert tworow.c_two_row(2, 2, 1) == (2, 1)
    assert tworow.c_two_row(2, 0, 0) == (1, 0)
    assert tworow.c_two_row(3, 3, 2) == (3, 0)
    assert tworow.c_two_row(4, 2, 5) == (0, 0)


def test_d_examples():
    assert tworow.d_two_row(3, 3, 1) == 3
    assert tworow.d_two_row(1, 1, 0) == 1
    assert tworow.d_two_row(2, 2, 1) == 1
    assert tworow.d_two_row(3, 3, 2) == 0


def test_admissibility_errors():
    with pytest.raises(InvalidLabel):
        tworow.d_two_row(4, 0, 0)  # no one-row type D orbits
    with pytest.raises(InvalidLabel):
        tworow.b_two_row(4, 2, 0)
    with pytest.raises(InvalidLabel):
        tworow.c_two_row(3, 1, 0)
    with pytest.raises(InvalidLabel):
        tworow.two_row_label("C", 1, 2)


def test_labels():
    assert tworow.two_row_label("B", 3, 1).parts == (3, 1, 1)
    assert tworow.two_row_label("C", 4, 0).parts == (4,)
    assert tworow.two_row_label("D", 2, 2).parts == (2, 2)


def test_equivalence_small():
    report = suite_tworow(max_sum=10)
    assert report["failures"] == []
    assert report["checked"] > 0
