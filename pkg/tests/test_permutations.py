import itertools

import pytest

from tpfact.errors import ValidationError
from tpfact.linalg import det
from tpfact.permutations import (
    Permutation,
    all_permutations,
    is_reduced,
    signed_representative,
    weak_order_leq,
)


def brute_reduced_words(w):
    # oracle: try every generator sequence of length len(w)
    n, target = w.n, w.length()
    found = []
    for seq in itertools.product(range(1, n), repeat=target):
        if Permutation.from_word(n, seq) == w:
            found.append(tuple(seq))
    return sorted(found)


def test_composition_convention():
    # (w1 w2)(i) = w1(w2(i))
    w1 = Permutation((2, 1, 3))
    w2 = Permutation((1, 3, 2))
    prod = w1 * w2
    for i in range(1, 4):
        assert prod(i) == w1(w2(i))
    assert prod.oneline == (2, 3, 1)


def test_simple_swaps_positions():
    s1 = Permutation.simple(3, 1)
    assert s1.oneline == (2, 1, 3)
    w = Permutation((3, 1, 2))
    assert (w * s1).oneline == (1, 3, 2)


def test_from_word_left_to_right():
    w = Permutation.from_word(3, (1, 2, 1))
    assert w == Permutation.longest_element(3)
    assert Permutation.from_word(3, ()) == Permutation.identity(3)


def test_from_string_and_str():
    w = Permutation.from_string("4312")
    assert w.oneline == (4, 3, 1, 2)
    assert str(w) == "4312"
    big = Permutation.from_string("10,1,2,3,4,5,6,7,8,9")
    assert big(1) == 10
    assert str(big) == "10,1,2,3,4,5,6,7,8,9"
    with pytest.raises(ValidationError):
        Permutation.from_string("122")


def test_length_counts_inversions():
    assert Permutation.identity(4).length() == 0
    assert Permutation.longest_element(4).length() == 6
    assert Permutation.from_string("4312").length() == 5
    assert Permutation.from_string("4213").length() == 4


def test_inverse():
    w = Permutation.from_string("4312")
    assert w * w.inverse() == Permutation.identity(4)
    assert w.inverse().oneline == (3, 4, 2, 1)


def test_apply_sorts_image():
    w = Permutation.from_string("4312")
    assert w.apply((1, 2)) == (3, 4)
    assert w.apply(()) == ()


def test_reduced_words_against_brute_force():
    for w in all_permutations(3):
        assert sorted(w.reduced_words()) == brute_reduced_words(w)
    for s in ("4231", "4321"):
        w = Permutation.from_string(s)
        assert sorted(w.reduced_words()) == brute_reduced_words(w)


def test_reduced_word_counts():
    # classic count for the longest element of S_4
    assert len(Permutation.longest_element(4).reduced_words()) == 16
    assert len(Permutation.longest_element(3).reduced_words()) == 2


def test_is_reduced():
    w0 = Permutation.longest_element(3)
    assert is_reduced((1, 2, 1), w0)
    assert is_reduced((2, 1, 2), w0)
    assert not is_reduced((1, 1, 2), w0)
    assert not is_reduced((1, 2), w0)


def test_weak_order():
    w0 = Permutation.longest_element(3)
    for w in all_permutations(3):
        assert weak_order_leq(w, w0)
    a = Permutation.from_string("213")
    b = Permutation.from_string("231")
    assert weak_order_leq(a, b)
    assert not weak_order_leq(b, a)


def test_signed_representative_values():
    u = Permutation.from_string("4312")
    assert signed_representative(u).rows == (
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (0, -1, 0, 0),
        (1, 0, 0, 0),
    )
    vinv = Permutation.from_string("4213").inverse()
    assert signed_representative(vinv).rows == (
        (0, 0, 0, -1),
        (0, -1, 0, 0),
        (1, 0, 0, 0),
        (0, 0, 1, 0),
    )


def test_signed_representative_has_det_one():
    for w in all_permutations(4):
        assert det(signed_representative(w)) == 1


def test_signed_representative_multiplicative_when_lengths_add():
    # bar(w' w'') = bar(w') bar(w'') whenever len(w' w'') = len(w') + len(w'')
    for wp in all_permutations(3):
        for wpp in all_permutations(3):
            prod = wp * wpp
            if prod.length() == wp.length() + wpp.length():
                assert (signed_representative(wp) * signed_representative(wpp)
                        == signed_representative(prod))


def test_all_permutations_count():
    assert len(all_permutations(4)) == 24
    assert all_permutations(1) == [Permutation((1,))]
