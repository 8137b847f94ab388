import pytest
from hypothesis import given, strategies as st

from cluster_demazure.roots import (AlmostPositiveRoot, IndexOutOfRange, InvalidCaseParams,
                                    RankTooSmall, Weight, WeylElement, almost_positive_roots,
                                    cartan, case_ranges, check_case_params, coxeter_inverse_word,
                                    cxx_word, cyclic_sequence, demazure_word, fundamental, half,
                                    half_up, is_reduced, letter, simple_root, suffix)

ranks = st.integers(3, 12)
FAMILIES = ("1a", "1b", "2a", "2b", "3a", "3b", "3-odd-r")


def W(word, r):
    return WeylElement.from_word(word, r)


def test_cxx_word_examples():
    # [EXAMPLE] i = (2,1,3,2,1,3) for r = 3
    assert cxx_word(3) == (2, 1, 3, 2, 1, 3)
    # [TRIVIAL] evens then odds, twice
    assert cxx_word(4) == (2, 4, 1, 3, 2, 4, 1, 3)
    assert cyclic_sequence(7) == (2, 4, 6, 1, 3, 5, 7)
    with pytest.raises(RankTooSmall):
        cxx_word(2)


def test_letter_counts_from_right():
    w = cxx_word(3)
    assert [letter(w, k) for k in range(1, 7)] == [3, 1, 2, 3, 1, 2]
    with pytest.raises(IndexOutOfRange):
        letter(w, 7)
    with pytest.raises(IndexOutOfRange):
        letter(w, 0)


def test_coxeter_inverse_columns():
    # [EXAMPLE] Delta_{L_i, c^-1 L_i} are D_{1,2}, D_{12,24}, D_{123,124} at r = 3
    c_inv = W(coxeter_inverse_word(3), 3)
    assert [c_inv.image(range(1, i + 1)) for i in (1, 2, 3)] == [[2], [2, 4], [1, 2, 4]]
    c = W(cyclic_sequence(3), 3)
    assert c * c_inv == WeylElement.identity(3)


def test_weights():
    assert fundamental(2, 4) == Weight([0, 1, 0, 0])
    assert fundamental(0, 4) == Weight([0] * 4) == fundamental(5, 4)
    assert simple_root(1, 3) == Weight([2, -1, 0])
    assert simple_root(4, 3) == Weight([0, 0, 0])
    assert half(7) == 3 and half_up(7) == 4 and half(6) == half_up(6) == 3


@given(ranks)
def test_simple_roots_are_cartan_columns(r):
    A = cartan(r)
    for i in range(1, r + 1):
        assert list(simple_root(i, r)) == [A[j][i - 1] for j in range(r)]
        assert simple_root(i, r).pairing(i) == 2


@given(ranks)
def test_cxx_word_is_reduced(r):
    assert is_reduced(cxx_word(r), r)
    assert W(cxx_word(r), r).length() == 2 * r
    assert not is_reduced((1, 1), r)


@given(ranks, st.data())
def test_suffix_lengths_and_factorization(r, data):
    word = cxx_word(r)
    n = len(word)
    k = data.draw(st.integers(0, n))
    v = suffix(word, k, r)
    assert v.length() == n - k
    assert suffix(word, n, r) == WeylElement.identity(r)
    if k < n:
        # v_{>k} = v_{>k+1} s_{j_{n-k}}
        assert v == suffix(word, k + 1, r) * W((letter(word, n - k),), r)


@given(ranks, st.lists(st.integers(1, 12), max_size=8), st.lists(st.integers(1, 12), max_size=8))
def test_weyl_words_multiply(r, a, b):
    a = [x for x in a if x <= r]
    b = [x for x in b if x <= r]
    wa, wb = W(a, r), W(b, r)
    assert W(a + b, r) == wa * wb
    assert wa * wa.inverse() == WeylElement.identity(r)
    assert wa.length() <= len(a)
    assert wa.length() % 2 == len(a) % 2


def test_weyl_letter_out_of_range():
    with pytest.raises(ValueError):
        W((4,), 3)


@pytest.mark.parametrize("r", range(3, 9))
def test_demazure_words_are_reduced(r):
    for case in FAMILIES:
        ks, ls = case_ranges(case, r)
        for k in ks:
            for l in ls[k]:
                kk = None if case.startswith("3") else k
                w = demazure_word(case, r, kk, l)
                assert is_reduced(w, r), (case, k, l, w)


def test_demazure_word_examples():
    # [EXAMPLE] r = 10: s6 s8 for case 1a and s3 s4 s6 s8 for case 1b at (k, l) = (6, 2)
    assert W(demazure_word("1a", 10, 6, 2), 10) == W((6, 8), 10)
    assert W(demazure_word("1b", 10, 6, 2), 10) == W((3, 4, 6, 8), 10)
    # [DERIVED] covering q = 1 drops the letter j - 4 = 6 from the 1b word
    assert W(demazure_word("1b", 10, 6, 2, b=(1,), c=(1,)), 10) == W((3, 4, 8), 10)


def test_case_ranges():
    assert case_ranges("1a", 10) == ([6, 7, 8, 9], {6: [0, 1, 2, 3], 7: [0, 1, 2], 8: [0, 1], 9: [0]})
    assert case_ranges("2a", 4) == ([], {})
    assert case_ranges("2b", 7) == ([1, 2], {1: [0, 1], 2: [0]})
    assert case_ranges("3a", 8) == ([0], {0: [0, 1, 2]})
    assert case_ranges("3-odd-r", 6) == ([], {})
    assert case_ranges("3-odd-r", 7) == ([0], {0: [0]})


def test_check_case_params():
    check_case_params("1a", 10, 6, 2)
    check_case_params("3a", 8, None, 2)
    check_case_params("3-odd-r", 5, None, None)
    for case, r, k, l in [("1a", 10, 6, 4), ("1a", 10, 5, 0), ("2a", 4, 1, 0),
                          ("3a", 8, 2, 0), ("3-odd-r", 6, None, None), ("9z", 5, 1, 0)]:
        with pytest.raises(InvalidCaseParams):
            check_case_params(case, r, k, l)
    with pytest.raises(RankTooSmall):
        check_case_params("1a", 2, 1, 0)


@given(st.integers(1, 12))
def test_almost_positive_roots(r):
    roots = almost_positive_roots(r)
    assert len(roots) == r * (r + 3) // 2
    assert len(set(roots)) == len(roots)
    for a in roots:
        w = a.weight(r)
        if a.negative:
            assert w == -simple_root(a.a, r)
    assert str(AlmostPositiveRoot.interval(1, 3)) == "a1+a2+a3"
    assert str(AlmostPositiveRoot.neg_simple(2)) == "-a2"
