import random

import pytest
from hypothesis import given, strategies as st

from cluster_demazure.crystal import (CrystalMonomial, DemazureSpec, NotHighestWeight, a_monomial,
                                      crystal_graph_dot, demazure_set, demazure_sum, kashiwara_e,
                                      kashiwara_f, position_set)
from cluster_demazure.exactalg import LaurentMono, Var
from cluster_demazure.roots import Weight, cxx_word, simple_root
from cluster_demazure.verify.checks import crystal_axioms_hold, random_crystal_monomial

M = CrystalMonomial.parse
L = LaurentMono.from_text


def test_position_set_r3():
    # sequence (2, 1, 3): 2 precedes both, 1 precedes 3
    p = position_set(3)
    assert p[(2, 1)] == 1 and p[(1, 2)] == 0 and p[(3, 2)] == 0 and p[(1, 3)] == 1


def test_a_monomial_examples():
    # [DERIVED] A_{s,i} = Y_{s,i} Y_{s+1,i} prod_{j~i} Y_{s+p_{j,i}, j}^{-1}
    assert a_monomial(1, 1, 3) == L("Y[1,1]*Y[2,1]*Y[2,2]^-1")
    assert a_monomial(1, 2, 3) == L("Y[1,2]*Y[2,2]*Y[1,1]^-1*Y[1,3]^-1")
    assert a_monomial(2, 3, 4) == L("Y[2,3]*Y[3,3]*Y[3,2]^-1*Y[3,4]^-1")
    assert a_monomial(1, 0, 3) == LaurentMono.unit() == a_monomial(1, 4, 3)


def test_kashiwara_examples():
    h = M("Y[1,2]", 3)
    assert h.wt == Weight([0, 1, 0])
    assert [h.phi(i) for i in (1, 2, 3)] == [0, 1, 0]
    # [EXAMPLE] f_2 Y_{1,2} = Y_{1,1} Y_{1,3} / Y_{2,2}
    assert kashiwara_f(2, h) == M("Y[1,1]*Y[1,3]*Y[2,2]^-1", 3)
    assert kashiwara_f(1, h) is None
    assert kashiwara_e(2, h) is None
    assert kashiwara_e(2, kashiwara_f(2, h)) == h


# [EXAMPLE] the crystal graph of B(Lambda_2) for A_3
B_L2 = {
    "Y[1,2]": {2: "Y[1,1]*Y[1,3]*Y[2,2]^-1"},
    "Y[1,1]*Y[1,3]*Y[2,2]^-1": {1: "Y[1,3]*Y[2,1]^-1", 3: "Y[1,1]*Y[2,3]^-1"},
    "Y[1,3]*Y[2,1]^-1": {3: "Y[2,1]^-1*Y[2,2]*Y[2,3]^-1"},
    "Y[1,1]*Y[2,3]^-1": {1: "Y[2,1]^-1*Y[2,2]*Y[2,3]^-1"},
    "Y[2,1]^-1*Y[2,2]*Y[2,3]^-1": {2: "Y[3,2]^-1"},
    "Y[3,2]^-1": {},
}


def test_full_crystal_b_lambda2():
    spec = DemazureSpec(M("Y[1,2]", 3), cxx_word(3))
    elems = demazure_set(spec)
    assert {m.mono for m in elems} == {L(t) for t in B_L2}
    for m in elems:
        edges = {i: kashiwara_f(i, m) for i in (1, 2, 3) if kashiwara_f(i, m) is not None}
        assert {i: x.mono for i, x in edges.items()} == \
            {i: L(t) for i, t in B_L2[m.to_text()].items()}


def test_demazure_sets_grow_with_word():
    h = M("Y[1,2]", 3)
    sizes = [len(demazure_set(DemazureSpec(h, w))) for w in [(), (2,), (1, 2), (3, 1, 2)]]
    # [DERIVED] B(L2)_e, _{s2}, _{s1 s2}, _{s3 s1 s2}
    assert sizes == [1, 2, 3, 5]
    assert len(demazure_set(DemazureSpec(h, (3, 2)))) == 3


def test_demazure_rejects_non_highest():
    with pytest.raises(NotHighestWeight):
        demazure_set(DemazureSpec(M("Y[1,1]*Y[2,3]^-1", 3), (1,)))


def test_demazure_sum_and_dot():
    spec = DemazureSpec(M("Y[1,2]", 3), (3, 1, 2))
    assert len(demazure_sum(spec)) == 5
    dot = crystal_graph_dot(spec)
    assert dot.count("->") == 5
    assert '[label="2"]' in dot
    assert spec.describe() == "B(L2)_s3s1s2 @ Y[1,2]"


def test_crystal_monomial_validation():
    with pytest.raises(ValueError):
        M("Y[1,4]", 3)
    with pytest.raises(ValueError):
        CrystalMonomial(LaurentMono({Var.torus(1): 1}), 3)


@st.composite
def crystal_monomials(draw):
    r = draw(st.integers(3, 8))
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    return random_crystal_monomial(rng, r)


@given(crystal_monomials())
def test_crystal_axioms(m):
    assert crystal_axioms_hold(m) == ""


@given(crystal_monomials(), st.integers(1, 8))
def test_string_lengths(m, i):
    if i > m.r:
        return
    # phi_i f_i-steps reach the end of the string, epsilon_i e_i-steps the start
    x = m
    for _ in range(m.phi(i)):
        x = kashiwara_f(i, x)
    assert kashiwara_f(i, x) is None
    assert x.wt == m.wt - simple_root(i, m.r) * m.phi(i)
    x = m
    for _ in range(m.epsilon(i)):
        x = kashiwara_e(i, x)
    assert kashiwara_e(i, x) is None


@given(st.lists(st.integers(1, 4), max_size=6))
def test_demazure_monotone_in_prefix(word):
    h = M("Y[1,2]*Y[1,4]", 4)
    small = demazure_set(DemazureSpec(h, word[1:]))
    big = demazure_set(DemazureSpec(h, word))
    assert small <= big
