import itertools

import pytest
from hypothesis import given, strategies as st

from cluster_demazure.exactalg import LaurentMono, LaurentPoly, Var, substitute, torus, y
from cluster_demazure.group import (SymbolicMatrix, coweight_diag, elem_lower, elem_upper,
                                    generalized_minor, generalized_minor_lift, lift,
                                    closed_form_backward, reduced_word, seed_weyl_element,
                                    simple_reflection_rep, torus_diag, twist_map, xbar, xg_product)
from cluster_demazure.roots import WeylElement, cartan, cxx_word, letter

P = LaurentPoly.from_text
ONE, ZERO = LaurentPoly.const(1), LaurentPoly.zero()


def entries(M):
    return [[M.entry(i, j) for j in range(1, M.dim + 1)] for i in range(1, M.dim + 1)]


def test_elementary_matrices():
    t = y(1, 1)
    assert entries(elem_upper(1, t, 3)) == [[ONE, P("Y[1,1]"), ZERO], [ZERO, ONE, ZERO],
                                          [ZERO, ZERO, ONE]]
    assert elem_lower(2, t, 3).entry(3, 2) == P("Y[1,1]")
    with pytest.raises(ValueError):
        elem_upper(3, t, 3)


def test_simple_reflection_block():
    # [DERIVED] x(-1) y(1) x(-1) = [[0, -1], [1, 0]]
    s = simple_reflection_rep(2, 4)
    assert entries(s)[1][1:3] == [ZERO, -ONE] and entries(s)[2][1:3] == [ONE, ZERO]
    assert s.entry(1, 1) == s.entry(4, 4) == ONE


@pytest.mark.parametrize("i,j", [(i, j) for i in range(1, 5) for j in range(1, 5)])
def test_coweight_conjugation(i, j):
    # alpha_i^vee(t) x_j(u) alpha_i^vee(t)^-1 = x_j(t^{a_ij} u)
    n = 5
    t, u = y(0, 1), y(0, 2)
    h = coweight_diag(i, t, n)
    lhs = h * elem_upper(j, u, n) * h.inverse_diag()
    assert lhs == elem_upper(j, t ** cartan(4)[i - 1][j - 1] * u, n)


def test_twist_map_examples():
    # [DERIVED] odd columns of Phi_2 invert Y[2,l]; interior even columns of Phi_1
    tw = twist_map(4)
    assert tw.forward[Var.y(2, 3)] == y(2, 3).inverse()
    assert tw.forward[Var.y(1, 2)] == (y(1, 1) * y(2, 1) * y(1, 3) * y(2, 3)
                                       / (y(1, 2) * y(2, 2) ** 2))
    # Y[s,0] and Y[s,r+1] collapse to 1
    assert tw.forward[Var.y(2, 4)] == y(2, 3) / y(2, 4)


@pytest.mark.parametrize("r", range(3, 9))
def test_twist_map_round_trip(r):
    tw = twist_map(r)
    for v in tw.forward:
        mono = LaurentPoly.monomial(tw.forward[v])
        assert substitute(mono, tw.backward) == LaurentPoly.monomial(LaurentMono({v: 1}))


@pytest.mark.parametrize("r", [5, 6, 7, 8])
def test_closed_form_inverse_agrees_in_the_interior(r):
    tw, pb = twist_map(r), closed_form_backward(r)
    for l in range(3, r - 1):
        for s in (1, 2):
            assert pb[Var.y(s, l)] == tw.backward[Var.y(s, l)], (s, l)
    # second-row formula holds on every column
    for l in range(1, r + 1):
        assert pb[Var.y(2, l)] == tw.backward[Var.y(2, l)]


@pytest.mark.parametrize("r", range(3, 7))
def test_det_xbar_is_torus_product(r):
    X = xbar(r)
    expect = LaurentPoly.monomial(torus(1))
    for m in range(2, r + 2):
        expect = expect * LaurentPoly.monomial(torus(m))
    assert X.minor(range(1, r + 2), range(1, r + 2)) == expect
    assert xg_product(r).minor(range(1, r + 2), range(1, r + 2)) == expect


def test_xbar_r3_minors():
    # [EXAMPLE] D_{1,2} and D_{123,124} composed with xbar at r = 3
    X = xbar(3)
    assert X.minor((1,), (2,)) == P("a[1]*Y[1,1] + a[1]*Y[2,2]*Y[2,1]^-1")
    assert X.minor((1, 2, 3), (1, 2, 4)) == P("a[1]*a[2]*a[3]*Y[1,3] + a[1]*a[2]*a[3]*Y[2,2]*Y[2,3]^-1")


def test_column_minors_match_lift_definition():
    X = xbar(3)
    for perm in itertools.permutations(range(1, 5)):
        w = WeylElement(perm)
        for i in (1, 2, 3):
            assert generalized_minor(X, i, w) == generalized_minor_lift(X, i, w)


@given(st.lists(st.integers(1, 4), max_size=10))
def test_reduced_word_round_trip(word):
    w = WeylElement.from_word(word, 4)
    rw = reduced_word(w)
    assert len(rw) == w.length()
    assert WeylElement.from_word(rw, 4) == w
    # the lift is a signed permutation matrix of w
    L = lift(w)
    for x in range(1, 6):
        assert L.entry(w(x), x) in (ONE, -ONE)


def test_seed_weyl_element():
    r = 4
    word = cxx_word(r)
    assert seed_weyl_element(r, 1) == WeylElement.from_word((letter(word, 1),), r)
    assert seed_weyl_element(r, 2 * r) == WeylElement.from_word(tuple(reversed(word)), r)


def test_matrix_helpers():
    d = torus_diag([torus(1), torus(2)])
    assert d.is_unit_monomial_diag()
    assert (d * d.inverse_diag()) == SymbolicMatrix.identity(2)
    with pytest.raises(ValueError):
        d.minor((1, 2), (1,))
