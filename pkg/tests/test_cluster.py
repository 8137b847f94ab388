import json

import pytest
from hypothesis import given, strategies as st

from cluster_demazure.cluster import (BudgetExceeded, Seed, build_btilde, build_initial_seed,
                                      enumerate_cluster_variables, exchange_numerator, explore,
                                      mutate, mutate_path, quiver_mutate, quiver_of, seed_labels)
from cluster_demazure.roots import RankTooSmall

SEEDS = {r: build_initial_seed(r) for r in range(3, 7)}
# [DERIVED] clusters of type A_r are counted by the Catalan number C_{r+1}
CATALAN = {3: 14, 4: 42, 5: 132, 6: 429}


def paths(r, max_size=6):
    return st.lists(st.integers(1, r), max_size=max_size)


def test_seed_labels():
    assert seed_labels(3) == [1, 2, 3, 4, 5, 6, -1, -2, -3]
    with pytest.raises(RankTooSmall):
        build_btilde(2)


@pytest.mark.parametrize("r", range(3, 7))
def test_initial_matrix_shape(r):
    mat = SEEDS[r].matrix
    assert mat.mutable == tuple(range(1, r + 1))
    B = mat.principal()
    assert all(B[i][j] == -B[j][i] for i in range(r) for j in range(r))
    assert mat.max_abs() <= 1
    # the negated orientation carries the same variables
    neg = build_initial_seed(r, orientation=-1)
    assert neg.matrix == mat.negate()
    assert neg.vars == SEEDS[r].vars


@pytest.mark.parametrize("r", range(3, 7))
def test_catalan_many_seeds(r):
    ex = explore(SEEDS[r])
    assert len(ex.seeds) == CATALAN[r]
    assert len(ex.variables) == r * (r + 3) // 2


def test_negated_orientation_gives_same_variables():
    for r in (3, 4, 5):
        assert (enumerate_cluster_variables(build_initial_seed(r, orientation=-1))
                == enumerate_cluster_variables(SEEDS[r]))


@given(st.integers(3, 6).flatmap(lambda r: st.tuples(st.just(r), paths(r))))
def test_mutation_properties(rp):
    r, path = rp
    s = mutate_path(SEEDS[r], path)
    frozen = [l for l in s.matrix.labels if not s.matrix.is_mutable(l)]
    assert all(s.var(l) == SEEDS[r].var(l) for l in frozen)
    for k in s.matrix.mutable:
        t = mutate(s, k)
        # exchange relation x_k x_k' = numerator
        assert t.var(k) * s.var(k) == exchange_numerator(s, k)
        assert mutate(t, k) == s
        assert quiver_mutate(quiver_of(s), k) == quiver_of(t)
        # positivity of coefficients
        assert all(c > 0 for c, _ in t.var(k).terms())


def test_mutation_rejects_frozen():
    with pytest.raises(ValueError):
        mutate(SEEDS[3], 4)
    with pytest.raises(ValueError):
        mutate(SEEDS[3], -1)


def test_budget():
    with pytest.raises(BudgetExceeded):
        explore(SEEDS[4], budget=5)


def test_seed_json_and_equality():
    s = mutate_path(SEEDS[3], [1, 2])
    obj = json.loads(s.to_json())
    assert obj["r"] == 3 and obj["labels"] == seed_labels(3)
    assert obj["vars"]["1"] == s.var(1).to_text()
    assert s == mutate_path(SEEDS[3], [1, 2])
    assert s != SEEDS[3]
    assert isinstance(hash(s), int) and isinstance(s, Seed)


def test_quiver_dot():
    dot = quiver_of(SEEDS[3]).to_dot()
    assert dot.startswith("digraph quiver {") and dot.rstrip().endswith("}")
    assert '"1" [label="1", shape=circle];' in dot
    assert '"4" [label="4", shape=box];' in dot
