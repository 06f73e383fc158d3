import random
from itertools import combinations

import pytest

from chowquot import hypersimplex as hs
from chowquot import trees as tr
from chowquot.acceptance import split_system_trees
from chowquot.errors import NotInternal, TooFewLeaves


def tree(n, splits):
    return tr.tree_from_splits(n, [frozenset(s) for s in splits])


def double_factorial(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def test_vertex_relation_examples():
    star = tr.star_tree(5)
    assert sorted(map(sorted, tr.vertex_relation(star, star.internal[0]))) == [[1], [2], [3], [4], [5]]
    t = tree(4, [{3, 4}])
    blocks = [sorted(map(sorted, tr.vertex_relation(t, v))) for v in t.internal]
    assert [[1], [2], [3, 4]] in blocks
    cat = tree(5, [{4, 5}, {3, 4, 5}])
    mid = [v for v in cat.internal if len(tr.vertex_relation(cat, v)) == 3
           and frozenset({3}) in tr.vertex_relation(cat, v)]
    assert sorted(map(sorted, tr.vertex_relation(cat, mid[0]))) == [[1, 2], [3], [4, 5]]
    with pytest.raises(NotInternal):
        tr.vertex_relation(t, "L1")


def test_decomposition_examples():
    assert tr.tree_to_decomposition(tr.star_tree(5)) == hs.MatroidDecomposition(2, 5, [hs.hypersimplex(2, 5)])
    d = tr.tree_to_decomposition(tree(4, [{3, 4}]))
    assert sorted(sorted(p.vertices) for p in d.pieces) == [
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
        [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    ]
    nontrivial = [t for t in tr.enumerate_trees(4) if len(t.internal) == 2]
    assert len(nontrivial) == 3
    assert len({tr.tree_to_decomposition(t) for t in tr.enumerate_trees(4)}) == 4


def test_inverse_examples():
    star = hs.MatroidDecomposition(2, 6, [hs.hypersimplex(2, 6)])
    assert tr.decomposition_to_tree(star) == tr.star_tree(6)
    t = tree(4, [{3, 4}])
    assert tr.decomposition_to_tree(tr.tree_to_decomposition(t)) == t


def test_enumeration_counts():
    assert [len(tr.enumerate_trees(n)) for n in (3, 4, 5)] == [1, 4, 26]
    for n in (4, 5, 6, 7):
        trees = tr.enumerate_trees(n)
        assert len(set(trees)) == len(trees)
        trivalent = [t for t in trees if tr.stratum_dimension(t) == 0]
        assert len(trivalent) == double_factorial(2 * n - 5)


def test_enumeration_matches_split_systems():
    for n in (4, 5, 6):
        assert set(split_system_trees(n)) == set(tr.enumerate_trees(n))


def test_roundtrip_and_validity():
    for n in range(3, 7):
        for t in tr.enumerate_trees(n):
            d = tr.tree_to_decomposition(t)
            assert len(d.pieces) == len(t.internal)
            assert hs.is_matroid_decomposition(d)
            assert tr.decomposition_to_tree(d) == t


def test_stratum_dimension_examples():
    for n in range(3, 8):
        assert tr.stratum_dimension(tr.star_tree(n)) == n - 3
        assert tr.is_stable_tree(tr.star_tree(n))
    assert tr.stratum_dimension(tree(5, [{4, 5}])) == 1
    assert all(tr.stratum_dimension(t) == 0 for t in tr.enumerate_trees(5) if len(t.internal) == 3)


def test_forget_examples():
    assert tr.forget_point(tr.star_tree(5), 2) == tr.star_tree(4)
    assert tr.forget_point(tree(4, [{3, 4}]), 1) == tr.star_tree(3)
    # {1,2} | 3 | {4,5}, forget 3, relabel 4 -> 3, 5 -> 4
    assert tr.forget_point(tree(5, [{4, 5}, {3, 4, 5}]), 3) == tree(4, [{3, 4}])
    with pytest.raises(TooFewLeaves):
        tr.forget_point(tr.star_tree(3), 1)


def test_forget_matches_restriction():
    for n in range(4, 7):
        for t in tr.enumerate_trees(n):
            for i in range(1, n + 1):
                restricted = hs.restrict_to_facet(tr.tree_to_decomposition(t), i, "-")
                assert restricted == tr.tree_to_decomposition(tr.forget_point(t, i))


def test_json_roundtrip():
    rng = random.Random(2)
    for t in rng.sample(tr.enumerate_trees(6), 20):
        assert tr.LabeledTree.from_json(t.to_json()) == t
        assert t.to_json() == tr.LabeledTree.from_json(t.to_json()).to_json()


def test_splits_are_pairwise_compatible():
    # splits are stored as the side avoiding leaf 1, so compatible means disjoint or nested
    for t in tr.enumerate_trees(6):
        assert len(t.splits()) == len(t.internal) - 1
        for a, b in combinations(t.splits(), 2):
            assert not (a & b) or a <= b or b <= a
