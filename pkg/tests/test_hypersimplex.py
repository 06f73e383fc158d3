import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowquot import grassmann as gr
from chowquot import hypersimplex as hs
from chowquot import trees as tr
from chowquot.errors import BadParams, DomainError, NotFullDimensional


def poly(k, n, keys):
    return hs.MatroidPolytope(k, n, [gr.parse_subset_key(x) for x in keys])


def test_vertices_examples():
    assert hs.hypersimplex_vertices(1, 3) == [(1,), (2,), (3,)]
    assert len(hs.hypersimplex_vertices(2, 4)) == 6
    assert len(hs.hypersimplex_vertices(3, 4)) == 4
    with pytest.raises(BadParams):
        hs.hypersimplex_vertices(0, 3)
    with pytest.raises(BadParams):
        hs.hypersimplex_vertices(4, 4)


def test_facet_examples():
    p, relabel = hs.facet(2, 4, 1, "+")
    assert p.vertices == {(1, 2), (1, 3), (1, 4)}
    assert hs.facet_target(2, 4, "+") == (1, 3)
    assert sorted(relabel(I) for I in p.vertices) == [(1,), (2,), (3,)]
    p, relabel = hs.facet(2, 4, 1, "-")
    assert p.vertices == {(2, 3), (2, 4), (3, 4)}
    assert sorted(relabel(I) for I in p.vertices) == [(1, 2), (1, 3), (2, 3)]


def test_facet_counts():
    for n in range(4, 9):
        for k in range(2, n - 1):
            faces = {frozenset(hs.facet(k, n, i, s)[0].vertices) for i in range(1, n + 1) for s in "+-"}
            assert len(faces) == 2 * n
            for s in "+-":
                k2, n2 = hs.facet_target(k, n, s)
                p, relabel = hs.facet(k, n, 1, s)
                assert sorted(relabel(I) for I in p.vertices) == hs.hypersimplex_vertices(k2, n2)


def test_matroid_polytope_examples():
    assert hs.is_matroid_polytope(hs.hypersimplex(2, 5))
    assert not hs.is_matroid_polytope(poly(2, 4, ["1,2", "3,4"]))
    m = hs.relation_polytope(4, [{1, 2}, {3, 4}])
    assert hs.is_matroid_polytope(m) and m.dimension() == 2


def test_exchange_agrees_with_edge_oracle():
    rng = random.Random(3)
    verts = hs.hypersimplex_vertices(2, 5)
    for _ in range(150):
        chosen = rng.sample(verts, rng.randint(1, 8))
        assert hs.satisfies_exchange(chosen) == hs.edges_are_roots(chosen, 5)


def test_volume_examples():
    for n in range(2, 7):
        assert hs.normalized_volume(hs.hypersimplex(1, n)) == 1
    assert hs.normalized_volume(hs.hypersimplex(2, 4)) == 4
    pyr = poly(2, 4, ["1,2", "1,3", "1,4", "2,3", "2,4"])
    assert hs.normalized_volume(pyr) == 2
    with pytest.raises(NotFullDimensional):
        hs.normalized_volume(poly(2, 4, ["1,3", "1,4", "2,3", "2,4"]))


def test_volume_matches_eulerian_numbers():
    for n in range(3, 8):
        for k in range(1, n):
            assert hs.normalized_volume(hs.hypersimplex(k, n)) == hs.eulerian_number(n - 1, k - 1)


def test_decomposition_examples():
    trivial = hs.MatroidDecomposition(2, 4, [hs.hypersimplex(2, 4)])
    assert hs.is_matroid_decomposition(trivial)
    a = poly(2, 4, ["1,2", "1,3", "1,4", "2,3", "2,4"])
    b = poly(2, 4, ["3,4", "1,3", "1,4", "2,3", "2,4"])
    assert hs.is_matroid_decomposition(hs.MatroidDecomposition(2, 4, [a, b]))
    c = poly(2, 4, ["1,3", "1,2", "1,4", "3,4", "2,3"])
    report = hs.decomposition_report(hs.MatroidDecomposition(2, 4, [a, c]))
    assert not all(report.values())
    assert hs.is_matroid_decomposition(hs.MatroidDecomposition(2, 4, [a, b]), oracle_limit=12)


def test_restrict_examples():
    trivial = hs.MatroidDecomposition(2, 5, [hs.hypersimplex(2, 5)])
    assert hs.restrict_to_facet(trivial, 2, "-") == hs.MatroidDecomposition(2, 4, [hs.hypersimplex(2, 4)])
    a = poly(2, 4, ["1,2", "1,3", "1,4", "2,3", "2,4"])
    b = poly(2, 4, ["3,4", "1,3", "1,4", "2,3", "2,4"])
    r = hs.restrict_to_facet(hs.MatroidDecomposition(2, 4, [a, b]), 1, "+")
    assert r == hs.MatroidDecomposition(1, 3, [hs.hypersimplex(1, 3)])


def test_restriction_of_tree_decompositions_is_valid():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(4, 7)
        t = rng.choice(tr.enumerate_trees(n))
        i, sign = rng.randint(1, n), rng.choice("+-")
        d = tr.tree_to_decomposition(t)
        r = hs.restrict_to_facet(d, i, sign)
        assert hs.is_matroid_decomposition(r)
        vol = sum(hs.normalized_volume(p) for p in r.pieces)
        assert vol == hs.normalized_volume(hs.hypersimplex(r.k, r.n))


def test_common_face_detection():
    a = poly(2, 4, ["1,2", "1,3", "1,4", "2,3", "2,4"])
    b = poly(2, 4, ["3,4", "1,3", "1,4", "2,3", "2,4"])
    assert hs.meets_in_common_face(a, b)
    c = poly(2, 4, ["1,3", "1,2", "1,4", "3,4", "2,3"])
    assert not hs.meets_in_common_face(a, c)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=2, max_size=3))
def test_realizable_polytopes_are_matroids(rows):
    try:
        s = gr.Subspace(rows)
    except DomainError:
        return
    p = hs.matroid_polytope_of(s)
    assert p.vertices == gr.matroid_bases(s)
    assert hs.is_matroid_polytope(p)


def test_json_roundtrip():
    d = tr.tree_to_decomposition(tr.enumerate_trees(5)[7])
    assert hs.MatroidDecomposition.from_json(d.to_json()) == d
    p = hs.hypersimplex(2, 4)
    assert hs.MatroidPolytope.from_json(p.to_json()) == p
    assert len(p.to_json()["vertices"]) == comb(4, 2)
