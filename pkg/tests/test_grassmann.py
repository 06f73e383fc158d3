import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from chowquot import configurations as cf
from chowquot import grassmann as gr
from chowquot.errors import DimensionDrop, DomainError, ZeroColumn
from chowquot.exactcore import RationalMatrix


def random_subspace(rng, k, n, bound=4):
    while True:
        try:
            return gr.Subspace([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(k)])
        except DomainError:
            continue


def shift(I, i):
    return tuple(j - (j > i) for j in I)


def contraction(bases, i):
    return {shift(tuple(j for j in I if j != i), i) for I in bases if i in I}


def deletion(bases, i):
    return {shift(I, i) for I in bases if i not in I}


def exchange_holds(bases):
    for A in bases:
        for B in bases:
            for a in set(A) - set(B):
                if not any(tuple(sorted((set(A) - {a}) | {b})) in bases for b in set(B) - set(A)):
                    return False
    return True


def test_plucker_examples():
    p = gr.plucker(gr.Subspace([[1, 0, 0, 0], [0, 1, 0, 0]]))
    assert p[(1, 2)] == 1 and all(p[I] == 0 for I in gr.k_subsets(4, 2) if I != (1, 2))
    rows = [[1, 0, 1, 1], [0, 1, 1, 2]]
    p = gr.plucker(gr.Subspace(rows))
    want = [sympy.Matrix(rows).extract([0, 1], [i - 1 for i in I]).det() for I in gr.k_subsets(4, 2)]
    assert [p[I] for I in gr.k_subsets(4, 2)] == want == [1, 1, 2, -1, -1, 1]
    assert p[(1, 2)] * p[(3, 4)] - p[(1, 3)] * p[(2, 4)] + p[(1, 4)] * p[(2, 3)] == 0


def test_row_equivalent_matrices_have_proportional_plucker():
    s = gr.Subspace([[1, 0, 1, 1], [0, 1, 1, 2]])
    t = gr.Subspace([[2, 1, 3, 4], [1, -1, 0, -1]])
    assert s == t
    assert gr.plucker(s).is_proportional(gr.plucker(t))


def test_is_generic_examples():
    assert not gr.is_generic(gr.Subspace([[1, 0, 0, 0], [0, 1, 0, 0]]))
    assert gr.is_generic(gr.Subspace([[1, 0, 1, 1], [0, 1, 1, 2]]))
    assert gr.is_generic(gr.Subspace([[1, 1, 1, 1, 1]]))


def test_matroid_examples():
    assert gr.matroid_bases(gr.Subspace([[1, 0, 0, 0], [0, 1, 0, 0]])) == {(1, 2)}
    assert gr.matroid_bases(gr.Subspace([[1, 0, 1, 0], [0, 1, 0, 1]])) == {(1, 2), (1, 4), (2, 3), (3, 4)}
    assert len(gr.matroid_bases(gr.Subspace([[1, 0, 1, 1], [0, 1, 1, 2]]))) == 6


def test_intersection_examples():
    with pytest.raises(DimensionDrop):
        gr.intersect_coord_hyperplane(gr.Subspace([[1, 1]]), 1)
    s = gr.Subspace([[1, 1, 0, 0], [0, 0, 1, 1]])
    assert gr.intersect_coord_hyperplane(s, 1) == gr.Subspace([[0, 1, 1]])


def test_projection_examples():
    with pytest.raises(DimensionDrop):
        gr.project_away(gr.Subspace([[1, 0, 0, 0], [0, 1, 0, 0]]), 1)
    assert gr.project_away(gr.Subspace([[1, 2, 3]]), 2) == gr.Subspace([[1, 3]])


def test_gm_configuration_examples():
    c = gr.gm_configuration(gr.Subspace([[1, 0, 1, 1], [0, 1, 1, 2]]))
    assert [list(col) for col in c.columns()] == [[1, 0], [0, 1], [1, 1], [1, 2]]
    with pytest.raises(ZeroColumn):
        gr.gm_configuration(gr.Subspace([[1, 0, 0], [0, 1, 0]]))


def test_minor_relations_for_random_subspaces():
    rng = random.Random(11)
    for _ in range(100):
        s = random_subspace(rng, 2, rng.randint(4, 6))
        assert all(r == 0 for r in gr.plucker_relation_residuals(gr.plucker(s)).values())
        assert exchange_holds(gr.matroid_bases(s))


def test_minors_match_matroid_oracle():
    rng = random.Random(12)
    for _ in range(40):
        k, n = rng.choice([(2, 4), (2, 5), (3, 6)])
        s = random_subspace(rng, k, n, bound=9)
        if not gr.is_generic(s):
            continue
        bases = gr.matroid_bases(s)
        for i in range(1, n + 1):
            assert gr.matroid_bases(gr.intersect_coord_hyperplane(s, i)) == contraction(bases, i)
            assert gr.matroid_bases(gr.project_away(s, i)) == deletion(bases, i)


def test_gm_roundtrip_and_column_matroid():
    rng = random.Random(13)
    for _ in range(100):
        s = random_subspace(rng, rng.randint(1, 3), 5)
        try:
            c = gr.gm_configuration(s)
        except ZeroColumn:
            continue
        back = gr.configuration_to_subspace(c)
        assert back == s
        assert set(I for I, v in cf.maximal_minors(c).items() if v) == gr.matroid_bases(s)
        g = RationalMatrix.from_rows([[1, 2, 0], [0, 1, 0], [3, 0, 1]][:s.k])
        g = g.submatrix(range(s.k), range(s.k))
        if g.rows and sympy.Matrix(g.to_rows()).det() != 0:
            moved = cf.Configuration(g @ c.matrix)
            assert cf.projectively_equivalent(c, moved)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5), min_size=2, max_size=2))
def test_plucker_roundtrip(rows):
    try:
        s = gr.Subspace(rows)
    except DomainError:
        return
    assert gr.subspace_from_plucker(gr.plucker(s)) == s
    assert gr.Subspace.from_json(s.to_json()) == s
    assert gr.PluckerVector.from_json(gr.plucker(s).to_json()).is_proportional(gr.plucker(s))


def test_subset_keys():
    assert gr.subset_key((1, 3)) == "1,3"
    assert gr.parse_subset_key("2,4") == (2, 4)
    assert list(gr.k_subsets(4, 2))[:3] == [(1, 2), (1, 3), (1, 4)]
    assert len(list(gr.k_subsets(6, 3))) == len(list(combinations(range(6), 3)))
