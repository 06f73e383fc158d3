import random
from fractions import Fraction

import pytest

from chowquot import configurations as cf
from chowquot.acceptance import random_configuration
from chowquot.errors import BadParams, CoincidentPoints, NotGeneric, ZeroColumn
from chowquot.exactcore import RationalMatrix, rank


def test_general_position_examples():
    assert cf.is_general_position(cf.Configuration.from_columns([[1, 0], [1, 1], [2, 1], [0, 1]]))
    assert not cf.is_general_position(cf.Configuration.from_columns([[1, 2], [1, 2], [0, 1]]))
    assert not cf.is_general_position(cf.Configuration.from_columns([[1, 2], [2, 4], [0, 1]]))
    cols = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [1, 4, 9]]
    assert cf.is_general_position(cf.Configuration.from_columns(cols))
    with pytest.raises(ZeroColumn):
        cf.Configuration.from_columns([[0, 0], [1, 1]])


def test_cross_ratio_examples():
    assert cf.cross_ratio(0, 1, cf.INF, 5) == Fraction(4, 5)
    for lam in (2, Fraction(-1, 3), 7):
        assert cf.cross_ratio(0, 1, cf.INF, lam) == (lam - 1) / Fraction(lam)
    assert cf.cross_ratio(0, cf.INF, 1, -1) == -1
    with pytest.raises(CoincidentPoints):
        cf.cross_ratio(0, 1, 1, 2)
    with pytest.raises(CoincidentPoints):
        cf.cross_ratio((1, 0), cf.INF, 1, 2)


def test_cross_ratio_is_mobius_invariant():
    rng = random.Random(1)
    for _ in range(20):
        pts = rng.sample(range(-20, 20), 4)
        while True:
            a, b, c, d = (rng.randint(-5, 5) for _ in range(4))
            if a * d - b * c:
                break
        moved = [(a * x + b, c * x + d) for x in pts]
        assert cf.cross_ratio(*moved) == cf.cross_ratio(*pts)


def test_associate_examples():
    rng = random.Random(2)
    for k, n in [(2, 5), (2, 6), (3, 6), (3, 7)]:
        for _ in range(5):
            c = random_configuration(rng, k, n)
            d = cf.associate(c)
            assert (d.k, d.n) == (n - k, n)
            assert rank(c.matrix @ d.matrix.transpose()) == 0
            assert cf.projectively_equivalent(cf.associate(d), c)
            lam = cf.tensor_relation(c, d)
            assert all(lam)
            assert cf.duality_scale(c, d) is not None
            assert cf.is_circuit(cf.segre_points(c, d))
    with pytest.raises(NotGeneric):
        cf.associate(cf.Configuration.from_columns([[1, 0], [0, 1], [1, 1]]))
    with pytest.raises(NotGeneric):
        cf.associate(cf.Configuration.from_columns([[1, 0], [0, 1], [1, 1], [2, 2]]))


def test_five_points_on_a_line_associate_to_a_conic():
    ts = [0, 1, 2, 3, 5]
    c = cf.Configuration.from_columns([[1, t] for t in ts])
    d = cf.associate(c)
    lifts = RationalMatrix.from_rows([cf.veronese_lift(col) for col in d.columns()])
    # five points of P^2 always lie on a conic; generic ones lie on exactly one
    assert rank(lifts) == 5


def test_circuit_examples():
    assert cf.is_circuit([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    assert not cf.is_circuit([[1, 0, 0], [2, 0, 0], [0, 1, 0]])
    assert not cf.is_circuit([[1, 0], [0, 1]])


def test_projective_equivalence_detects_differences():
    rng = random.Random(3)
    same = different = 0
    for _ in range(20):
        c = random_configuration(rng, 3, 6)
        d = random_configuration(rng, 3, 6)
        g = RationalMatrix.from_rows([[2, 1, 0], [0, 1, 3], [1, 0, 1]])
        scaled = RationalMatrix.from_rows([[x * (j + 1) for j, x in enumerate(r)] for r in (g @ c.matrix).to_rows()])
        same += cf.projectively_equivalent(c, cf.Configuration(scaled))
        different += not cf.projectively_equivalent(c, d)
    assert same == 20 and different == 20


def test_normal_form_examples():
    a, b, c, d = 2, 3, 5, 7
    cols = [[1, 0, 0], [0, 1, 0], [0, 0, 1]] + [list(r) for r in cf.normal_form_matrix(a, b, c, d)]
    conf = cf.Configuration.from_columns(cols)
    assert cf.six_point_normal_form(conf) == (a, b, c, d)
    scaled = cf.Configuration.from_columns([[x * (j + 2) for x in col] for j, col in enumerate(cols)])
    assert cf.six_point_normal_form(scaled) == (a, b, c, d)
    rng = random.Random(4)
    for _ in range(10):
        conf = random_configuration(rng, 3, 6)
        assert cf.normal_form_minors_nonzero(*cf.six_point_normal_form(conf))
    with pytest.raises(BadParams):
        cf.six_point_normal_form(random_configuration(rng, 3, 7))


def test_psi_and_conic_examples():
    assert cf.psi(1, 1, 1, 1) == 0
    on = cf.Configuration.from_columns([[1, t, t * t] for t in (0, 1, 2, 3, -1, 5)])
    assert cf.lies_on_conic(on)
    assert cf.psi(*cf.six_point_normal_form(on)) == 0
    off = cf.Configuration.from_columns([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [1, 4, 9]])
    assert not cf.lies_on_conic(off)
    assert cf.psi(*cf.six_point_normal_form(off)) != 0


def test_self_association_iff_conic():
    rng = random.Random(5)
    for _ in range(6):
        ts = rng.sample(range(-15, 15), 6)
        on = cf.Configuration.from_columns([[1, t, t * t] for t in ts])
        assert cf.projectively_equivalent(cf.associate(on), on)
        off = random_configuration(rng, 3, 6)
        assert cf.lies_on_conic(off) == cf.projectively_equivalent(cf.associate(off), off)


def test_json_roundtrip():
    c = random_configuration(random.Random(6), 3, 6)
    back = cf.Configuration.from_json(c.to_json())
    assert back.matrix == c.matrix
    with pytest.raises(BadParams):
        cf.Configuration.from_json({**c.to_json(), "k": 4})
