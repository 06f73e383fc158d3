"""
End-to-end checks, one function per criterion.  Each returns (ok, detail).
Used by ``chowquot selftest`` and by the acceptance tests.
"""

import random
import time
from fractions import Fraction
from itertools import combinations
from math import comb

from . import configurations as cf
from . import hypersimplex as hs
from . import schubert as sc
from . import secondary as sec
from . import trees as tr
from . import veronese as vr
from .errors import DomainError
from .exactcore import minor, poly_det, rank
from .grassmann import Subspace, is_generic, k_subsets

SEED = 20240601


def split_system_trees(n):
    """Independent tree enumerator: all pairwise compatible sets of splits."""
    splits = [frozenset(s) for size in range(2, n - 1)
              for s in combinations(range(2, n + 1), size)]

    def compatible(a, b):
        return not (a & b) or a <= b or b <= a

    found = []

    def rec(start, chosen):
        found.append(tr.tree_from_splits(n, chosen))
        for i in range(start, len(splits)):
            if all(compatible(splits[i], c) for c in chosen):
                rec(i + 1, chosen + [splits[i]])

    rec(0, [])
    return found


def criterion_1():
    counts = {n: len(tr.enumerate_trees(n)) for n in (3, 4, 5)}
    ok = counts == {3: 1, 4: 4, 5: 26}
    brute = set(split_system_trees(5))
    ok &= brute == set(tr.enumerate_trees(5))
    for n in (3, 4, 5, 6):
        for t in tr.enumerate_trees(n):
            ok &= hs.is_matroid_decomposition(tr.tree_to_decomposition(t))
    roundtrip = all(
        tr.decomposition_to_tree(tr.tree_to_decomposition(t), validate=False) == t
        for n in range(3, 8) for t in tr.enumerate_trees(n)
    )
    ok &= roundtrip
    return ok, f"counts {counts}, brute force n=5 agrees: {brute == set(tr.enumerate_trees(5))}, roundtrip n<=7: {roundtrip}"


def octahedron():
    return sec.PointConfig([hs._point(I, 4) for I in k_subsets(4, 2)])


def criterion_2():
    a = octahedron()
    ts = sec.enumerate_triangulations(a)
    verts, dim = sec.secondary_hull(a)
    vol = hs.normalized_volume(hs.hypersimplex(2, 4))
    pieces = [p for t in tr.enumerate_trees(4) if len(t.internal) == 2
              for p in tr.tree_to_decomposition(t).pieces]
    piece_vols = sorted(hs.normalized_volume(p) for p in pieces)
    ok = len(ts) == 3 and len(verts) == 3 and dim == 2 and vol == 4 and piece_vols == [2] * 6
    return ok, f"{len(ts)} triangulations, {len(verts)} hull vertices, hull dim {dim}, volume {vol}, pyramid volumes {piece_vols}"


def criterion_3():
    ok = True
    notes = []
    for k in (1, 2, 3):
        a = sec.prism_points(k)
        ts = sec.enumerate_triangulations(a)
        phis = {sec.char_function(t, a) for t in ts}
        verts, _ = sec.secondary_hull(a)
        fact = 1
        for i in range(2, k + 2):
            fact *= i
        rows = sorted(sec.prism_row(f, k) for f in verts)
        good = len(ts) == fact and len(verts) == len(phis) == fact and rows == sec.permutohedron_vertices(k)
        ok &= good
        notes.append(f"k={k}: {len(ts)} triangulations, {len(verts)} vertices")
    return ok, "; ".join(notes)


def criterion_4():
    bad = sc.crosscheck(4, 9)
    return not bad, f"mismatches {bad}"


def criterion_5():
    ok = sc.lie_complex_class(2, 4).coeffs == {(2, 1): 2}
    for n in range(4, 11):
        want = {(n - 1 - i, i): n - 2 * i for i in range(1, n) if n - 1 - i >= i and n - 2 * i > 0}
        ok &= sc.lie_complex_class(2, n).coeffs == want
    for d in range(5, 13):
        ok &= 2 * sc.schur_dim((1, 1), d - 1) == (d - 1) * (d - 2)
        ok &= 12 * sc.schur_dim((2, 2), d - 3) == (d - 2) * (d - 3) ** 2 * (d - 4)
    for n in range(5, 13):
        ok &= 6 * sc.schur_dim((1, 1, 1), n - 2) == (n - 2) * (n - 3) * (n - 4)
    return ok, "Lie complex classes for k=2, n<=10 and closed-form Schur dimensions"


def criterion_6():
    ok = True
    for k, n in ((3, 6), (3, 7), (4, 8)):
        total = None
        for w in sc.weights(n - k, k - 1):
            c = sc.component_class(w, k, n)
            total = c if total is None else total + c
        ok &= total == sc.veronese_class(k, n)
    return ok, "component classes sum to the Veronese class"


def random_configuration(rng, k, n, bound=9):
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(k)]
        if all(any(r[j] for r in rows) for j in range(n)):
            c = cf.Configuration(rows)
            if cf.is_general_position(c):
                return c


def criterion_7():
    rng = random.Random(SEED)
    shapes = [(2, 5), (2, 6), (3, 6), (3, 7)]
    ok = True
    for trial in range(50):
        k, n = shapes[trial % 4]
        c = random_configuration(rng, k, n)
        d = cf.associate(c)
        ok &= cf.projectively_equivalent(c, cf.associate(d))
        ok &= cf.duality_scale(c, d) is not None
        ok &= all(cf.tensor_relation(c, d))
    return ok, "50 configurations: involution, complementary minors, tensor relation"


def criterion_8():
    rng = random.Random(SEED + 8)
    ok = True
    for _ in range(10):
        ts = rng.sample(range(-30, 30), 6)
        c = cf.Configuration.from_columns([[1, t, t * t] for t in ts])
        on = cf.lies_on_conic(c)
        z = cf.psi(*cf.six_point_normal_form(c)) == 0
        low = vr.tangent_system_rank(*cf.six_point_normal_form(c)) <= 3
        ok &= on and z and low
    generic = 0
    while generic < 10:
        c = random_configuration(rng, 3, 6)
        if cf.lies_on_conic(c):
            continue
        generic += 1
        nf = cf.six_point_normal_form(c)
        ok &= cf.psi(*nf) != 0 and vr.tangent_system_rank(*nf) == 4
    system = vr.tangent_system_symbolic()
    p = vr.psi_poly()
    for cols in combinations(range(1, 6), 4):
        m = poly_det([[system[r][col] for col in cols] for r in range(4)])
        ok &= m == p or m == -p
    return ok, "10 conic and 10 generic sextuples; 4x4 minors are ±Ψ"


def random_arrangement(rng, k, n, normalized=False):
    while True:
        rows = [[rng.randint(-7, 7) for _ in range(k)] for _ in range(n)]
        if normalized:
            for i in range(k):
                rows[i] = [int(j == i) for j in range(k)]
        try:
            return vr.HyperplaneArrangement(rows)
        except DomainError:
            continue


def random_regular_point(rng, arr):
    while True:
        z = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(arr.k)]
        if any(z) and all(arr.value(i, z) for i in range(1, arr.n + 1)):
            return z


def criterion_9():
    rng = random.Random(SEED + 9)
    ok = True
    for k, n in ((2, 5), (3, 6), (3, 7)):
        arr = random_arrangement(rng, k, n, normalized=True)
        polys = vr.plucker_polys(arr)
        for _ in range(5):
            z = random_regular_point(rng, arr)
            ok &= vr.euler_vector(arr, z) == [1] * n
            N = vr.gauss_matrix(arr, z)
            numeric = {I: minor(N, range(k), [i - 1 for i in I]) for I in polys}
            prod_f = 1
            for i in range(1, n + 1):
                prod_f *= arr.value(i, z)
            ok &= all(polys[I].evaluate(z) == numeric[I] * prod_f for I in polys)
            L = vr.log_gauss(arr, z)
            coeffs = [rng.randint(-5, 5) for _ in range(k)]
            t = [sum(coeffs[r] * L.matrix[r, i] for r in range(k)) for i in range(n)]
            ok &= vr.on_sweep(arr, t)
        ok &= vr.plucker_span_rank(arr, polys) == comb(n - 1, k - 1)
        for S in combinations(range(1, n + 1), k - 1):
            ok &= vr.marked_point(arr, S) == vr.expected_marked_point(n, S)
        ok &= all(rank(vr.sweep_matrix(arr, [int(j == i) for j in range(n)])) == 1 for i in range(n))
    return ok, "Euler identity, Plücker polynomials, span rank, marked points, sweep"


def criterion_10():
    rng = random.Random(SEED + 10)
    ok = True
    lines = 0
    while lines < 10:
        try:
            s = Subspace([[rng.randint(-9, 9) for _ in range(4)] for _ in range(2)])
        except DomainError:
            continue
        if not is_generic(s):
            continue
        lines += 1
        lam = vr.tetrahedral_ratio(s)
        for _ in range(10):
            t = [rng.choice([-1, 1]) * rng.randint(1, 9) for _ in range(4)]
            ok &= vr.tetrahedral_ratio(vr.torus_translate(s, t)) == lam
        r = vr.line_cross_ratio(s)
        ok &= lam == (1 - r) / r
    for n in range(4, 7):
        for t in tr.enumerate_trees(n):
            for i in range(1, n + 1):
                left = hs.restrict_to_facet(tr.tree_to_decomposition(t), i, "-")
                ok &= left == tr.tree_to_decomposition(tr.forget_point(t, i))
    return ok, "ratio constant on torus orbits; restriction matches forgetting a point"


CRITERIA = [
    (1, "tree and decomposition census", criterion_1, 60),
    (2, "octahedron", criterion_2, 5),
    (3, "prism and permutohedron", criterion_3, 120),
    (4, "Veronese class cross-check", criterion_4, 60),
    (5, "closed-form numbers", criterion_5, 5),
    (6, "component-sum identity", criterion_6, 30),
    (7, "association", criterion_7, 30),
    (8, "conic criterion", criterion_8, 30),
    (9, "Gauss map and sweep", criterion_9, 120),
    (10, "tetrahedral complexes and forgetful maps", criterion_10, 60),
]


def run_criterion(number):
    _, name, fn, limit = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # report rather than abort the table
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    within = elapsed < limit
    return {"criterion": number, "name": name, "ok": bool(ok) and within,
            "seconds": round(elapsed, 2), "limit": limit, "detail": detail}


def run_all():
    return [run_criterion(i) for i in range(1, len(CRITERIA) + 1)]
