"""
Triangulations of small point configurations, their characteristic
functions, and the vertices of the secondary polytope.

Point indices are 0-based positions in the configuration.  A simplex is an
increasing tuple of indices.
"""

from fractions import Fraction
from itertools import combinations, permutations

from .errors import BadParams, InvalidTriangulation, TooLarge
from .exactcore.lp import feasible_point
from .exactcore.polyhedra import (
    AffineFrame,
    affine_rank,
    hull_volume,
    in_convex_hull,
    separating_functional,
)

MAX_POINTS = 12


class PointConfig:
    def __init__(self, points):
        pts = [tuple(int(x) for x in p) for p in points]
        if not pts:
            raise BadParams("empty configuration")
        if len({len(p) for p in pts}) != 1:
            raise BadParams("points have different lengths")
        if len(set(pts)) != len(pts):
            raise BadParams("points must be distinct")
        self.points = pts
        self.frame = AffineFrame(pts)
        self.dim = self.frame.dim
        self._compat = {}

    def __len__(self):
        return len(self.points)

    def volume(self):
        return hull_volume(self.frame)

    def to_json(self):
        return {"points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, data):
        return cls(data["points"])


class Triangulation:
    def __init__(self, simplices):
        self.simplices = tuple(sorted(tuple(sorted(s)) for s in simplices))

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self):
        return f"Triangulation({list(self.simplices)})"

    def vertices(self):
        return sorted({i for s in self.simplices for i in s})

    def to_json(self):
        return {"simplices": [list(s) for s in self.simplices]}

    @classmethod
    def from_json(cls, data):
        return cls(data["simplices"])


class CharFunction:
    def __init__(self, values):
        self.values = tuple(values)

    def __eq__(self, other):
        return isinstance(other, CharFunction) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __lt__(self, other):
        return self.values < other.values

    def __repr__(self):
        return f"CharFunction({list(self.values)})"

    def to_json(self):
        return list(self.values)


def _compatible(a, s, t):
    """conv(s) and conv(t) meet in a common face (possibly empty)."""
    key = (s, t) if s < t else (t, s)
    hit = a._compat.get(key)
    if hit is not None:
        return hit
    c = a.frame.coords
    ok = separating_functional([c[i] for i in s], [c[i] for i in t]) is not None
    a._compat[key] = ok
    return ok


def check_triangulation(t, a):
    """Raise InvalidTriangulation unless t triangulates conv(a)."""
    fr = a.frame
    for s in t.simplices:
        if len(s) != fr.dim + 1 or not all(0 <= i < len(a) for i in s):
            raise InvalidTriangulation(f"{s} is not a full-dimensional simplex of the configuration")
        if fr.signed_det(s) == 0:
            raise InvalidTriangulation(f"{s} is degenerate")
    for s, u in combinations(t.simplices, 2):
        if not _compatible(a, s, u):
            raise InvalidTriangulation(f"{s} and {u} overlap")
    if sum(fr.simplex_volume(s) for s in t.simplices) != a.volume():
        raise InvalidTriangulation("simplices do not cover the convex hull")


def char_function(t, a):
    """φ_T(ω): total normalised volume of the simplices of t having ω as a vertex."""
    check_triangulation(t, a)
    vals = [0] * len(a)
    for s in t.simplices:
        v = a.frame.simplex_volume(s)
        for i in s:
            vals[i] += v
    return CharFunction(vals)


def _side(normal, offset, p):
    v = sum(x * y for x, y in zip(normal, p)) - offset
    return (v > 0) - (v < 0)


def _generic_point(a, hyperplanes):
    """A rational interior point of conv(a) off every given hyperplane."""
    c = a.frame.coords
    d = a.dim
    # a point inside the first full simplex, nudged until generic
    base = a.frame.independent_subset()
    center = [sum(Fraction(c[i][j]) for i in base) / len(base) for j in range(d)]
    step = 1
    while True:
        step *= 7
        p = [center[j] + Fraction(1, step ** (j + 1)) for j in range(d)]
        if all(_side(nrm, off, p) != 0 for nrm, off in hyperplanes):
            return p


def _inside(a, s, p):
    fr = a.frame
    for v in s:
        f = tuple(x for x in s if x != v)
        nrm, off = fr.facet_normal(f)
        if _side(nrm, off, p) != fr.side(f, v):
            return False
    return True


def enumerate_triangulations(a):
    """All triangulations of conv(a) with vertices among the points of a."""
    if len(a) > MAX_POINTS:
        raise TooLarge(f"{len(a)} points exceeds the limit of {MAX_POINTS}")
    fr = a.frame
    d = a.dim
    n = len(a)
    if d == 0:
        return [Triangulation([(0,)])]
    simplices = [s for s in combinations(range(n), d + 1) if fr.signed_det(s) != 0]
    hyper = {}
    for f in combinations(range(n), d):
        if affine_rank([fr.coords[i] for i in f]) == d - 1:
            nrm, off = fr.facet_normal(f)
            sides = {fr.side(f, i) for i in range(n)} - {0}
            hyper[f] = (nrm, off, len(sides) < 2)
    on_boundary = {f for f, (_, _, b) in hyper.items() if b}
    by_facet = {}
    for s in simplices:
        for v in s:
            by_facet.setdefault(tuple(x for x in s if x != v), []).append((s, v))
    p = _generic_point(a, [(nrm, off) for nrm, off, _ in hyper.values()])
    starts = [s for s in simplices if _inside(a, s, p)]
    total = a.volume()
    found = set()

    def extend(chosen, open_count):
        hole = None
        for f, c in open_count.items():
            if c == 1 and f not in on_boundary:
                hole = f
                break
        if hole is None:
            if sum(fr.simplex_volume(s) for s in chosen) == total:
                found.add(Triangulation(chosen))
            return
        owner = next(s for s in chosen if set(hole) < set(s))
        inner = next(i for i in owner if i not in hole)
        want = -fr.side(hole, inner)
        for s, v in by_facet.get(hole, []):
            if s in chosen or fr.side(hole, v) != want:
                continue
            if all(_compatible(a, s, u) for u in chosen):
                counts = dict(open_count)
                for w in s:
                    f = tuple(x for x in s if x != w)
                    counts[f] = counts.get(f, 0) + 1
                extend(chosen + [s], counts)

    for s in starts:
        counts = {}
        for w in s:
            counts[tuple(x for x in s if x != w)] = 1
        extend([s], counts)
    return sorted(found, key=lambda t: t.simplices)


def is_regular(t, a):
    """
    Lifting test: heights h with, for every simplex s, an affine g_s equal to
    h on s and strictly below h on every other point.
    """
    c = a.frame.coords
    d, n = a.dim, len(a)
    m = len(t.simplices)
    nv = n + m * (d + 1)
    A_eq, b_eq, A_ub, b_ub = [], [], [], []
    for k, s in enumerate(t.simplices):
        off = n + k * (d + 1)
        for i in range(n):
            row = [0] * nv
            row[i] = -1
            for j in range(d):
                row[off + j] = c[i][j]
            row[off + d] = 1
            if i in s:
                A_eq.append(row)
                b_eq.append(0)
            else:
                A_ub.append(row)
                b_ub.append(-1)
    return feasible_point(A_ub, b_ub, A_eq, b_eq, nvars=nv) is not None


def secondary_hull(a):
    """(vertex characteristic functions, affine dimension of their hull)."""
    phis = sorted({char_function(t, a) for t in enumerate_triangulations(a)})
    verts = []
    for i, f in enumerate(phis):
        others = [g.values for j, g in enumerate(phis) if j != i]
        if not others or not in_convex_hull(f.values, others):
            verts.append(f)
    return verts, affine_rank([f.values for f in phis])


def secondary_vertices(a):
    return secondary_hull(a)[0]


def prism_points(k):
    """Vertices (a, e_b) of Δ^1 x Δ^k; point (a, b) has index a*(k+1) + b."""
    if k < 1:
        raise BadParams("need k >= 1")
    pts = []
    for a in (0, 1):
        for b in range(k + 1):
            pts.append([a] + [1 if j == b else 0 for j in range(k + 1)])
    return PointConfig(pts)


def prism_index(k, a, b):
    return a * (k + 1) + b


def prism_standard_triangulation(k):
    """Staircase simplices Δ_i = {(0, j): j <= i} ∪ {(1, j): j >= i}."""
    if k < 1:
        raise BadParams("need k >= 1")
    simplices = []
    for i in range(k + 1):
        s = [prism_index(k, 0, j) for j in range(i + 1)]
        s += [prism_index(k, 1, j) for j in range(i, k + 1)]
        simplices.append(s)
    return Triangulation(simplices)


def prism_triangulation_of_permutation(w):
    """Image of the standard triangulation under (a, b) -> (a, w[b])."""
    w = list(w)
    k = len(w) - 1
    if sorted(w) != list(range(k + 1)):
        raise BadParams("w must be a permutation of 0..k")
    std = prism_standard_triangulation(k)
    k1 = k + 1
    return Triangulation([[(i // k1) * k1 + w[i % k1] for i in s] for s in std.simplices])


def prism_row(phi, k, a=1):
    """Values of a characteristic function on the row (a, 0..k)."""
    return tuple(phi.values[prism_index(k, a, b)] for b in range(k + 1))


def permutohedron_vertices(k):
    if k < 1:
        raise BadParams("need k >= 1")
    return sorted(permutations(range(1, k + 2)))
