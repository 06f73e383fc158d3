"""
Exact geometry of finite point sets in Q^N: affine frames, lattice-normalised
simplex volumes, placing triangulations and LP-based separation tests.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd

from .lp import feasible_point
from .matrix import RationalMatrix, bareiss_echelon, det, kernel_basis, rank


def _int_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    pivots, swaps = bareiss_echelon(a, n)
    if len(pivots) < n:
        return 0
    return -a[-1][-1] if swaps % 2 else a[-1][-1]


def affine_rank(points):
    """Dimension of the affine span of the points (-1 for the empty set)."""
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    return rank(RationalMatrix.from_rows(diffs, cols=len(p0))) if diffs else 0


class AffineFrame:
    """
    Coordinates for a point set inside its own affine span.

    ``axes`` is a set of ambient coordinates on which the projection is
    injective on the span; ``scale`` converts projected determinants to
    volumes normalised against the lattice ``aff(points) ∩ Z^N`` (so a
    unimodular simplex has volume 1).
    """

    def __init__(self, points):
        self.points = [tuple(p) for p in points]
        if not self.points:
            raise ValueError("empty point set")
        self.ambient = len(self.points[0])
        p0 = self.points[0]
        diffs = [[a - b for a, b in zip(p, p0)] for p in self.points[1:]]
        dm = RationalMatrix.from_rows(diffs, cols=self.ambient) if diffs else None
        self.dim = rank(dm) if dm is not None else 0
        if dm is not None and self.dim:
            _, pivots = dm.rref()
            self.axes = tuple(pivots)
        else:
            self.axes = ()
        self.coords = [tuple(p[a] for a in self.axes) for p in self.points]
        self.integral = all(
            isinstance(x, int) or getattr(x, "denominator", 1) == 1
            for p in self.points for x in p
        )
        if self.integral:
            self.coords = [tuple(int(x) for x in c) for c in self.coords]
        self.scale = 1
        if self.dim and self.dim < self.ambient and self.integral:
            self.scale = self._lattice_scale()
        self._normals = {}

    def _lattice_scale(self):
        simplex = self.independent_subset()
        p0 = self.points[simplex[0]]
        full = [[a - b for a, b in zip(self.points[i], p0)] for i in simplex[1:]]
        proj = abs(_int_det([[r[a] for a in self.axes] for r in full]))
        g = 0
        for cols in combinations(range(self.ambient), self.dim):
            g = gcd(g, _int_det([[r[c] for c in cols] for r in full]))
        return Fraction(proj, g)

    def independent_subset(self, order=None):
        """Indices of dim+1 affinely independent points, chosen greedily."""
        order = range(len(self.points)) if order is None else order
        chosen = []
        diffs = []
        for i in order:
            if not chosen:
                chosen.append(i)
                continue
            cand = diffs + [[a - b for a, b in zip(self.coords[i], self.coords[chosen[0]])]]
            if rank(RationalMatrix.from_rows(cand, cols=self.dim)) == len(cand):
                diffs = cand
                chosen.append(i)
            if len(chosen) == self.dim + 1:
                break
        return chosen

    def signed_det(self, idx):
        c0 = self.coords[idx[0]]
        rows = [[a - b for a, b in zip(self.coords[i], c0)] for i in idx[1:]]
        if self.integral:
            return _int_det(rows)
        return det(RationalMatrix.from_rows(rows, cols=self.dim))

    def simplex_volume(self, idx):
        """Normalised volume of the simplex on the given point indices."""
        if len(idx) != self.dim + 1:
            raise ValueError("a full-dimensional simplex needs dim+1 points")
        v = abs(self.signed_det(idx))
        if self.scale != 1:
            v = v / self.scale
            if isinstance(v, Fraction) and v.denominator == 1:
                v = v.numerator
        return v

    def facet_normal(self, facet):
        """(normal, offset) with normal.x == offset on the facet's hyperplane."""
        facet = tuple(facet)
        hit = self._normals.get(facet)
        if hit is not None:
            return hit
        rows = [list(self.coords[i]) + [1] for i in facet]
        k = kernel_basis(RationalMatrix.from_rows(rows, cols=self.dim + 1))
        if k.rows != 1:
            raise ValueError("facet points are not affinely independent")
        vec = list(k.row(0))
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in vec), 1)
        vec = [int(x * den) for x in vec]
        normal, offset = vec[:-1], -vec[-1]
        self._normals[facet] = (normal, offset)
        return normal, offset

    def side(self, facet, i):
        normal, offset = self.facet_normal(facet)
        val = sum(a * b for a, b in zip(normal, self.coords[i])) - offset
        return (val > 0) - (val < 0)


def placing_triangulation(frame, order=None):
    """
    Placing (beneath-beyond) triangulation of conv(points).

    Points are inserted in ``order``; each new point is coned over the
    boundary facets it sees.  Points inside or on the current hull are
    skipped, so the result triangulates the hull using a subset of points.
    """
    order = list(range(len(frame.points))) if order is None else list(order)
    if frame.dim == 0:
        return [(order[0],)]
    start = frame.independent_subset(order)
    simplices = [tuple(sorted(start))]
    for p in order:
        if p in start:
            continue
        count = {}
        opposite = {}
        for s in simplices:
            for v in s:
                f = tuple(x for x in s if x != v)
                count[f] = count.get(f, 0) + 1
                opposite[f] = v
        new = []
        for f, c in count.items():
            if c != 1:
                continue
            sp = frame.side(f, p)
            if sp != 0 and sp == -frame.side(f, opposite[f]):
                new.append(tuple(sorted(f + (p,))))
        simplices.extend(new)
    return simplices


def hull_volume(frame):
    return sum(frame.simplex_volume(s) for s in placing_triangulation(frame))


def separating_functional(pts_a, pts_b):
    """
    Affine functional h with h = 0 on the common points, h < 0 on the rest
    of ``pts_a`` and h > 0 on the rest of ``pts_b``; None if none exists.

    When it exists, conv(a) and conv(b) meet exactly in conv(common points),
    a face of both.
    """
    sa, sb = set(map(tuple, pts_a)), set(map(tuple, pts_b))
    common = sa & sb
    only_a, only_b = sa - common, sb - common
    dim = len(next(iter(sa | sb)))
    nv = dim + 1
    A_eq = [list(p) + [1] for p in sorted(common)]
    b_eq = [0] * len(A_eq)
    A_ub, b_ub = [], []
    for p in sorted(only_a):
        A_ub.append(list(p) + [1])
        b_ub.append(-1)
    for p in sorted(only_b):
        A_ub.append([-x for x in p] + [-1])
        b_ub.append(-1)
    sol = feasible_point(A_ub, b_ub, A_eq, b_eq, nvars=nv)
    if sol is None:
        return None
    return sol[:-1], sol[-1]


def in_convex_hull(q, pts):
    """Exact membership test of q in conv(pts)."""
    pts = [list(p) for p in pts]
    if not pts:
        return False
    n = len(pts)
    dim = len(q)
    A_eq = [[p[j] for p in pts] for j in range(dim)] + [[1] * n]
    b_eq = list(q) + [1]
    A_ub = [[-1 if i == j else 0 for i in range(n)] for j in range(n)]
    b_ub = [0] * n
    return feasible_point(A_ub, b_ub, A_eq, b_eq, nvars=n) is not None
