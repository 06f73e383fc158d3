"""
The hypersimplex Δ(k, n), matroid polytopes inside it and matroid
decompositions.

A vertex e_I is stored as the increasing 1-based tuple I.  Geometry is done
on the indicator vectors with the last coordinate dropped, which is a lattice
isomorphism of the hyperplane sum(x) = k onto Z^(n-1).
"""

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import BadParams, NotFullDimensional
from .exactcore.lp import feasible_point
from .exactcore.polyhedra import AffineFrame, affine_rank, hull_volume, separating_functional
from .grassmann import k_subsets, matroid_bases, parse_subset_key, subset_key


def _point(I, n):
    return tuple(1 if j in I else 0 for j in range(1, n))


class MatroidPolytope:
    """Convex hull of e_I over a set of k-subsets I of {1..n}."""

    def __init__(self, k, n, vertices):
        self.k, self.n = k, n
        self.vertices = frozenset(tuple(sorted(I)) for I in vertices)
        if not self.vertices:
            raise BadParams("a polytope needs at least one vertex")
        for I in self.vertices:
            if len(I) != k or len(set(I)) != k or not all(1 <= i <= n for i in I):
                raise BadParams(f"{I} is not a {k}-subset of 1..{n}")

    def __eq__(self, other):
        return (isinstance(other, MatroidPolytope)
                and (self.k, self.n, self.vertices) == (other.k, other.n, other.vertices))

    def __hash__(self):
        return hash((self.k, self.n, self.vertices))

    def __repr__(self):
        vs = " ".join("".join(map(str, I)) for I in sorted(self.vertices))
        return f"MatroidPolytope(k={self.k}, n={self.n}, {{{vs}}})"

    def points(self):
        return [_point(I, self.n) for I in sorted(self.vertices)]

    def dimension(self):
        return affine_rank(self.points())

    def to_json(self):
        return {"k": self.k, "n": self.n,
                "vertices": [subset_key(I) for I in sorted(self.vertices)]}

    @classmethod
    def from_json(cls, data):
        return cls(data["k"], data["n"], [parse_subset_key(v) for v in data["vertices"]])


class MatroidDecomposition:
    def __init__(self, k, n, pieces):
        self.k, self.n = k, n
        self.pieces = [p if isinstance(p, MatroidPolytope) else MatroidPolytope(k, n, p)
                       for p in pieces]
        for p in self.pieces:
            if (p.k, p.n) != (k, n):
                raise BadParams("piece lives in a different hypersimplex")

    def piece_sets(self):
        return frozenset(p.vertices for p in self.pieces)

    def __eq__(self, other):
        return (isinstance(other, MatroidDecomposition)
                and (self.k, self.n) == (other.k, other.n)
                and self.piece_sets() == other.piece_sets())

    def __hash__(self):
        return hash((self.k, self.n, self.piece_sets()))

    def __repr__(self):
        return f"MatroidDecomposition(k={self.k}, n={self.n}, pieces={self.pieces})"

    def to_json(self):
        ordered = sorted(self.pieces, key=lambda p: sorted(p.vertices))
        return [p.to_json() for p in ordered]

    @classmethod
    def from_json(cls, data):
        if isinstance(data, dict):
            k, n = data["k"], data["n"]
            pieces = [MatroidPolytope.from_json({"k": k, "n": n, **q}) if "k" not in q
                      else MatroidPolytope.from_json(q) for q in data["pieces"]]
        else:
            pieces = [MatroidPolytope.from_json(q) for q in data]
            if not pieces:
                raise BadParams("empty decomposition")
            k, n = pieces[0].k, pieces[0].n
        return cls(k, n, pieces)


def _check_kn(k, n):
    if not 1 <= k <= n - 1:
        raise BadParams(f"need 1 <= k <= n-1, got k={k}, n={n}")


def hypersimplex_vertices(k, n):
    _check_kn(k, n)
    return k_subsets(n, k)


def hypersimplex(k, n):
    return MatroidPolytope(k, n, hypersimplex_vertices(k, n))


def facet(k, n, i, sign):
    """
    The facet Γ_i^+ = {i ∈ I} or Γ_i^- = {i ∉ I} of Δ(k, n).

    Returns (polytope, relabel) where relabel maps a vertex of the facet to
    the corresponding vertex of Δ(k-1, n-1) (for +) or Δ(k, n-1) (for -).
    """
    _check_kn(k, n)
    if not 1 <= i <= n:
        raise BadParams(f"index {i} out of range 1..{n}")
    if sign not in ("+", "-"):
        raise BadParams("sign must be '+' or '-'")
    if sign == "+" and k == 1:
        raise BadParams("Γ+ of Δ(1, n) is a vertex, not a facet")
    if sign == "-" and k == n - 1:
        raise BadParams("Γ- of Δ(n-1, n) is a vertex, not a facet")
    if sign == "+":
        verts = [I for I in k_subsets(n, k) if i in I]

        def relabel(I):
            return tuple(j - (j > i) for j in I if j != i)
    else:
        verts = [I for I in k_subsets(n, k) if i not in I]

        def relabel(I):
            return tuple(j - (j > i) for j in I)
    return MatroidPolytope(k, n, verts), relabel


def facet_target(k, n, sign):
    return (k - 1, n - 1) if sign == "+" else (k, n - 1)


def satisfies_exchange(vertices):
    """Basis-exchange axiom for a family of equal-size sets."""
    bases = {frozenset(I) for I in vertices}
    if not bases:
        return False
    if len({len(B) for B in bases}) != 1:
        return False
    for B1 in bases:
        for B2 in bases:
            for x in B1 - B2:
                if not any((B1 - {x}) | {y} in bases for y in B2 - B1):
                    return False
    return True


def hull_edges(points):
    """Pairs (a, b) of point indices spanning edges of conv(points)."""
    pts = [list(p) for p in points]
    dim = len(pts[0])
    edges = []
    for a, b in combinations(range(len(pts)), 2):
        A_eq = [pts[a] + [1], pts[b] + [1]]
        A_ub = [pts[c] + [1] for c in range(len(pts)) if c not in (a, b)]
        if feasible_point(A_ub, [-1] * len(A_ub), A_eq, [0, 0], nvars=dim + 1) is not None:
            edges.append((a, b))
    return edges


def edges_are_roots(vertices, n):
    """Geometric oracle: every hull edge is parallel to some e_i - e_j."""
    vs = sorted(vertices)
    if len(vs) == 1:
        return True
    pts = [_point(I, n) for I in vs]
    return all(len(set(vs[a]) ^ set(vs[b])) == 2 for a, b in hull_edges(pts))


def is_matroid_polytope(p, oracle_limit=12):
    """
    Basis-exchange test.  For at most ``oracle_limit`` vertices the answer is
    also cross-checked against the hull-edge characterisation.
    """
    verts = p.vertices if isinstance(p, MatroidPolytope) else p
    ok = satisfies_exchange(verts)
    if len(verts) <= oracle_limit:
        n = p.n if isinstance(p, MatroidPolytope) else max(max(I) for I in verts)
        geometric = edges_are_roots(verts, n)
        if geometric != ok:
            raise AssertionError(f"exchange test and edge oracle disagree on {sorted(verts)}")
    return ok


def matroid_polytope_of(s):
    return MatroidPolytope(s.k, s.n, matroid_bases(s))


def relation_polytope(n, blocks):
    """
    M(J, R) for k = 2: vertices e_ij with i, j in different blocks of the
    equivalence relation R on J = union of blocks.
    """
    where = {x: b for b, block in enumerate(blocks) for x in block}
    J = sorted(where)
    verts = [(i, j) for i, j in combinations(J, 2) if where[i] != where[j]]
    return MatroidPolytope(2, n, verts)


@lru_cache(maxsize=None)
def _volume(n, vertices):
    frame = AffineFrame([_point(I, n) for I in sorted(vertices)])
    if frame.dim != n - 1:
        return None
    return hull_volume(frame)


def normalized_volume(p):
    """Lattice-normalised volume of a full-dimensional polytope in Δ(k, n)."""
    v = _volume(p.n, p.vertices)
    if v is None:
        raise NotFullDimensional(f"polytope has dimension {p.dimension()} < {p.n - 1}")
    return v


def eulerian_number(m, j):
    """A(m, j); normalized_volume(Δ(k, n)) equals A(n-1, k-1). Test oracle only."""
    return sum((-1) ** i * comb(m + 1, i) * (j + 1 - i) ** m for i in range(j + 2))


@lru_cache(maxsize=None)
def _meets_in_common_face(n, va, vb):
    pa = [_point(I, n) for I in sorted(va)]
    pb = [_point(I, n) for I in sorted(vb)]
    return separating_functional(pa, pb) is not None


def meets_in_common_face(p, q):
    return _meets_in_common_face(p.n, p.vertices, q.vertices)


@lru_cache(maxsize=None)
def _exchange(vertices):
    return satisfies_exchange(vertices)


def decomposition_report(d, jobs=1, oracle_limit=0):
    """
    Per-criterion results of the decomposition test (dict of bools).

    Pieces are checked with the exchange axiom; ``oracle_limit`` turns on the
    slower hull-edge cross-check for pieces with that many vertices or fewer.
    """
    report = {"matroid": True, "full_dimensional": True, "volume": False, "faces": False}
    vols = []
    for p in d.pieces:
        ok = (is_matroid_polytope(p, oracle_limit) if oracle_limit
              else _exchange(p.vertices))
        if not ok:
            report["matroid"] = False
        v = _volume(p.n, p.vertices)
        if v is None:
            report["full_dimensional"] = False
        else:
            vols.append(v)
    if not (report["matroid"] and report["full_dimensional"]):
        return report
    report["volume"] = sum(vols) == normalized_volume(hypersimplex(d.k, d.n))
    if not report["volume"]:
        return report
    pairs = list(combinations(d.pieces, 2))
    if jobs > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda pq: meets_in_common_face(*pq), pairs))
    else:
        results = [meets_in_common_face(p, q) for p, q in pairs]
    report["faces"] = all(results)
    return report


def is_matroid_decomposition(d, jobs=1, oracle_limit=0):
    return all(decomposition_report(d, jobs, oracle_limit).values())


def restrict_to_facet(d, i, sign):
    """Intersect every piece with Γ_i^sign and relabel onto the smaller hypersimplex."""
    fac, relabel = facet(d.k, d.n, i, sign)
    k2, n2 = facet_target(d.k, d.n, sign)
    pieces = []
    for p in d.pieces:
        sub = p.vertices & fac.vertices
        if not sub:
            continue
        q = MatroidPolytope(k2, n2, [relabel(I) for I in sub])
        if q.dimension() == n2 - 1:
            pieces.append(q)
    return MatroidDecomposition(k2, n2, pieces)
