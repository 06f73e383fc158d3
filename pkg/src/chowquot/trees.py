"""
Trees with n labelled endpoints and internal valence >= 3.

These index the matroid decompositions of Δ(2, n) and the boundary strata of
the moduli space of stable n-pointed rational curves.  Leaves are the vertex
ids "L1".."Ln"; internal vertices are "v1", "v2", ...
"""

from itertools import combinations

from .errors import BadParams, NotADecomposition, NotInternal, TooFewLeaves
from .hypersimplex import (
    MatroidDecomposition,
    MatroidPolytope,
    decomposition_report,
)
from .exactcore.polyhedra import affine_rank


def leaf(i):
    return f"L{i}"


def is_leaf_id(v):
    return v.startswith("L")


def leaf_label(v):
    return int(v[1:])


class LabeledTree:
    def __init__(self, n, edges):
        self.n = n
        self.edges = frozenset(frozenset(e) for e in edges)
        adj = {}
        for e in self.edges:
            if len(e) != 2:
                raise BadParams(f"bad edge {sorted(e)}")
            a, b = tuple(e)
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        self.adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._validate()

    def _validate(self):
        if self.n < 3:
            raise BadParams("a stable tree needs n >= 3 leaves")
        leaves = {v for v in self.adj if is_leaf_id(v)}
        if leaves != {leaf(i) for i in range(1, self.n + 1)}:
            raise BadParams("leaves must be exactly L1..Ln")
        for v, nb in self.adj.items():
            if is_leaf_id(v) and len(nb) != 1:
                raise BadParams(f"leaf {v} has valence {len(nb)}")
            if not is_leaf_id(v) and len(nb) < 3:
                raise BadParams(f"internal vertex {v} has valence {len(nb)} < 3")
        if len(self.edges) != len(self.adj) - 1:
            raise BadParams("edge count is not that of a tree")
        seen = {leaf(1)}
        stack = [leaf(1)]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(self.adj):
            raise BadParams("graph is not connected")

    @property
    def internal(self):
        return sorted((v for v in self.adj if not is_leaf_id(v)), key=_vkey)

    def valence(self, v):
        return len(self.adj[v])

    def components_without(self, v):
        """Leaf sets of the connected components of t - v, one per neighbour."""
        out = []
        for start in sorted(self.adj[v], key=_vkey):
            comp = set()
            seen = {v, start}
            stack = [start]
            while stack:
                u = stack.pop()
                if is_leaf_id(u):
                    comp.add(leaf_label(u))
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(frozenset(comp))
        return out

    def splits(self):
        """Nontrivial splits A|B (both sides >= 2) given by internal edges."""
        out = set()
        for e in self.edges:
            a, b = tuple(e)
            if is_leaf_id(a) or is_leaf_id(b):
                continue
            side = self._side(a, b)
            out.add(_normalize_split(side, self.n))
        return out

    def _side(self, a, b):
        """Leaves reachable from a without crossing the edge ab."""
        comp, seen, stack = set(), {a, b}, [a]
        while stack:
            u = stack.pop()
            if is_leaf_id(u):
                comp.add(leaf_label(u))
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(comp)

    def signature(self):
        """Canonical form rooted at the internal neighbour of leaf 1."""
        root = next(iter(self.adj[leaf(1)]))
        return _subtree_sig(self, root, None)

    def __eq__(self, other):
        return (isinstance(other, LabeledTree) and self.n == other.n
                and self.signature() == other.signature())

    def __hash__(self):
        return hash((self.n, self.signature()))

    def __repr__(self):
        return f"LabeledTree(n={self.n}, splits={sorted(sorted(s) for s in self.splits())})"

    def normalized(self):
        """Same tree with internal ids v1, v2, ... assigned in canonical order."""
        root = next(iter(self.adj[leaf(1)]))
        names = {}
        order = [(root, None)]
        # breadth-first from the root, children in signature order
        while order:
            v, parent = order.pop(0)
            names[v] = f"v{len(names) + 1}"
            kids = [w for w in self.adj[v] if w != parent and not is_leaf_id(w)]
            kids.sort(key=lambda w: _subtree_sig(self, w, v))
            order.extend((w, v) for w in kids)
        edges = []
        for e in self.edges:
            a, b = tuple(e)
            edges.append((names.get(a, a), names.get(b, b)))
        return LabeledTree(self.n, edges)

    def to_json(self):
        t = self.normalized()
        edges = sorted((sorted(e, key=_vkey) for e in t.edges), key=lambda e: [_vkey(x) for x in e])
        return {"n": t.n, "internal": t.internal, "edges": [list(e) for e in edges]}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], [tuple(e) for e in data["edges"]])


def _vkey(v):
    return (0 if is_leaf_id(v) else 1, int(v[1:]) if v[1:].isdigit() else 0, v)


def _subtree_sig(t, v, parent):
    if is_leaf_id(v):
        return ("L", leaf_label(v))
    return ("N",) + tuple(sorted(_subtree_sig(t, w, v) for w in t.adj[v] if w != parent))


def _normalize_split(side, n):
    """Represent a split by the side not containing leaf 1."""
    side = frozenset(side)
    return side if 1 not in side else frozenset(range(1, n + 1)) - side


def star_tree(n):
    return LabeledTree(n, [(leaf(i), "v1") for i in range(1, n + 1)])


def tree_from_splits(n, splits):
    """Build the tree whose internal edges realise a compatible split system."""
    full = frozenset(range(1, n + 1))
    splits = sorted({_normalize_split(s, n) for s in splits}, key=lambda s: (-len(s), sorted(s)))
    # clusters not containing leaf 1, plus the root cluster (everything)
    clusters = [full] + splits
    parent = {}
    for idx, c in enumerate(clusters[1:], start=1):
        best = min((j for j in range(idx) if c < clusters[j]), key=lambda j: len(clusters[j]))
        parent[idx] = best
    edges = []
    for idx, p in parent.items():
        edges.append((f"v{p + 1}", f"v{idx + 1}"))
    for i in range(1, n + 1):
        holder = min((j for j, c in enumerate(clusters) if i in c), key=lambda j: len(clusters[j]))
        edges.append((leaf(i), f"v{holder + 1}"))
    return LabeledTree(n, edges)


def vertex_relation(t, v):
    """Blocks of i ≅_v j: i and j lie in the same component of t - v."""
    if v not in t.adj or is_leaf_id(v):
        raise NotInternal(f"{v} is not an internal vertex")
    return sorted((frozenset(c) for c in t.components_without(v)), key=lambda b: min(b))


def _piece_of_blocks(n, blocks):
    where = {x: b for b, block in enumerate(blocks) for x in block}
    verts = [(i, j) for i, j in combinations(range(1, n + 1), 2) if where[i] != where[j]]
    return MatroidPolytope(2, n, verts)


def tree_to_decomposition(t):
    """One piece per internal vertex v: all e_ij whose leaf path passes v."""
    pieces = [_piece_of_blocks(t.n, vertex_relation(t, v)) for v in t.internal]
    return MatroidDecomposition(2, t.n, pieces)


def decomposition_to_tree(d, validate=True):
    """
    Inverse of tree_to_decomposition.

    Pieces become internal vertices, pieces sharing a facet are joined, and
    leaf i hangs off the piece containing the whole facet Γ_i^+.
    """
    if d.k != 2:
        raise NotADecomposition("trees encode decompositions of Δ(2, n) only")
    n = d.n
    if n < 3:
        raise NotADecomposition("need n >= 3")
    if validate:
        report = decomposition_report(d)
        if not all(report.values()):
            failed = [k for k, ok in report.items() if not ok]
            raise NotADecomposition("failed checks: " + ", ".join(failed))
    pieces = sorted(d.pieces, key=lambda p: sorted(p.vertices))
    names = [f"v{i + 1}" for i in range(len(pieces))]
    edges = []
    for a, b in combinations(range(len(pieces)), 2):
        common = pieces[a].vertices & pieces[b].vertices
        if len(common) >= n - 1:
            pts = [tuple(1 if j in I else 0 for j in range(1, n)) for I in sorted(common)]
            if affine_rank(pts) == n - 2:
                edges.append((names[a], names[b]))
    for i in range(1, n + 1):
        star = {tuple(sorted((i, j))) for j in range(1, n + 1) if j != i}
        holders = [names[a] for a, p in enumerate(pieces) if star <= p.vertices]
        if len(holders) != 1:
            raise NotADecomposition(f"facet Γ_{i}^+ lies in {len(holders)} pieces")
        edges.append((leaf(i), holders[0]))
    try:
        return LabeledTree(n, edges)
    except BadParams as exc:
        raise NotADecomposition(f"adjacency graph is not a stable tree: {exc}") from None


def enumerate_trees(n):
    """
    All trees with leaves 1..n up to label-preserving isomorphism, sorted by
    canonical signature.  Built by inserting leaf n into each tree on n-1
    leaves, either at an internal vertex or on a new vertex subdividing an edge.
    """
    if n < 3:
        raise BadParams("need n >= 3")
    current = {star_tree(3).signature(): star_tree(3)}
    for m in range(4, n + 1):
        nxt = {}
        for t in current.values():
            for new in _insertions(t, m):
                nxt.setdefault(new.signature(), new)
        current = nxt
    return [current[s].normalized() for s in sorted(current)]


def _insertions(t, m):
    base = [tuple(e) for e in t.edges]
    used = {int(v[1:]) for v in t.internal}
    fresh = f"v{max(used) + 1}"
    for v in t.internal:
        yield LabeledTree(m, base + [(leaf(m), v)])
    for e in t.edges:
        a, b = tuple(e)
        rest = [x for x in base if frozenset(x) != e]
        yield LabeledTree(m, rest + [(a, fresh), (fresh, b), (leaf(m), fresh)])


def is_stable_tree(t):
    """Every internal vertex has valence >= 3 (the constructor enforces this)."""
    return all(t.valence(v) >= 3 for v in t.internal)


def stratum_dimension(t):
    return sum(t.valence(v) - 3 for v in t.internal)


def forget_point(t, i):
    """
    Delete leaf i, suppress a resulting valence-2 vertex, and relabel leaves
    j > i to j - 1.
    """
    if t.n < 4:
        raise TooFewLeaves("forgetting a point needs n >= 4")
    if not 1 <= i <= t.n:
        raise BadParams(f"leaf {i} out of range")
    lf = leaf(i)
    (v,) = t.adj[lf]
    edges = [tuple(e) for e in t.edges if lf not in e]
    if t.valence(v) == 3:
        a, b = sorted(w for w in t.adj[v] if w != lf)
        edges = [e for e in edges if v not in e] + [(a, b)]

    def rename(x):
        if is_leaf_id(x) and leaf_label(x) > i:
            return leaf(leaf_label(x) - 1)
        return x

    return LabeledTree(t.n - 1, [(rename(a), rename(b)) for a, b in edges]).normalized()
