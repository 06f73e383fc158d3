"""
Points of G(k, n) as row spaces of k x n rational matrices.

Coordinate labels and k-subsets are 1-based and written as increasing
tuples, e.g. (1, 3) for p_13.  Subsets are always enumerated in
lexicographic order.
"""

from fractions import Fraction
from itertools import combinations

from .errors import BadParams, DimensionDrop, ZeroColumn
from .exactcore import RationalMatrix, kernel_basis, minor, rank
from .exactcore.rational import format_rational, parse_rational


def k_subsets(n, k):
    return list(combinations(range(1, n + 1), k))


def subset_key(I):
    return ",".join(str(i) for i in I)


def parse_subset_key(key):
    key = key.strip()
    return tuple(int(x) for x in key.split(",")) if key else ()


class Subspace:
    """A k-dimensional subspace of Q^n, given as the row space of a matrix."""

    def __init__(self, matrix):
        if not isinstance(matrix, RationalMatrix):
            matrix = RationalMatrix.from_rows(matrix)
        k, n = matrix.shape
        if not 1 <= k < n:
            raise BadParams(f"need 1 <= k < n, got k={k}, n={n}")
        if rank(matrix) != k:
            raise DimensionDrop(f"{k} rows span a space of dimension {rank(matrix)}")
        self.k, self.n, self.matrix = k, n, matrix

    @classmethod
    def from_rows(cls, rows):
        return cls(RationalMatrix.from_rows(rows))

    def canonical(self):
        """Reduced row echelon form; equal for equal subspaces."""
        return self.matrix.rref()[0]

    def __eq__(self, other):
        return (isinstance(other, Subspace) and (self.k, self.n) == (other.k, other.n)
                and self.canonical() == other.canonical())

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"Subspace(k={self.k}, n={self.n}, rows={self.matrix.to_json()})"

    def contains(self, vector):
        return rank(self.matrix.stack(RationalMatrix.from_rows([vector]))) == self.k

    def to_json(self):
        return {"k": self.k, "n": self.n, "rows": self.matrix.to_json()}

    @classmethod
    def from_json(cls, data):
        s = cls(RationalMatrix.from_json(data["rows"]))
        if ("k" in data and data["k"] != s.k) or ("n" in data and data["n"] != s.n):
            raise BadParams("declared k, n disagree with the rows")
        return s


class PluckerVector:
    """Plücker coordinates p_I, keyed by increasing 1-based k-subsets."""

    def __init__(self, k, n, coords):
        self.k, self.n = k, n
        self.coords = {I: Fraction(coords.get(I, 0)) for I in k_subsets(n, k)}
        if not any(self.coords.values()):
            raise BadParams("all Plücker coordinates vanish")

    def __getitem__(self, I):
        return self.coords[tuple(sorted(I))]

    def support(self):
        return {I for I, v in self.coords.items() if v}

    def is_proportional(self, other):
        if (self.k, self.n) != (other.k, other.n) or self.support() != other.support():
            return False
        ref = next(I for I in self.coords if self.coords[I])
        ratio = other.coords[ref] / self.coords[ref]
        return all(other.coords[I] == ratio * v for I, v in self.coords.items())

    def to_json(self):
        return {"k": self.k, "n": self.n,
                "coords": {subset_key(I): format_rational(v) for I, v in self.coords.items()}}

    @classmethod
    def from_json(cls, data):
        coords = {parse_subset_key(key): parse_rational(str(v))
                  for key, v in data["coords"].items()}
        return cls(data["k"], data["n"], coords)


def plucker(s):
    cols = {}
    for I in k_subsets(s.n, s.k):
        cols[I] = minor(s.matrix, range(s.k), [i - 1 for i in I])
    return PluckerVector(s.k, s.n, cols)


def plucker_relation_residuals(p):
    """Three-term relations p_ij p_lm - p_il p_jm + p_im p_jl for k = 2."""
    if p.k != 2:
        raise BadParams("three-term relations are for k = 2")
    out = {}
    for i, j, l, m in combinations(range(1, p.n + 1), 4):
        out[(i, j, l, m)] = (p[(i, j)] * p[(l, m)] - p[(i, l)] * p[(j, m)]
                             + p[(i, m)] * p[(j, l)])
    return out


def subspace_from_plucker(p):
    """
    Row space with the given Plücker vector (assumed decomposable).

    Uses a basis I0 with p_I0 != 0: row r has entry p_{I0 - i_r + j} with the
    sign of moving j into position r.
    """
    I0 = next(I for I in k_subsets(p.n, p.k) if p.coords[I])
    rows = []
    for r, ir in enumerate(I0):
        row = []
        for j in range(1, p.n + 1):
            if j in I0 and j != ir:
                row.append(Fraction(0))
                continue
            J = list(I0)
            J[r] = j
            # sign of the permutation sorting J
            inv = sum(1 for a, b in combinations(range(len(J)), 2) if J[a] > J[b])
            val = p.coords[tuple(sorted(J))]
            row.append(-val if inv % 2 else val)
        rows.append(row)
    return Subspace.from_rows(rows)


def is_generic(s):
    """True iff every Plücker coordinate is nonzero."""
    return all(plucker(s).coords.values())


def matroid_bases(s):
    return plucker(s).support()


def _check_index(s, i):
    if not 1 <= i <= s.n:
        raise BadParams(f"coordinate index {i} out of range 1..{s.n}")


def intersect_coord_hyperplane(s, i):
    """
    L ∩ {x_i = 0}, viewed inside Q^{n-1} by deleting coordinate i.

    Raises DimensionDrop unless the intersection has dimension k - 1.
    """
    _check_index(s, i)
    col = s.matrix.column(i - 1)
    if not any(col):
        raise DimensionDrop(f"subspace lies in the hyperplane x_{i} = 0")
    if s.k == 1:
        raise DimensionDrop("intersection of a line with x_i = 0 is zero")
    combos = kernel_basis(RationalMatrix.from_rows([col]))
    new = combos @ s.matrix
    new = new.delete_column(i - 1)
    if rank(new) != s.k - 1:
        raise DimensionDrop("intersection has the wrong dimension")
    return Subspace(new)


def project_away(s, i):
    """Image of L under the projection forgetting coordinate i."""
    _check_index(s, i)
    m = s.matrix.delete_column(i - 1)
    if rank(m) < s.k:
        raise DimensionDrop(f"projection away from x_{i} drops the rank")
    if s.k == s.n - 1:
        raise BadParams("image is all of Q^(n-1), outside G(k, n-1) with k < n-1")
    return Subspace(m)


def gm_configuration(s):
    """The n columns of the matrix as points of P^(k-1)."""
    from .configurations import Configuration

    for j, c in enumerate(s.matrix.columns(), start=1):
        if not any(c):
            raise ZeroColumn(f"column {j} is zero")
    return Configuration(s.matrix)


def configuration_to_subspace(c):
    """Row space of a configuration's matrix (inverse of gm_configuration)."""
    return Subspace(c.matrix)


def relabel_after_removal(subsets, i):
    """Close the gap left by deleting label i (order preserving)."""
    return {tuple(j - (j > i) for j in I) for I in subsets}
