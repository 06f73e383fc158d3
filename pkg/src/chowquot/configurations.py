"""
Configurations of n points in P^(k-1), stored as the columns of a k x n
matrix: general position, cross-ratio, association, circuits and the conic
test for six points in the plane.
"""

from fractions import Fraction
from itertools import combinations

from .errors import BadParams, CoincidentPoints, NotGeneric, ZeroColumn
from .exactcore import RationalMatrix, det, kernel_basis, minor, rank


class _Infinity:
    """The point (1 : 0) of P^1."""

    def __repr__(self):
        return "INF"


INF = _Infinity()


class Configuration:
    def __init__(self, matrix):
        if not isinstance(matrix, RationalMatrix):
            matrix = RationalMatrix.from_rows(matrix)
        self.k, self.n = matrix.shape
        if self.k < 1 or self.n < 1:
            raise BadParams("empty configuration")
        for j, c in enumerate(matrix.columns(), start=1):
            if not any(c):
                raise ZeroColumn(f"column {j} is zero")
        self.matrix = matrix

    @classmethod
    def from_columns(cls, columns):
        return cls(RationalMatrix.from_columns(columns))

    def columns(self):
        return self.matrix.columns()

    def __repr__(self):
        return f"Configuration(k={self.k}, n={self.n}, columns={self.to_json()['columns']})"

    def to_json(self):
        return {"k": self.k, "n": self.n, "columns": self.matrix.transpose().to_json()}

    @classmethod
    def from_json(cls, data):
        c = cls(RationalMatrix.from_json(data["columns"]).transpose())
        if ("k" in data and data["k"] != c.k) or ("n" in data and data["n"] != c.n):
            raise BadParams("declared k, n disagree with the columns")
        return c


def maximal_minors(c):
    return {I: minor(c.matrix, range(c.k), [i - 1 for i in I])
            for I in combinations(range(1, c.n + 1), c.k)}


def is_general_position(c):
    """Every set of at most k columns is linearly independent."""
    if c.n < c.k:
        return rank(c.matrix) == c.n
    return all(maximal_minors(c).values())


def _homog(p):
    if p is INF:
        return (Fraction(1), Fraction(0))
    if isinstance(p, tuple):
        return (Fraction(p[0]), Fraction(p[1]))
    return (Fraction(p), Fraction(1))


def cross_ratio(p1, p2, p3, p4):
    """
    r = [13][24] / ([14][23]) with [ij] = x_i y_j - x_j y_i, i.e.
    (x1-x3)(x2-x4) / ((x1-x4)(x2-x3)) in the affine chart.  Points are
    rationals, INF, or homogeneous pairs.  Returns a Fraction or INF.
    """
    pts = [_homog(p) for p in (p1, p2, p3, p4)]

    def br(i, j):
        (a, b), (c, d) = pts[i], pts[j]
        return a * d - c * b

    for i, j in combinations(range(4), 2):
        if br(i, j) == 0:
            raise CoincidentPoints(f"points {i + 1} and {j + 1} coincide")
    return br(0, 2) * br(1, 3) / (br(0, 3) * br(1, 2))


def associate(c):
    """The associated configuration of n points in P^(n-k-1)."""
    if c.n < c.k + 2:
        raise NotGeneric("association needs n >= k + 2")
    if not is_general_position(c):
        raise NotGeneric("configuration is not in general position")
    return Configuration(kernel_basis(c.matrix))


def tensor_relation(c, d):
    """
    The coefficients λ with Σ λ_i x_i ⊗ y_i = 0, where x_i, y_i are the
    columns of c and d.  Raises NotGeneric unless they are unique up to scale.
    """
    if c.n != d.n:
        raise BadParams("configurations have different sizes")
    X, Y = c.matrix, d.matrix
    rows = [[X[a, i] * Y[b, i] for i in range(c.n)] for a in range(c.k) for b in range(d.k)]
    ker = kernel_basis(RationalMatrix.from_rows(rows, cols=c.n))
    if ker.rows != 1:
        raise NotGeneric(f"space of relations has dimension {ker.rows}")
    lam = list(ker.row(0))
    first = next(x for x in lam if x)
    return [x / first for x in lam]


def segre_points(c, d):
    """The vectors x_i ⊗ y_i."""
    X, Y = c.matrix, d.matrix
    return [[X[a, i] * Y[b, i] for a in range(c.k) for b in range(d.k)] for i in range(c.n)]


def is_circuit(points):
    """Dependent as a whole, but every proper subset is independent."""
    pts = [list(p) for p in points]
    m = len(pts)
    if m < 2:
        return False
    if rank(RationalMatrix.from_rows(pts)) != m - 1:
        return False
    return all(rank(RationalMatrix.from_rows(pts[:i] + pts[i + 1:])) == m - 1 for i in range(m))


def _torus_normal_form(m, basis):
    """X_B^{-1} X for a basis B of columns."""
    xb = m.submatrix(range(m.rows), basis)
    inv = _inverse(xb)
    return inv @ m


def _inverse(m):
    n = m.rows
    aug = RationalMatrix.from_rows([list(m.row(i)) + [int(i == j) for j in range(n)] for i in range(n)])
    r, _ = aug.rref()
    return r.submatrix(range(n), range(n, 2 * n))


def projectively_equivalent(c, d):
    """
    Is there g in GL(k) and a diagonal D with d = g c D?

    After moving a common basis of columns to the identity, the remaining
    freedom is a row and column scaling; the test propagates those scalings
    along the nonzero entries and checks every entry.
    """
    if (c.k, c.n) != (d.k, d.n):
        return False
    pc, pd = maximal_minors(c), maximal_minors(d)
    if {I for I, v in pc.items() if v} != {I for I, v in pd.items() if v}:
        return False
    if c.k == c.n:
        return True
    B = next((I for I, v in pc.items() if v), None)
    if B is None:
        return False
    basis = [i - 1 for i in B]
    X = _torus_normal_form(c.matrix, basis)
    Y = _torus_normal_form(d.matrix, basis)
    k, n = c.k, c.n
    # y_ij = x_ij * s_j / r_i ; unknowns r (rows) and s (columns)
    r, s = {}, {}
    for start in range(k):
        if start in r:
            continue
        r[start] = Fraction(1)
        stack = [("r", start)]
        while stack:
            kind, idx = stack.pop()
            if kind == "r":
                for j in range(n):
                    if X[idx, j] and j not in s:
                        s[j] = Y[idx, j] * r[idx] / X[idx, j]
                        stack.append(("s", j))
            else:
                for i in range(k):
                    if X[i, idx] and i not in r:
                        r[i] = X[i, idx] * s[idx] / Y[i, idx]
                        stack.append(("r", i))
    for i in range(k):
        for j in range(n):
            x, y = X[i, j], Y[i, j]
            if (x == 0) != (y == 0):
                return False
            if x and (s.get(j) is None or y * r[i] != x * s[j]):
                return False
    return True


def six_point_normal_form(c):
    """
    (a, b, c, d) such that, after sending x1, x2, x3 to the coordinate
    triangle and rescaling, the coordinates of x4, x5, x6 form
    [[1, 1, 1], [1, a, b], [1, c, d]] (one row per point).
    """
    if (c.k, c.n) != (3, 6):
        raise BadParams("normal form is for 6 points in P^2")
    if not is_general_position(c):
        raise NotGeneric("configuration is not in general position")
    m = _torus_normal_form(c.matrix, [0, 1, 2])
    a = [[m[nu, j] for nu in range(3)] for j in range(3, 6)]
    a = [[x / row[0] for x in row] for row in a]
    a = [[row[j] / a[0][j] for j in range(3)] for row in a]
    return a[1][1], a[1][2], a[2][1], a[2][2]


def normal_form_matrix(a, b, c, d):
    return [[1, 1, 1], [1, a, b], [1, c, d]]


def normal_form_minors_nonzero(a, b, c, d):
    m = RationalMatrix.from_rows(normal_form_matrix(a, b, c, d))
    for size in (1, 2, 3):
        for rs in combinations(range(3), size):
            for cs in combinations(range(3), size):
                if minor(m, rs, cs) == 0:
                    return False
    return True


def psi(a, b, c, d):
    return a * d - b * c + a * b * c + b * c * d - a * c * d - a * b * d


def veronese_lift(col):
    x, y, z = col
    return [x * x, y * y, z * z, x * y, x * z, y * z]


def lies_on_conic(c):
    """Six points in general position lie on a conic iff their Veronese lifts are dependent."""
    if (c.k, c.n) != (3, 6):
        raise BadParams("conic test is for 6 points in P^2")
    if not is_general_position(c):
        raise NotGeneric("configuration is not in general position")
    return det(RationalMatrix.from_rows([veronese_lift(col) for col in c.columns()])) == 0


def complementary_sign(I, n):
    """Sign of the permutation (I, complement of I) of 1..n."""
    comp = [j for j in range(1, n + 1) if j not in I]
    perm = list(I) + comp
    inv = sum(1 for a, b in combinations(range(n), 2) if perm[a] > perm[b])
    return -1 if inv % 2 else 1


def duality_scale(c, d):
    """
    The constant κ with p_I(c) = κ · sign(I, Ī) · p_Ī(d) for all I, or None
    if no such constant exists.
    """
    pc, pd = maximal_minors(c), maximal_minors(d)
    kappa = None
    for I, v in pc.items():
        comp = tuple(j for j in range(1, c.n + 1) if j not in I)
        w = complementary_sign(I, c.n) * pd[comp]
        if (v == 0) != (w == 0):
            return None
        if v:
            ratio = v / w
            if kappa is None:
                kappa = ratio
            elif ratio != kappa:
                return None
    return kappa
