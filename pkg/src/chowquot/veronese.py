"""
The logarithmic Gauss map of a hyperplane arrangement, the Plücker
polynomials of its image (a special Veronese variety), Steiner matrices and
the determinantal equations of the sweep.

An arrangement is n linear forms f_i(z) = Σ_j a_ij z_j on Q^k, stored as an
n x k matrix.  Points of h = Q^n / Q(1, ..., 1) are represented by vectors
of Q^n, and subspaces of h by subspaces of Q^n containing e = (1, ..., 1).
"""

from fractions import Fraction
from itertools import combinations

from .errors import BadParams, ChartMismatch, NotGeneric, NotNormalized, OnArrangement
from .exactcore import MultiPoly, RationalMatrix, kernel_basis, minor, monomials, rank
from .grassmann import PluckerVector, Subspace, is_generic, k_subsets, plucker, subspace_from_plucker
from .configurations import cross_ratio


class HyperplaneArrangement:
    def __init__(self, forms):
        if not isinstance(forms, RationalMatrix):
            forms = RationalMatrix.from_rows(forms)
        self.n, self.k = forms.shape
        if self.k < 1 or self.n < self.k:
            raise BadParams(f"need n >= k >= 1, got n={self.n}, k={self.k}")
        self.forms = forms
        for I in combinations(range(self.n), self.k):
            if minor(forms, I, range(self.k)) == 0:
                raise NotGeneric(f"forms {[i + 1 for i in I]} are dependent")

    def coeffs(self, i):
        """Coefficients of f_i (1-based)."""
        return self.forms.row(i - 1)

    def value(self, i, z):
        return sum(a * Fraction(x) for a, x in zip(self.coeffs(i), z))

    def poly(self, i):
        return MultiPoly.linear_form(list(self.coeffs(i)))

    def to_json(self):
        return {"k": self.k, "n": self.n, "forms": self.forms.to_json()}

    @classmethod
    def from_json(cls, data):
        arr = cls(RationalMatrix.from_json(data["forms"]))
        if ("k" in data and data["k"] != arr.k) or ("n" in data and data["n"] != arr.n):
            raise BadParams("declared k, n disagree with the forms")
        return arr


class QuotientSubspace(Subspace):
    """A subspace of h, stored as a subspace of Q^n containing (1, ..., 1)."""

    def __init__(self, matrix):
        super().__init__(matrix)
        if not self.contains([1] * self.n):
            raise BadParams("row space does not contain (1, ..., 1)")

    @property
    def dim_h(self):
        return self.k - 1


def _check_point(arr, z):
    z = [Fraction(x) for x in z]
    if len(z) != arr.k:
        raise BadParams(f"point needs {arr.k} coordinates")
    if not any(z):
        raise BadParams("the zero vector is not a projective point")
    return z


def gauss_matrix(arr, z):
    """N(z): entry (j, i) = a_ij / f_i(z), the logarithmic derivatives."""
    z = _check_point(arr, z)
    vals = [arr.value(i, z) for i in range(1, arr.n + 1)]
    for i, v in enumerate(vals, start=1):
        if v == 0:
            raise OnArrangement(f"f_{i} vanishes at the point")
    return RationalMatrix.from_rows(
        [[arr.forms[i, j] / vals[i] for i in range(arr.n)] for j in range(arr.k)]
    )


def log_gauss(arr, z):
    return QuotientSubspace(gauss_matrix(arr, z))


def euler_vector(arr, z):
    """z · N(z); equals (1, ..., 1) at every point off the arrangement."""
    N = gauss_matrix(arr, z)
    z = [Fraction(x) for x in z]
    return [sum(z[j] * N[j, i] for j in range(arr.k)) for i in range(arr.n)]


def plucker_polys(arr):
    """P_I(z) = det(a_I) · Π_{i ∉ I} f_i(z) for every k-subset I."""
    out = {}
    for I in k_subsets(arr.n, arr.k):
        p = MultiPoly.constant(arr.k, minor(arr.forms, [i - 1 for i in I], range(arr.k)))
        for i in range(1, arr.n + 1):
            if i not in I:
                p = p * arr.poly(i)
        out[I] = p
    return out


def plucker_at(arr, z, polys=None):
    polys = plucker_polys(arr) if polys is None else polys
    z = [Fraction(x) for x in z]
    return PluckerVector(arr.k, arr.n, {I: p.evaluate(z) for I, p in polys.items()})


def plucker_span_rank(arr, polys=None):
    """Rank of the coefficient matrix of the P_I."""
    polys = plucker_polys(arr) if polys is None else polys
    mons = monomials(arr.k, arr.n - arr.k)
    return rank(RationalMatrix.from_rows([p.coefficient_vector(mons) for p in polys.values()],
                                         cols=len(mons)))


def intersection_point(arr, indices):
    """The point where the forms with the given k-1 indices vanish."""
    idx = sorted(indices)
    if len(set(idx)) != arr.k - 1 or not all(1 <= i <= arr.n for i in idx):
        raise BadParams(f"need {arr.k - 1} distinct indices in 1..{arr.n}")
    if arr.k == 1:
        return [Fraction(1)]
    ker = kernel_basis(RationalMatrix.from_rows([arr.coeffs(i) for i in idx], cols=arr.k))
    return list(ker.row(0))


def marked_point(arr, indices):
    """Image of M_{i1} ∩ ... ∩ M_{i(k-1)} under the extended Gauss map."""
    z = intersection_point(arr, indices)
    return QuotientSubspace(subspace_from_plucker(plucker_at(arr, z)).matrix)


def expected_marked_point(n, indices):
    """The coordinate subspace <e, e_i1, ..., e_i(k-1)>."""
    rows = [[1] * n] + [[int(j == i) for j in range(1, n + 1)] for i in sorted(indices)]
    return QuotientSubspace(rows)


def _check_chart(arr):
    k, n = arr.k, arr.n
    if k < 2 or n < k + 1:
        raise BadParams("the Steiner matrix needs k >= 2 and n >= k + 1")
    for i in range(1, k):
        if list(arr.coeffs(i)) != [int(j == i) for j in range(1, k + 1)]:
            raise ChartMismatch(f"f_{i} is not z_{i}")
    if list(arr.coeffs(n)) != [int(j == k) for j in range(1, k + 1)]:
        raise ChartMismatch(f"f_{n} is not z_{k}")


def steiner_forms(arr):
    """(n-k) x (n-1) matrix of linear forms in z_1..z_k (MultiPoly entries)."""
    _check_chart(arr)
    k, n = arr.k, arr.n
    zero = MultiPoly.constant(k, 0)
    rows = []
    for j in range(k, n):
        row = [zero] * (n - 1)
        for nu in range(1, k):
            row[nu - 1] = MultiPoly.variable(k, nu - 1) * MultiPoly.constant(k, -arr.forms[j - 1, nu - 1])
        row[j - 1] = arr.poly(j)
        rows.append(row)
    return rows


def steiner_matrix(arr, z):
    z = _check_point(arr, z)
    return RationalMatrix.from_rows([[p.evaluate(z) for p in row] for row in steiner_forms(arr)],
                                    cols=arr.n - 1)


def to_chart(s):
    """Image of a subspace of Q^n containing e in the coordinates y_i = t_i - t_n."""
    rows = [[r[i] - r[-1] for i in range(len(r) - 1)] for r in s.matrix.to_rows()]
    m = RationalMatrix.from_rows(rows, cols=s.n - 1)
    reduced, _ = m.rref()
    return Subspace(reduced)


def steiner_kernel(arr, z):
    ker = kernel_basis(steiner_matrix(arr, z))
    return Subspace(ker)


def _check_normalized(arr):
    k, n = arr.k, arr.n
    if k > n - k:
        raise BadParams("the sweep matrix needs k <= n - k")
    for i in range(1, k + 1):
        if list(arr.coeffs(i)) != [int(j == i) for j in range(1, k + 1)]:
            raise NotNormalized(f"f_{i} is not z_{i}")


def sweep_matrix(arr, t):
    """k x (n-k) matrix with entries a_ji (t_j - t_i), i <= k < j."""
    _check_normalized(arr)
    k, n = arr.k, arr.n
    t = [Fraction(x) for x in t]
    if len(t) != n:
        raise BadParams(f"point of h needs {n} coordinates")
    return RationalMatrix.from_rows(
        [[arr.forms[j, i] * (t[j] - t[i]) for j in range(k, n)] for i in range(k)]
    )


def on_sweep(arr, t):
    return rank(sweep_matrix(arr, t)) < arr.k


def tangent_system(a, b, c, d):
    """Coefficients of t2-t4 = a(t2-t5) = b(t2-t6), t3-t4 = c(t3-t5) = d(t3-t6)."""
    return [
        [0, 1 - a, 0, -1, a, 0],
        [0, 1 - b, 0, -1, 0, b],
        [0, 0, 1 - c, -1, c, 0],
        [0, 0, 1 - d, -1, 0, d],
    ]


def tangent_system_rank(a, b, c, d):
    return rank(RationalMatrix.from_rows(tangent_system(*(Fraction(x) for x in (a, b, c, d)))))


def tangent_system_symbolic():
    """The same system over Q[a, b, c, d] (MultiPoly entries)."""
    a, b, c, d = (MultiPoly.variable(4, i) for i in range(4))
    one = MultiPoly.constant(4, 1)
    zero = MultiPoly.constant(4, 0)
    return [
        [zero, one - a, zero, -one, a, zero],
        [zero, one - b, zero, -one, zero, b],
        [zero, zero, one - c, -one, c, zero],
        [zero, zero, one - d, -one, zero, d],
    ]


def psi_poly():
    a, b, c, d = (MultiPoly.variable(4, i) for i in range(4))
    return a * d - b * c + a * b * c + b * c * d - a * c * d - a * b * d


def tetrahedral_ratio(s):
    """λ = -p12 p34 / (p13 p24) for a generic line in P^3."""
    if (s.k, s.n) != (2, 4):
        raise BadParams("tetrahedral ratio is defined on G(2, 4)")
    if not is_generic(s):
        raise NotGeneric("some Plücker coordinate vanishes")
    p = plucker(s)
    return -p[(1, 2)] * p[(3, 4)] / (p[(1, 3)] * p[(2, 4)])


def line_cross_ratio(s):
    """Cross-ratio of the points where the line meets x_1 = 0, ..., x_4 = 0."""
    if (s.k, s.n) != (2, 4):
        raise BadParams("need a line in P^3")
    m = s.matrix
    pts = [(m[1, i], -m[0, i]) for i in range(4)]
    return cross_ratio(*pts)


def torus_translate(s, t):
    """The subspace with column i scaled by t_i."""
    m = s.matrix
    return Subspace(RationalMatrix.from_rows(
        [[m[r, i] * Fraction(t[i]) for i in range(s.n)] for r in range(s.k)]))
