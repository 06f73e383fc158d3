"""
Dense matrices over Q with fraction-free (Bareiss) elimination.

Rows are scaled to integers before elimination, so every intermediate
value is an integer minor of the scaled matrix and no gcd work happens
inside the inner loop.
"""

from fractions import Fraction
from itertools import combinations, permutations

from .rational import Q, common_denominator, format_rational, parse_rational


class RationalMatrix:
    """Immutable ``rows x cols`` matrix of Fractions stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(Q(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(
                f"entries length {len(entries)} does not match {rows}x{cols}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows(
            [[c[i] for c in columns] for i in range(rows)], cols=len(columns)
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = ", ".join(
            "[" + ", ".join(format_rational(x) for x in self.row(i)) + "]"
            for i in range(self.rows)
        )
        return f"RationalMatrix([{body}])"

    def transpose(self):
        return RationalMatrix.from_rows(self.columns(), cols=self.rows)

    T = property(transpose)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def scale(self, c):
        c = Q(c)
        return RationalMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                out.append(sum((a * b for a, b in zip(r, c)), Fraction(0)))
        return RationalMatrix(self.rows, other.cols, out)

    def apply(self, vector):
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ValueError("length mismatch")
        v = [Q(x) for x in vector]
        return [sum((a * b for a, b in zip(self.row(i), v)), Fraction(0))
                for i in range(self.rows)]

    def submatrix(self, row_idx, col_idx):
        return RationalMatrix.from_rows(
            [[self[i, j] for j in col_idx] for i in row_idx], cols=len(col_idx)
        )

    def delete_column(self, j):
        keep = [c for c in range(self.cols) if c != j]
        return self.submatrix(range(self.rows), keep)

    def stack(self, other):
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return RationalMatrix(self.rows + other.rows, self.cols,
                              self.entries + other.entries)

    def is_zero(self):
        return not any(self.entries)

    def rank(self):
        return rank(self)

    def rref(self):
        return rref(self)

    def det(self):
        return det(self)

    def to_json(self):
        return [[format_rational(x) for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data):
        return cls.from_rows([[parse_rational(str(x)) for x in r] for r in data])


def _as_matrix(m):
    return m if isinstance(m, RationalMatrix) else RationalMatrix.from_rows(m)


def _integer_rows(m):
    """Scale every row by its common denominator; returns int rows and scales."""
    rows, scales = [], []
    for i in range(m.rows):
        r = m.row(i)
        d = common_denominator(r)
        rows.append([int(x * d) for x in r])
        scales.append(d)
    return rows, scales


def bareiss_echelon(int_rows, ncols):
    """
    Fraction-free row echelon form of an integer matrix (modified in place).

    Returns (pivot_columns, swaps).  Rows below ``len(pivot_columns)`` are zero.
    """
    a = int_rows
    nrows = len(a)
    prev = 1
    r = 0
    pivots = []
    swaps = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            swaps += 1
        piv = a[r][c]
        for i in range(r + 1, nrows):
            aic = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - aic * row_r[j]) // prev
            row_i[c] = 0
        # entries left of c in rows below r are already zero
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, swaps


def rank(m):
    """Rank over Q."""
    m = _as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    rows, _ = _integer_rows(m)
    pivots, _ = bareiss_echelon(rows, m.cols)
    return len(pivots)


def det(m):
    m = _as_matrix(m)
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    rows, scales = _integer_rows(m)
    pivots, swaps = bareiss_echelon(rows, n)
    if len(pivots) < n:
        return Fraction(0)
    # last pivot of Bareiss is the determinant of the integer matrix
    value = rows[n - 1][n - 1]
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(-value if swaps % 2 else value, denom)


def rref(m):
    """Reduced row echelon form; returns (matrix without zero rows, pivots)."""
    m = _as_matrix(m)
    rows, _ = _integer_rows(m)
    pivots, _ = bareiss_echelon(rows, m.cols)
    r = len(pivots)
    red = [[Fraction(x) for x in rows[i]] for i in range(r)]
    for i in reversed(range(r)):
        c = pivots[i]
        piv = red[i][c]
        red[i] = [x / piv for x in red[i]]
        for h in range(i):
            f = red[h][c]
            if f:
                red[h] = [a - f * b for a, b in zip(red[h], red[i])]
    return RationalMatrix(r, m.cols, [x for row in red for x in row]), pivots


def kernel_basis(m):
    """Rows form a basis of the right kernel ``{x : m x = 0}``."""
    m = _as_matrix(m)
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i, f]
        basis.append(v)
    return RationalMatrix(len(basis), m.cols, [x for v in basis for x in v])


def minor(m, row_set, col_set):
    """Determinant of the submatrix on the given (0-based) rows and columns."""
    m = _as_matrix(m)
    row_set, col_set = list(row_set), list(col_set)
    if len(row_set) != len(col_set):
        raise ValueError("row and column sets differ in size")
    for i in row_set:
        if not 0 <= i < m.rows:
            raise IndexError(f"row index {i} out of range")
    for j in col_set:
        if not 0 <= j < m.cols:
            raise IndexError(f"column index {j} out of range")
    if not row_set:
        return Fraction(1)
    return det(m.submatrix(row_set, col_set))


def cofactor_det(rows):
    """Leibniz-formula determinant; a slow independent oracle for tests."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for a, b in combinations(range(n), 2) if perm[a] > perm[b])
        term = Fraction(-1 if inv % 2 else 1)
        for i, p in enumerate(perm):
            term *= Q(rows[i][p])
            if not term:
                break
        total += term
    return total
