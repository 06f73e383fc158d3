"""
Exact linear programming over Q.

A dense two-phase simplex method with Bland's anti-cycling rule.  Problems
in this package have at most a few dozen constraints.  The tableau holds
gmpy2 rationals, which are exact and much faster than Fraction; results are
converted back to Fraction.
"""

from fractions import Fraction

from gmpy2 import mpq

from .rational import Q


def _mpq(x):
    x = Q(x)
    return mpq(x.numerator, x.denominator)


def _frac(x):
    return Fraction(int(x.numerator), int(x.denominator))


class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


def _pivot(tab, basis, r, c):
    prow = tab[r]
    p = prow[c]
    if p != 1:
        prow = [x / p for x in prow]
        tab[r] = prow
    for i, row in enumerate(tab):
        if i != r:
            f = row[c]
            if f:
                tab[i] = [a - f * b for a, b in zip(row, prow)]
    basis[r] = c


def _simplex(tab, basis, ncols, allowed):
    """Minimise the objective stored in the last row (reduced costs)."""
    m = len(tab) - 1
    obj = tab[m]
    while True:
        obj = tab[m]
        enter = next((j for j in range(ncols) if allowed[j] and obj[j] < 0), None)
        if enter is None:
            return
        best = None
        leave = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise Unbounded()
        _pivot(tab, basis, leave, enter)


def solve_lp(c=None, A_ub=(), b_ub=(), A_eq=(), b_eq=(), nvars=None):
    """
    Minimise c.x subject to A_ub x <= b_ub and A_eq x = b_eq with x free.

    Returns the optimal x as a list of Fractions.  Raises Infeasible or
    Unbounded.  With ``c`` omitted this is a pure feasibility problem.
    """
    A_ub = [[_mpq(a) for a in row] for row in A_ub]
    A_eq = [[_mpq(a) for a in row] for row in A_eq]
    b_ub = [_mpq(b) for b in b_ub]
    b_eq = [_mpq(b) for b in b_eq]
    if nvars is None:
        rows = A_ub or A_eq
        nvars = len(rows[0]) if rows else (len(c) if c is not None else 0)
    n = nvars
    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    # columns: x+ (n), x- (n), slacks (m_ub), artificials (m), rhs
    nstruct = 2 * n + m_ub
    ncols = nstruct + m
    tab = []
    for i in range(m):
        if i < m_ub:
            a, b = A_ub[i], b_ub[i]
        else:
            a, b = A_eq[i - m_ub], b_eq[i - m_ub]
        row = [mpq(0)] * (ncols + 1)
        for j in range(n):
            row[j] = a[j]
            row[n + j] = -a[j]
        if i < m_ub:
            row[2 * n + i] = mpq(1)
        row[-1] = b
        if b < 0:
            row = [-x for x in row]
        row[nstruct + i] = mpq(1)
        tab.append(row)
    basis = [nstruct + i for i in range(m)]

    # phase I: minimise the sum of artificials
    obj = [mpq(0)] * (ncols + 1)
    for row in tab:
        for j in range(nstruct):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    tab.append(obj)
    _simplex(tab, basis, ncols, [True] * nstruct + [False] * m)
    if tab[-1][-1] != 0:
        raise Infeasible()
    # drive artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= nstruct:
            j = next((j for j in range(nstruct) if tab[i][j] != 0), None)
            if j is not None:
                _pivot(tab, basis, i, j)
    tab.pop()

    if c is not None:
        cc = [_mpq(x) for x in c]
        full = cc + [-x for x in cc] + [mpq(0)] * (ncols - 2 * n)
        obj = full + [mpq(0)]
        for i, bj in enumerate(basis):
            if obj[bj]:
                f = obj[bj]
                obj = [a - f * b for a, b in zip(obj, tab[i])]
        tab.append(obj)
        allowed = [True] * nstruct + [False] * m
        _simplex(tab, basis, ncols, allowed)
        tab.pop()

    x = [mpq(0)] * ncols
    for i, bj in enumerate(basis):
        x[bj] = tab[i][-1]
    return [_frac(x[j] - x[n + j]) for j in range(n)]


def feasible_point(A_ub=(), b_ub=(), A_eq=(), b_eq=(), nvars=None):
    """A point satisfying the constraints, or None."""
    try:
        return solve_lp(None, A_ub, b_ub, A_eq, b_eq, nvars=nvars)
    except Infeasible:
        return None
