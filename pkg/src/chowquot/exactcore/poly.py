"""Sparse multivariate polynomials over Q."""

from fractions import Fraction

from .rational import Q, format_rational, parse_rational


class MultiPoly:
    """
    Polynomial in ``num_vars`` variables, stored as {exponent tuple: coefficient}.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars, terms=None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} has wrong length for {num_vars} vars")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent")
            c = Q(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def constant(cls, num_vars, c):
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, num_vars, i):
        exp = [0] * num_vars
        exp[i] = 1
        return cls(num_vars, {tuple(exp): 1})

    @classmethod
    def linear_form(cls, coeffs):
        """sum_j coeffs[j] * z_j."""
        n = len(coeffs)
        terms = {}
        for j, c in enumerate(coeffs):
            exp = [0] * n
            exp[j] = 1
            terms[tuple(exp)] = c
        return cls(n, terms)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.constant(self.num_vars, other)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __neg__(self):
        return MultiPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.num_vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self):
        """Lex-largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point):
        if len(point) != self.num_vars:
            raise ValueError("point has wrong dimension")
        point = [Q(x) for x in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for x, k in zip(point, exp):
                if k:
                    term *= x ** k
            total += term
        return total

    def substitute(self, images):
        """Replace variable j by the polynomial images[j] (all in a common ring)."""
        if len(images) != self.num_vars:
            raise ValueError("need one image per variable")
        m = images[0].num_vars if images else 0
        total = MultiPoly(m)
        for exp, c in self.terms.items():
            term = MultiPoly.constant(m, c)
            for img, k in zip(images, exp):
                if k:
                    term = term * img ** k
            total = total + term
        return total

    def divide_exact(self, other):
        """Quotient q with self == q * other; raises ArithmeticError otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = other.leading_term()
        rem = self
        quot = MultiPoly(self.num_vars)
        while rem:
            e, c = rem.leading_term()
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if any(d < 0 for d in diff):
                raise ArithmeticError("division is not exact")
            t = MultiPoly(self.num_vars, {diff: c / lead_c})
            quot = quot + t
            rem = rem - t * other
        return quot

    def coefficient_vector(self, monomials):
        return [self.terms.get(tuple(m), Fraction(0)) for m in monomials]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"z{j + 1}" + (f"^{k}" if k > 1 else "")
                for j, k in enumerate(exp) if k
            )
            coef = format_rational(c)
            if not mono:
                parts.append(coef)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coef}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        """Terms as [[exponents], "coef"] sorted by descending exponent."""
        return [[list(e), format_rational(self.terms[e])]
                for e in sorted(self.terms, reverse=True)]

    @classmethod
    def from_json(cls, num_vars, data):
        return cls(num_vars, {tuple(e): parse_rational(str(c)) for e, c in data})


def monomials(num_vars, degree):
    """All exponent vectors of the given total degree, lex-descending."""
    if num_vars == 0:
        return [()] if degree == 0 else []
    if num_vars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(num_vars - 1, degree - first):
            out.append((first,) + rest)
    return out


def poly_det(matrix):
    """
    Determinant of a square matrix of MultiPoly entries.

    Laplace expansion along rows with memoisation on the set of used columns.
    """
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise ValueError("poly_det needs a square matrix")
    if n == 0:
        raise ValueError("cannot infer the ring of an empty matrix")
    nv = next(e.num_vars for r in matrix for e in r if isinstance(e, MultiPoly))
    entries = [[e if isinstance(e, MultiPoly) else MultiPoly.constant(nv, e)
                for e in r] for r in matrix]
    memo = {}

    def expand(row, used):
        # determinant of rows row..n-1 restricted to the columns not in `used`
        if row == n:
            return MultiPoly.constant(nv, 1)
        key = used
        if key in memo:
            return memo[key]
        total = MultiPoly(nv)
        sign = 1
        for c in range(n):
            if used >> c & 1:
                continue
            e = entries[row][c]
            if e:
                sub = expand(row + 1, used | (1 << c))
                total = total + (e * sub if sign > 0 else -(e * sub))
            sign = -sign
        memo[key] = total
        return total

    return expand(0, 0)
