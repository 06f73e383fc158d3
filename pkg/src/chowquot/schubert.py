"""
Young diagrams, Schur dimensions, Kostka and Littlewood-Richardson numbers,
and Schubert classes in G(p, q).

Diagrams are tuples of positive integers in weakly decreasing order; the
empty diagram is ().  A Schubert class in G(p, q) is indexed by diagrams in
the rectangle with at most p rows and at most q - p columns.
"""

from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import BadIndices, BadParams, BadWeight, DoesNotFit, SizeMismatch


def partition(parts):
    """Normalise to a weakly decreasing tuple without zeros."""
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise BadParams("parts must be non-negative")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise BadParams(f"{parts} is not weakly decreasing")
    return tuple(x for x in parts if x)


def diagram_key(alpha):
    return ",".join(str(x) for x in alpha)


def parse_diagram_key(key):
    key = key.strip()
    return partition(int(x) for x in key.split(",")) if key else ()


def conjugate(alpha):
    alpha = partition(alpha)
    if not alpha:
        return ()
    return tuple(sum(1 for a in alpha if a >= i) for i in range(1, alpha[0] + 1))


def fits(alpha, p, q):
    alpha = partition(alpha)
    return len(alpha) <= p and (not alpha or alpha[0] <= q - p)


def heights(alpha, p, q):
    """
    ht_1 <= ... <= ht_q = p with the Schubert variety of alpha given by
    dim(L ∩ V_i) >= ht_i.  The height reaches m at position m + alpha_(p+1-m),
    so the variety has dimension |alpha|: the empty diagram is a point,
    the full rectangle is all of G(p, q).
    """
    alpha = partition(alpha)
    if not 0 <= p <= q:
        raise BadParams("need 0 <= p <= q")
    if not fits(alpha, p, q):
        raise DoesNotFit(f"{alpha} does not fit in {p} rows and {q - p} columns")
    padded = list(alpha) + [0] * (p - len(alpha))
    jumps = [m + padded[p - m] for m in range(1, p + 1)]
    return [sum(1 for j in jumps if j <= i) for i in range(1, q + 1)]


def schubert_dimension(ht):
    """Dimension Σ (i_m - m) of the Schubert variety with the given heights."""
    jumps = [i for i in range(1, len(ht) + 1) if ht[i - 1] > (ht[i - 2] if i > 1 else 0)]
    return sum(i - m for m, i in enumerate(jumps, start=1))


def partitions_in_box(size, rows, cols):
    """All diagrams with the given number of cells, rows and column bounds."""
    out = []

    def rec(left, maxpart, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        if len(acc) == rows:
            return
        for x in range(min(left, maxpart), 0, -1):
            rec(left - x, x, acc + [x])

    if size >= 0:
        rec(size, cols, [])
    return out


def schur_dim(alpha, m):
    """dim Σ^alpha(C^m) by the hook-content formula."""
    alpha = partition(alpha)
    if len(alpha) > m:
        return 0
    conj = conjugate(alpha)
    num = den = 1
    for r, row in enumerate(alpha):
        for c in range(row):
            num *= m + c - r
            den *= (row - c - 1) + (conj[c] - r - 1) + 1
    return num // den


def _horizontal_strips(alpha, size):
    """Diagrams mu inside alpha with alpha/mu a horizontal strip of the given size."""
    alpha = list(alpha)
    out = []

    def rec(i, left, acc):
        if i == len(alpha):
            if left == 0:
                out.append(partition(acc))
            return
        lo = alpha[i + 1] if i + 1 < len(alpha) else 0
        for mu_i in range(alpha[i], lo - 1, -1):
            take = alpha[i] - mu_i
            if take > left:
                break
            rec(i + 1, left - take, acc + [mu_i])

    rec(0, size, [])
    return out


@lru_cache(maxsize=None)
def _kostka(alpha, weight):
    if not weight:
        return 1 if not alpha else 0
    return sum(_kostka(mu, weight[:-1]) for mu in _horizontal_strips(alpha, weight[-1]))


def kostka(weight, alpha):
    """Number of semistandard tableaux of shape alpha and content weight."""
    alpha = partition(alpha)
    weight = tuple(int(x) for x in weight)
    if any(x < 0 for x in weight):
        raise BadParams("weights are non-negative")
    if sum(weight) != sum(alpha):
        raise SizeMismatch(f"|weight| = {sum(weight)} but |alpha| = {sum(alpha)}")
    return _kostka(alpha, weight)


@lru_cache(maxsize=None)
def _lr(alpha, beta, gamma):
    cells = []
    for r in range(len(gamma)):
        start = alpha[r] if r < len(alpha) else 0
        for c in range(gamma[r] - 1, start - 1, -1):
            cells.append((r, c))
    if len(cells) != sum(beta):
        return 0
    if any(r < len(alpha) and alpha[r] > gamma[r] for r in range(len(alpha))) or len(alpha) > len(gamma):
        return 0
    filling = {}
    counts = [0] * (len(beta) + 1)

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        hi = filling.get((r, c + 1), len(beta))
        lo = filling.get((r - 1, c), 0) + 1
        for v in range(lo, hi + 1):
            if counts[v] >= beta[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def littlewood_richardson(alpha, beta, gamma):
    """c^gamma_{alpha beta}: LR skew tableaux of shape gamma/alpha and content beta."""
    alpha, beta, gamma = partition(alpha), partition(beta), partition(gamma)
    if sum(gamma) != sum(alpha) + sum(beta):
        raise SizeMismatch("|gamma| must equal |alpha| + |beta|")
    if not beta:
        return int(alpha == gamma)
    return _lr(alpha, beta, gamma)


class SchubertClass:
    """Σ coeffs[alpha] σ_alpha in H_*(G(p, q)); ``dropped`` counts discarded terms."""

    def __init__(self, p, q, coeffs, dropped=0):
        if not 0 <= p <= q:
            raise BadParams("need 0 <= p <= q")
        self.p, self.q = p, q
        clean = {}
        for alpha, c in coeffs.items():
            alpha = partition(alpha)
            if not fits(alpha, p, q):
                raise DoesNotFit(f"{alpha} does not fit G({p}, {q})")
            if c:
                clean[alpha] = clean.get(alpha, 0) + int(c)
        self.coeffs = {a: c for a, c in clean.items() if c}
        self.dropped = dropped

    def __eq__(self, other):
        return (isinstance(other, SchubertClass) and (self.p, self.q) == (other.p, other.q)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.p, self.q, frozenset(self.coeffs.items())))

    def __add__(self, other):
        if (self.p, self.q) != (other.p, other.q):
            raise BadParams("classes live in different Grassmannians")
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return SchubertClass(self.p, self.q, out, self.dropped + other.dropped)

    def __getitem__(self, alpha):
        return self.coeffs.get(partition(alpha), 0)

    def degree(self):
        """Common |alpha| of the support (None when the class is zero or mixed)."""
        sizes = {sum(a) for a in self.coeffs}
        return sizes.pop() if len(sizes) == 1 else None

    def __repr__(self):
        terms = " + ".join(f"{c}σ{a}" for a, c in sorted(self.coeffs.items(), reverse=True))
        return f"SchubertClass(G({self.p},{self.q}): {terms or '0'})"

    def to_json(self):
        keys = sorted(self.coeffs, reverse=True)
        return {"p": self.p, "q": self.q,
                "coeffs": {diagram_key(a): str(self.coeffs[a]) for a in keys}}

    @classmethod
    def from_json(cls, data):
        return cls(data["p"], data["q"],
                   {parse_diagram_key(k): int(v) for k, v in data["coeffs"].items()})


def direct_sum_pushforward(alpha, beta, p, q):
    """Σ_gamma c^gamma_{alpha beta} σ_gamma, keeping the gamma that fit G(p, q)."""
    alpha, beta = partition(alpha), partition(beta)
    size = sum(alpha) + sum(beta)
    rows = len(alpha) + len(beta)
    cols = (alpha[0] if alpha else 0) + (beta[0] if beta else 0)
    coeffs, dropped = {}, 0
    for gamma in partitions_in_box(size, rows, cols):
        c = littlewood_richardson(alpha, beta, gamma)
        if not c:
            continue
        if fits(gamma, p, q):
            coeffs[gamma] = c
        else:
            dropped += 1
    return SchubertClass(p, q, coeffs, dropped)


def weights(length, total):
    """All compositions of total into the given number of non-negative parts."""
    out = []
    for bars in combinations(range(total + length - 1), length - 1):
        prev, parts = -1, []
        for b in bars + (total + length - 1,):
            parts.append(b - prev - 1)
            prev = b
        out.append(tuple(parts))
    return out


def weight_of_subset(indices, n):
    """Run lengths of a (k-1)-subset of {1..n-2}, as a weight of length n-k."""
    idx = list(indices)
    if any(a >= b for a, b in zip(idx, idx[1:])) or not all(1 <= i <= n - 2 for i in idx):
        raise BadIndices(f"{idx} is not an increasing subset of 1..{n - 2}")
    j = [0] + [x for x in range(1, n - 1) if x not in idx] + [n - 1]
    return tuple(j[v] - j[v - 1] - 1 for v in range(1, len(j)))


def _check_kn(k, n):
    if not 2 <= k <= n - 2:
        raise BadParams(f"need 2 <= k <= n-2, got k={k}, n={n}")


def _contour_diagrams(k, n):
    """Diagrams with k-1 cells indexing classes in G(k-1, n-1)."""
    return partitions_in_box(k - 1, k - 1, n - k)


def component_class(weight, k, n):
    """Σ_alpha K_{weight, alpha*} σ_alpha in G(k-1, n-1)."""
    _check_kn(k, n)
    weight = tuple(int(x) for x in weight)
    if len(weight) != n - k or any(x < 0 for x in weight) or sum(weight) != k - 1:
        raise BadWeight(f"{weight} is not in W({n - k}, {k - 1})")
    return SchubertClass(k - 1, n - 1, {a: kostka(weight, conjugate(a)) for a in _contour_diagrams(k, n)})


def veronese_class(k, n):
    """m_alpha = dim Σ^{alpha*}(C^(n-k)) in G(k-1, n-1)."""
    _check_kn(k, n)
    return SchubertClass(k - 1, n - 1,
                         {a: schur_dim(conjugate(a), n - k) for a in _contour_diagrams(k, n)})


def _alternating(shape, k, n):
    return sum((-1) ** i * comb(n, i) * schur_dim(shape, k - i) for i in range(k + 1))


def klyachko_contour_class(k, n):
    """m_alpha = Σ_i (-1)^i C(n, i) dim Σ^{(n-k, alpha_1, ..., alpha_(k-1))}(C^(k-i))."""
    _check_kn(k, n)
    coeffs = {}
    for a in _contour_diagrams(k, n):
        coeffs[a] = _alternating((n - k,) + a, k, n)
    return SchubertClass(k - 1, n - 1, coeffs)


def lie_complex_class(k, n):
    """Class in G(k, n) of a generic torus orbit closure: Σ_i (-1)^i C(n, i) dim Σ^alpha(C^(k-i))."""
    if not 1 <= k <= n - 1:
        raise BadParams(f"need 1 <= k <= n-1, got k={k}, n={n}")
    coeffs = {a: _alternating(a, k, n) for a in partitions_in_box(n - 1, k, n - k)}
    return SchubertClass(k, n, coeffs)


def crosscheck(kmax=4, nmax=9):
    """Compare veronese_class and klyachko_contour_class over a grid; returns mismatches."""
    bad = []
    for k in range(2, kmax + 1):
        for n in range(k + 2, nmax + 1):
            if veronese_class(k, n) != klyachko_contour_class(k, n):
                bad.append((k, n))
    return bad


def schur_dim_by_weights(alpha, m):
    """Σ_weights K_{weight, alpha}: the Weyl-character count of dim Σ^alpha(C^m)."""
    alpha = partition(alpha)
    return sum(kostka(w, alpha) for w in weights(m, sum(alpha))) if m else int(not alpha)

