"""Symmetric functions in the power-sum basis, exactly.

A polynomial is a dict mapping a partition (the power-sum index) to a
Fraction.  The p-basis is multiplicative, so products just merge indices.
Schur Q/P live in the subring generated by odd power sums; the transition
matrix between {P_alpha} and {p_nu : nu odd} is square and invertible, which
is how spin character values are extracted.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from barspin.partitions import (
    check_strict,
    conjugate,
    odd_partitions_of,
    size,
    strict_partitions_of,
    union_parts,
)


def p_mono(nu, coeff=1):
    return {tuple(nu): Fraction(coeff)}


def poly_add(*polys):
    out = {}
    for poly in polys:
        for k, v in poly.items():
            s = out.get(k, Fraction(0)) + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def poly_scale(poly, c):
    c = Fraction(c)
    if not c:
        return {}
    return {k: v * c for k, v in poly.items()}


def poly_mul(f, g):
    out = {}
    for kf, vf in f.items():
        for kg, vg in g.items():
            k = union_parts(kf, kg)
            s = out.get(k, Fraction(0)) + vf * vg
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def poly_eq(f, g):
    return poly_add(f, poly_scale(g, -1)) == {}


# ---------------------------------------------------------------------------
# generators: q_r (odd power sums only) and h_r

@lru_cache(maxsize=None)
def q_poly(r):
    """Schur's q_r: r*q_r = 2 * sum over odd k <= r of p_k q_{r-k}."""
    if r == 0:
        return {(): Fraction(1)}
    acc = {}
    for k in range(1, r + 1, 2):
        acc = poly_add(acc, poly_mul(p_mono((k,)), q_poly(r - k)))
    return poly_scale(acc, Fraction(2, r))


@lru_cache(maxsize=None)
def h_poly(r):
    """Complete homogeneous h_r via Newton's identity."""
    if r == 0:
        return {(): Fraction(1)}
    acc = {}
    for k in range(1, r + 1):
        acc = poly_add(acc, poly_mul(p_mono((k,)), h_poly(r - k)))
    return poly_scale(acc, Fraction(1, r))


# ---------------------------------------------------------------------------
# Schur Q and P via the Pfaffian of two-row values

@lru_cache(maxsize=None)
def q_two_row(a, b):
    """Q_(a,b) for a > b >= 0."""
    if b == 0:
        return q_poly(a)
    acc = poly_mul(q_poly(a), q_poly(b))
    for i in range(1, b + 1):
        term = poly_mul(q_poly(a + i), q_poly(b - i))
        acc = poly_add(acc, poly_scale(term, 2 * (-1) ** i))
    return acc


def _pfaffian(m):
    """Pfaffian of an antisymmetric matrix of polynomials (even dimension),
    expanding along the first remaining row, memoized on the index set."""
    cache = {}

    def rec(rows):
        if rows in cache:
            return cache[rows]
        if not rows:
            return {(): Fraction(1)}
        i = rows[0]
        rest = rows[1:]
        acc = {}
        for pos, j in enumerate(rest):
            term = poly_mul(m[i][j], rec(tuple(x for x in rest if x != j)))
            acc = poly_add(acc, poly_scale(term, (-1) ** pos))
        cache[rows] = acc
        return acc

    return rec(tuple(range(len(m))))


@lru_cache(maxsize=None)
def schur_q_poly(al):
    """Q_alpha by the Pfaffian of the two-row matrix (odd lengths padded
    with a zero part)."""
    check_strict(al)
    if not al:
        return {(): Fraction(1)}
    if len(al) == 1:
        return q_poly(al[0])
    padded = al if len(al) % 2 == 0 else al + (0,)
    n = len(padded)
    m = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            val = q_two_row(padded[i], padded[j])
            m[i][j] = val
            m[j][i] = poly_scale(val, -1)
    return _pfaffian(m)


@lru_cache(maxsize=None)
def schur_p_poly(al):
    return poly_scale(schur_q_poly(al), Fraction(1, 2 ** len(al)))


# ---------------------------------------------------------------------------
# Schur s via Jacobi-Trudi (subset DP determinant) and omega

def _det(m):
    """Determinant of a matrix of polynomials, DP over column subsets."""
    n = len(m)
    if n == 0:
        return {(): Fraction(1)}
    state = {frozenset(): {(): Fraction(1)}}
    for row in range(n):
        new = {}
        for used, val in state.items():
            for col in range(n):
                if col in used:
                    continue
                entry = m[row][col]
                if not entry:
                    continue
                sign = (-1) ** sum(1 for c in used if c > col)
                term = poly_scale(poly_mul(val, entry), sign)
                key = used | {col}
                new[key] = poly_add(new.get(key, {}), term)
        state = new
    return state.get(frozenset(range(n)), {})


def omega(poly):
    """The involution sending each p_k to (-1)^(k-1) p_k; swaps s_la, s_la'."""
    return {nu: v * (-1) ** (size(nu) - len(nu)) for nu, v in poly.items()}


@lru_cache(maxsize=None)
def schur_poly(la):
    """Schur s_la in the p-basis; conjugates first when that shrinks the
    Jacobi-Trudi determinant."""
    if not la:
        return {(): Fraction(1)}
    if len(la) > la[0]:
        return omega(schur_poly(conjugate(la)))
    n = len(la)
    m = [
        [h_poly(la[i] - i + j) if la[i] - i + j >= 0 else {} for j in range(n)]
        for i in range(n)
    ]
    return _det(m)


# ---------------------------------------------------------------------------
# expansion of degree-n odd-power-sum polynomials in {P_alpha}

@lru_cache(maxsize=None)
def _p_to_P_matrix(n):
    """(strict labels, odd class labels, X) with p_nu = sum_alpha X[alpha][nu] P_alpha."""
    alphas = strict_partitions_of(n)
    nus = odd_partitions_of(n)
    k = len(alphas)
    assert len(nus) == k, "Euler's identity just failed, which is bad news"
    m = [[schur_p_poly(al).get(nu, Fraction(0)) for nu in nus] for al in alphas]
    # solve M^T x = e_j for every j by one Gauss-Jordan pass on [M^T | I]
    a = [
        [m[j][i] for j in range(k)] + [Fraction(int(i == t)) for t in range(k)]
        for i in range(k)
    ]
    for col in range(k):
        piv = next(r for r in range(col, k) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(k):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    x = {
        al: {nu: a[i][k + j] for j, nu in enumerate(nus)}
        for i, al in enumerate(alphas)
    }
    return alphas, nus, x


def expand_in_P(poly, n):
    """Coefficients {alpha: Fraction} with poly = sum c_alpha P_alpha.
    The polynomial must be homogeneous of degree n with odd support."""
    alphas, nus, x = _p_to_P_matrix(n)
    for nu in poly:
        if size(nu) != n or any(p % 2 == 0 for p in nu):
            raise ValueError(f"not an odd-support degree-{n} polynomial: p_{nu}")
    out = {}
    for al in alphas:
        c = sum((x[al][nu] * poly.get(nu, Fraction(0)) for nu in nus), Fraction(0))
        if c:
            out[al] = c
    return out


def p_in_P_coefficient(al, nu):
    """X with p_nu = sum_alpha X^alpha_nu P_alpha."""
    _, _, x = _p_to_P_matrix(size(nu))
    return x[al][nu]


# ---------------------------------------------------------------------------
# evaluation and monomial-expansion oracles (deliberately independent routes)

def evaluate(poly, xs):
    """Evaluate at finitely many variable values, exactly."""
    xs = [Fraction(v) for v in xs]
    total = Fraction(0)
    for nu, c in poly.items():
        term = c
        for k in nu:
            term *= sum(x ** k for x in xs)
        total += term
    return total


def _shifted_cells(al):
    return [(i, j) for i in range(1, len(al) + 1) for j in range(i, i + al[i - 1])]


def monomial_schur_q(al, xs, marked_diagonal=True):
    """Q_alpha (or P_alpha when marked_diagonal=False) at xs by brute force
    over marked shifted tableaux.

    Entries are m' < m for m = 1..len(xs), encoded 2m-1 and 2m; rows and
    columns weakly increase; each column holds at most one unprimed m and
    each row at most one primed m.  P bans primes on the diagonal.
    """
    xs = [Fraction(v) for v in xs]
    cs = _shifted_cells(al)
    v = len(xs)
    total = Fraction(0)

    def ok(filling, idx, val):
        i, j = cs[idx]
        if not marked_diagonal and i == j and val % 2 == 1:
            return False
        for k in range(idx):
            a, b = cs[k]
            w = filling[k]
            if a == i and b == j - 1 and w > val:
                return False
            if b == j and a == i - 1 and w > val:
                return False
            if w == val:
                if val % 2 == 0 and b == j and a != i:
                    return False
                if val % 2 == 1 and a == i and b != j:
                    return False
        return True

    def rec(idx, filling):
        nonlocal total
        if idx == len(cs):
            term = Fraction(1)
            for w in filling:
                term *= xs[(w + 1) // 2 - 1]
            total += term
            return
        for val in range(1, 2 * v + 1):
            if ok(filling, idx, val):
                filling.append(val)
                rec(idx + 1, filling)
                filling.pop()

    rec(0, [])
    return total


def monomial_schur(la, xs):
    """s_la at xs by brute force over semistandard tableaux."""
    xs = [Fraction(v) for v in xs]
    cs = [(i, j) for i in range(1, len(la) + 1) for j in range(1, la[i - 1] + 1)]
    v = len(xs)
    total = Fraction(0)

    def rec(idx, filling):
        nonlocal total
        if idx == len(cs):
            term = Fraction(1)
            for w in filling:
                term *= xs[w - 1]
            total += term
            return
        i, j = cs[idx]
        lo = 1
        for k in range(idx):
            a, b = cs[k]
            if a == i and b == j - 1:
                lo = max(lo, filling[k])
            if b == j and a == i - 1:
                lo = max(lo, filling[k] + 1)
        for val in range(lo, v + 1):
            filling.append(val)
            rec(idx + 1, filling)
            filling.pop()

    rec(0, [])
    return total


def q_series_coefficient(r, xs):
    """Coefficient of t^r in prod (1 + x t)/(1 - x t), by truncated series."""
    xs = [Fraction(v) for v in xs]
    series = [Fraction(1)] + [Fraction(0)] * r
    for x in xs:
        factor = [Fraction(1)] + [2 * x ** k for k in range(1, r + 1)]
        new = [Fraction(0)] * (r + 1)
        for i in range(r + 1):
            if not series[i]:
                continue
            for j in range(r + 1 - i):
                new[i + j] += series[i] * factor[j]
        series = new
    return series[r]
