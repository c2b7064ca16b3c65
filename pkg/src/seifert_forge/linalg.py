"""Exact linear algebra over the integers and rationals.

Nothing here touches floating point. Determinants use Bareiss fraction-free
elimination, so every intermediate value is an integer (or an integer
polynomial) minor of the input.
"""

import heapq
from fractions import Fraction
from math import gcd


def bareiss_det(rows):
    """Determinant of a square integer matrix; the empty matrix has det 1."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        tail = rk[k + 1:]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if aik == 0:
                ri[k + 1:] = [akk * x // prev for x in ri[k + 1:]]
            else:
                ri[k + 1:] = [(akk * x - aik * y) // prev for x, y in zip(ri[k + 1:], tail)]
        prev = akk
    return sign * a[n - 1][n - 1]


# Dense integer polynomials are coefficient lists, lowest degree first.

def _ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _ptrim(out)


def pneg(p):
    return [-c for c in p]


def pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _ptrim(out)


def pdiv_exact(p, q):
    """Quotient of integer polynomials known to divide exactly."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(p) - 1 < dq:
        if p:
            raise ArithmeticError("inexact polynomial division")
        return []
    quot = [0] * (len(p) - dq)
    for k in range(len(p) - 1 - dq, -1, -1):
        c, r = divmod(p[k + dq], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                p[k + j] -= c * b
    if any(p):
        raise ArithmeticError("inexact polynomial division")
    return _ptrim(quot)


def bareiss_det_poly(rows):
    """Determinant of a square matrix of integer polynomials (coefficient lists).

    Same recurrence as `bareiss_det`; the division by the previous pivot is
    an exact polynomial division.
    """
    n = len(rows)
    if n == 0:
        return [1]
    a = [[_ptrim(list(e)) for e in r] for r in rows]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return []
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                num = padd(pmul(akk, ri[j]), pneg(pmul(aik, rk[j])))
                ri[j] = pdiv_exact(num, prev)
        prev = akk
    det = a[n - 1][n - 1]
    return det if sign == 1 else pneg(det)


def interpolate(points):
    """Newton interpolation through (x, y) pairs with exact rationals.

    Returns the coefficient list (lowest degree first) of the unique
    polynomial of degree < len(points) through the points.
    """
    xs = [Fraction(x) for x, _ in points]
    coef = [Fraction(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form into the monomial basis
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [shifted[i] - xs[k] * poly[i] for i in range(n)]
        poly[0] += coef[k]
    return poly


def rank(rows):
    """Rank over Q of a matrix with int or Fraction entries."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        for i in range(r + 1, m):
            f = a[i][c] / pr[c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        r += 1
        if r == m:
            break
    return r


def _primitive(vec):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        vec = {k: v // g for k, v in vec.items()}
    return vec


def _integral(vec):
    """Clear denominators of a rational row."""
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // gcd(den, v.denominator)
    if den == 1:
        return {k: int(v) for k, v in vec.items()}
    return {k: int(v * den) for k, v in vec.items()}


class SparseEchelon:
    """Incremental row echelon form over Q with sparse integer rows.

    Rows are dicts column -> int, kept primitive (content 1); scaling a row
    by a non-zero rational does not change the span, so rational arithmetic
    is never needed. Each accepted row has zeros in every pivot column that
    existed when it was inserted, which makes a single elimination pass in
    insertion order sufficient.

    ``column_weight`` orders pivot candidates: the pivot of a new row is
    its column with the smallest weight (ties by column key).
    """

    def __init__(self, column_weight=None):
        self.column_weight = column_weight or {}
        self.pivot_row = {}     # column -> row
        self.pivot_rank = {}    # column -> insertion index

    def __len__(self):
        return len(self.pivot_row)

    @property
    def rank(self):
        return len(self.pivot_row)

    def copy(self):
        other = SparseEchelon(self.column_weight)
        other.pivot_row = dict(self.pivot_row)
        other.pivot_rank = dict(self.pivot_rank)
        return other

    def reduce(self, vec):
        """Residual of `vec` (up to a non-zero scalar) modulo the current span."""
        vec = _integral({k: v for k, v in vec.items() if v})
        heap = [(self.pivot_rank[c], c) for c in vec if c in self.pivot_rank]
        heapq.heapify(heap)
        while heap:
            _, c = heapq.heappop(heap)
            a = vec.get(c)
            if not a:
                continue
            row = self.pivot_row[c]
            p = row[c]
            g = gcd(a, p)
            s, t = p // g, a // g
            if s != 1:
                vec = {k: s * v for k, v in vec.items()}
            for k, v in row.items():
                nv = vec.get(k, 0) - t * v
                if nv:
                    if k not in vec and k in self.pivot_rank:
                        heapq.heappush(heap, (self.pivot_rank[k], k))
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            vec = _primitive(vec)
        return vec

    def add(self, vec):
        """Insert `vec`; returns True if it enlarged the span."""
        res = self.reduce(vec)
        if not res:
            return False
        w = self.column_weight
        col = min(res, key=lambda k: (w.get(k, 0), k))
        self.pivot_rank[col] = len(self.pivot_row)
        self.pivot_row[col] = res
        return True

    def contains(self, vec):
        return not self.reduce(vec)
