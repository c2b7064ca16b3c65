"""Conway and Alexander polynomials of Seifert matrices.

Conventions: ``x = t^(1/2)`` and ``z = x - 1/x``, and

    nabla(z) = det(x M - x^-1 M^T),

which gives ``1 + z^2`` for the trefoil matrix [[-1, 1], [0, -1]].
Since ``det(x M - x^-1 M^T) = x^-n det(t M - M^T)`` with ``t = x^2``, both
determinant routes below compute the integer polynomial
``q(t) = det(t M - M^T)`` and differ only in how.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .linalg import bareiss_det, bareiss_det_poly, interpolate
from .seifert import validate

METHODS = ("interpolate", "bareiss")


@dataclass(frozen=True)
class LaurentPolynomial:
    """Finitely supported Laurent polynomial with integer coefficients.

    ``terms`` is a tuple of (exponent, coefficient) pairs sorted by exponent,
    with no zero coefficients.
    """

    var: str
    terms: tuple = ()

    @classmethod
    def from_dict(cls, var, coeffs):
        return cls(var, tuple(sorted((int(e), c) for e, c in coeffs.items() if c)))

    @classmethod
    def one(cls, var):
        return cls(var, ((0, 1),))

    def as_dict(self):
        return dict(self.terms)

    def __getitem__(self, exponent):
        return self.as_dict().get(exponent, 0)

    coeff = __getitem__

    @property
    def degree(self):
        return self.terms[-1][0] if self.terms else None

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if not isinstance(other, LaurentPolynomial):
            return LaurentPolynomial(self.var, ((0, other),) if other else ())
        if other.var != self.var and other.terms and self.terms:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial.from_dict(self.var, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.var, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return LaurentPolynomial.from_dict(self.var, {e: c * other for e, c in self.terms})
        other = self._check(other)
        out = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial.from_dict(self.var, out)

    __rmul__ = __mul__

    def __call__(self, value):
        value = Fraction(value) if any(e < 0 for e, _ in self.terms) else value
        return sum(c * value**e for e, c in self.terms)

    def divisible_by_power(self, k):
        """True when every exponent present is >= k (the zero polynomial qualifies)."""
        return all(e >= k for e, _ in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


class ConwayRewriteError(ArithmeticError):
    """Residual left after rewriting in z; signals a bug or invalid input."""


def _q_interpolate(m):
    n = m.size
    mt = m.transpose_rows()
    pts = []
    for t in range(1, n + 2):
        pts.append((t, bareiss_det([[t * a - b for a, b in zip(r, rt)]
                                    for r, rt in zip(m.rows, mt)])))
    coeffs = interpolate(pts)
    if any(c.denominator != 1 for c in coeffs):
        raise ConwayRewriteError("non-integral interpolant")
    return [int(c) for c in coeffs]


def _q_bareiss(m):
    mt = m.transpose_rows()
    entries = [[[-b, a] for a, b in zip(r, rt)] for r, rt in zip(m.rows, mt)]
    q = bareiss_det_poly(entries)
    return q + [0] * (m.size + 1 - len(q))


def det_polynomial(m, method="interpolate"):
    """Coefficients (lowest first, length n+1) of ``det(t M - M^T)``."""
    m = validate(m)
    if method == "interpolate":
        return _q_interpolate(m)
    if method == "bareiss":
        return _q_bareiss(m)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def rewrite_in_z(x_poly):
    """Rewrite a Laurent polynomial in x as a polynomial in z = x - 1/x.

    The highest term ``c x^m`` (m >= 1) is cancelled by ``c z^m``, whose
    expansion is ``sum_j (-1)^j C(m, j) x^(m - 2j)``. What remains must be a
    constant; anything else raises `ConwayRewriteError`.
    """
    rest = dict(x_poly)
    out = {}
    while True:
        rest = {e: c for e, c in rest.items() if c}
        top = max(rest, default=0)
        if top < 1:
            break
        c = rest[top]
        out[top] = out.get(top, 0) + c
        for j in range(top + 1):
            e = top - 2 * j
            rest[e] = rest.get(e, 0) - c * (-1) ** j * comb(top, j)
    if any(e != 0 for e in rest):
        raise ConwayRewriteError(f"residual {rest} after z-rewrite")
    if rest.get(0):
        out[0] = out.get(0, 0) + rest[0]
    return LaurentPolynomial.from_dict("z", out)


def conway(m, method="interpolate"):
    """Conway polynomial of a Seifert matrix.

    >>> str(conway([[-1, 1], [0, -1]]))
    'z^2 + 1'
    """
    m = validate(m)
    n = m.size
    q = det_polynomial(m, method)
    # det(x M - x^-1 M^T) = x^-n q(x^2)
    x_poly = {2 * k - n: c for k, c in enumerate(q) if c}
    nabla = rewrite_in_z(x_poly)
    if nabla[0] != 1 or any(e % 2 for e, _ in nabla.terms) or (nabla.degree or 0) > n:
        raise ConwayRewriteError(f"malformed Conway polynomial {nabla}")
    return nabla


def conway_to_alexander(nabla):
    """Substitute z^2 = t - 2 + 1/t."""
    z2 = LaurentPolynomial("t", ((-1, 1), (0, -2), (1, 1)))
    out = LaurentPolynomial("t")
    power = LaurentPolynomial.one("t")
    for k in range(0, (nabla.degree or 0) // 2 + 1):
        c = nabla[2 * k]
        if c:
            out = out + power * c
        power = power * z2
    return out


def alexander(m, method="interpolate"):
    """Symmetric Alexander polynomial, normalized so that Delta(1) = 1."""
    return conway_to_alexander(conway(m, method))


def s_invariance_fuzz(trials, seed, max_size=12, moves=20, bound=5):
    """Compare Conway polynomials before and after random S-moves.

    Trial ``i`` uses its own RNG stream derived from ``(seed, i)``.
    """
    import random

    from .seifert import random_s_moves, random_seifert

    failures = []
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        n = rng.randrange(0, max_size + 1, 2)
        m = random_seifert(n, bound, rng.getrandbits(32), scramble=rng.randint(0, 6))
        moved = random_s_moves(m, moves, rng.getrandbits(32))
        if conway(moved) != conway(m):
            failures.append({"trial": trial, "matrix": m.tolist(), "moved": moved.tolist()})
    return {"trials": trials, "seed": seed, "moves": moves, "max_size": max_size,
            "failures": failures, "pass": not failures}


def coeff(m, exponent):
    """Coefficient of z^exponent in the Conway polynomial."""
    if exponent < 0 or exponent % 2:
        raise ValueError(f"exponent must be even and non-negative, got {exponent}")
    return conway(m)[exponent]
