import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from seifert_forge.linalg import (
    SparseEchelon, bareiss_det, bareiss_det_poly, interpolate, pdiv_exact, pmul, rank,
)


def leibniz_det(a):
    n = len(a)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i, p in enumerate(perm):
            prod *= a[i][p]
        total += -prod if inv % 2 else prod
    return total


square = st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@given(square)
def test_bareiss_matches_leibniz(a):
    assert bareiss_det(a) == leibniz_det(a)


def test_empty_det_is_one():
    assert bareiss_det([]) == 1
    assert bareiss_det_poly([]) == [1]


def test_needs_pivoting():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0], [1, 2]]) == 0


@settings(max_examples=40)
@given(st.integers(0, 4).flatmap(
    lambda n: st.lists(st.lists(st.lists(st.integers(-4, 4), min_size=0, max_size=3),
                                min_size=n, max_size=n), min_size=n, max_size=n)))
def test_poly_det_matches_sympy(entries):
    t = sympy.symbols("t")
    n = len(entries)
    mat = sympy.Matrix(n, n, lambda i, j: sum(c * t**k for k, c in enumerate(entries[i][j])))
    expected = sympy.Poly(mat.det(method="berkowitz"), t).all_coeffs()[::-1] if n else [1]
    got = bareiss_det_poly(entries)
    expected = [int(c) for c in expected]
    while expected and expected[-1] == 0:
        expected.pop()
    assert got == expected


def test_pdiv_exact_round_trip():
    p, q = [3, 0, -2, 5], [1, 4]
    assert pdiv_exact(pmul(p, q), q) == p
    with pytest.raises(ArithmeticError):
        pdiv_exact([1, 0, 1], [1, 1])


def test_interpolate_recovers_polynomial():
    coeffs = [7, -3, 0, 2, 1]
    pts = [(x, sum(c * x**k for k, c in enumerate(coeffs))) for x in range(1, 6)]
    assert interpolate(pts) == [Fraction(c) for c in coeffs]


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=0, max_size=6))
def test_rank_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank() if rows else 0
    assert rank(rows) == expected


def test_sparse_echelon_matches_dense_rank():
    rng = random.Random(5)
    for _ in range(30):
        rows = [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(8)] for _ in range(10)]
        ech = SparseEchelon()
        for r in rows:
            ech.add({j: v for j, v in enumerate(r) if v})
        assert ech.rank == rank(rows)
        for r in rows:
            assert ech.contains({j: v for j, v in enumerate(r) if v})


def test_sparse_echelon_accepts_rationals():
    ech = SparseEchelon()
    ech.add({0: Fraction(1, 2), 1: Fraction(1, 3)})
    assert ech.contains({0: 3, 1: 2})
    assert not ech.contains({0: 1})
