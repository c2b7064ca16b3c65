import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seifert_forge.invariants import (
    ConwayRewriteError, LaurentPolynomial, alexander, coeff, conway, conway_to_alexander,
    det_polynomial, rewrite_in_z, s_invariance_fuzz,
)
from seifert_forge.seifert import (
    EMPTY, FIGURE_EIGHT, TREFOIL, SkewPartNotUnimodular, block_sum, random_s_moves,
    random_seifert, validate,
)

Z = lambda *terms: LaurentPolynomial.from_dict("z", dict(terms))  # noqa: E731
T = lambda *terms: LaurentPolynomial.from_dict("t", dict(terms))  # noqa: E731


@st.composite
def seifert_matrices(draw, sizes=(0, 2, 4, 6, 8)):
    n = draw(st.sampled_from(sizes))
    return random_seifert(n, draw(st.integers(1, 5)), draw(st.integers(0, 2**32)),
                          scramble=draw(st.integers(0, 6)))


# Golden values expanded by hand:
#   trefoil: det([[-x + 1/x, x], [-1/x, -x + 1/x]]) = (x - 1/x)^2 + 1
#   figure-eight: det([[x - 1/x, x], [-1/x, -x + 1/x]]) = -(x - 1/x)^2 + 1
#   [[0, 0], [1, 5]]: det([[0, -1/x], [x, 5z]]) = 1
@pytest.mark.parametrize("method", ["interpolate", "bareiss"])
def test_conway_golden(method):
    assert conway(EMPTY, method) == Z((0, 1))
    assert conway(TREFOIL, method) == Z((0, 1), (2, 1))
    assert conway(FIGURE_EIGHT, method) == Z((0, 1), (2, -1))
    assert conway([[0, 0], [1, 5]], method) == Z((0, 1))


def test_alexander_golden():
    assert alexander(EMPTY) == T((0, 1))
    assert alexander(TREFOIL) == T((-1, 1), (0, -1), (1, 1))
    assert alexander(FIGURE_EIGHT) == T((-1, -1), (0, 3), (1, -1))


def test_coeff():
    assert coeff(TREFOIL, 2) == 1
    assert coeff(TREFOIL, 4) == 0
    assert coeff(random_seifert(6, 4, 8, scramble=3), 0) == 1
    with pytest.raises(ValueError):
        coeff(TREFOIL, 3)


def test_invalid_input_propagates():
    with pytest.raises(SkewPartNotUnimodular):
        conway([[1, 0], [0, 1]])


def test_rewrite_rejects_residual():
    with pytest.raises(ConwayRewriteError):
        rewrite_in_z({1: 1})           # x alone leaves 1/x behind
    assert rewrite_in_z({2: 1, 0: -1, -2: 1}) == Z((0, 1), (2, 1))


def test_det_polynomial_methods_agree_on_a_big_matrix():
    m = random_s_moves(random_seifert(10, 5, 4, scramble=20), 10, 4)
    assert det_polynomial(m, "interpolate") == det_polynomial(m, "bareiss")


@settings(max_examples=100)
@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))
def test_genus_one_closed_form(a, b, c):
    nabla = conway([[a, b], [b - 1, c]])
    assert nabla == Z((0, 1), (2, a * c - b * b + b))


@settings(max_examples=40)
@given(seifert_matrices())
def test_methods_agree(m):
    assert conway(m, "interpolate") == conway(m, "bareiss")


@settings(max_examples=60)
@given(seifert_matrices(), seifert_matrices(sizes=(0, 2, 4)))
def test_multiplicative_under_block_sum(a, b):
    assert conway(block_sum(a, b)) == conway(a) * conway(b)


@settings(max_examples=60)
@given(seifert_matrices())
def test_parity_normalization_and_degree(m):
    nabla = conway(m)
    assert nabla[0] == 1
    assert all(e % 2 == 0 for e, _ in nabla.terms)
    assert (nabla.degree or 0) <= m.size


@settings(max_examples=60)
@given(seifert_matrices())
def test_alexander_symmetric_and_normalized(m):
    delta = alexander(m)
    d = delta.as_dict()
    assert all(d.get(-e) == c for e, c in d.items())
    assert delta(1) == 1


@settings(max_examples=30)
@given(seifert_matrices(sizes=(0, 2, 4, 6)), st.integers(0, 2**32))
def test_s_move_invariance(m, seed):
    assert conway(random_s_moves(m, 20, seed)) == conway(m)


def test_unknot_class_stays_trivial():
    for seed in range(10):
        assert conway(random_s_moves(EMPTY, 20, seed)) == Z((0, 1))


def test_fuzz_report_shape():
    rep = s_invariance_fuzz(5, 1, max_size=4)
    assert rep["pass"] and rep["trials"] == 5 and rep["failures"] == []


def test_alexander_from_conway_substitution():
    # (1 + z^2)^2 -> (t - 1 + 1/t)^2
    got = conway_to_alexander(Z((0, 1), (2, 2), (4, 1)))
    assert got == T((-2, 1), (-1, -2), (0, 3), (1, -2), (2, 1))
    assert got == alexander(block_sum(TREFOIL, TREFOIL))


def test_laurent_str():
    assert str(Z((0, 1), (2, -3))) == "-3*z^2 + 1"
    assert str(T((-1, -1), (0, 3), (1, -1))) == "-t + 3 - t^-1"
