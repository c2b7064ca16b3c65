import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seifert_forge.seifert import (
    EMPTY, FIGURE_EIGHT, TREFOIL, IndexOutOfRange, LengthMismatch, NotSquare, NotUnimodular,
    OddSize, OddSizeRequested, SizeMismatch, SkewPartNotUnimodular, block_sum, congruent,
    enlarge_col, enlarge_row, perturb, random_elementary, random_s_moves, random_seifert,
    try_reduce, validate,
)

seeds = st.integers(0, 2**32 - 1)
sizes = st.sampled_from([0, 2, 4, 6])


@st.composite
def seifert_matrices(draw, max_size=6):
    n = draw(st.sampled_from([s for s in (0, 2, 4, 6, 8) if s <= max_size]))
    return random_seifert(n, draw(st.integers(1, 5)), draw(seeds), scramble=draw(st.integers(0, 6)))


def test_validate_examples():
    assert validate([]).size == 0
    assert validate([[-1, 1], [0, -1]]) == TREFOIL
    with pytest.raises(SkewPartNotUnimodular) as exc:
        validate([[1, 0], [0, 1]])
    assert exc.value.det == 0


def test_validate_errors():
    with pytest.raises(OddSize):
        validate([[1]])
    with pytest.raises(NotSquare):
        validate([[1, 2]])
    # skew part 2J has determinant 4
    with pytest.raises(SkewPartNotUnimodular) as exc:
        validate([[0, 2], [0, 0]])
    assert exc.value.det == 4


def test_congruent_examples():
    assert congruent(TREFOIL, [[1, 0], [0, 1]]) == TREFOIL
    # P M = [[-1, 0], [0, -1]]; (P M) P^T = [[-1, 0], [-1, -1]]
    assert congruent(TREFOIL, [[1, 1], [0, 1]]).tolist() == [[-1, 0], [-1, -1]]
    assert congruent(EMPTY, []) == EMPTY
    with pytest.raises(SizeMismatch):
        congruent(TREFOIL, [[1]])
    with pytest.raises(NotUnimodular):
        congruent(TREFOIL, [[2, 0], [0, 1]])


def test_enlarge_examples():
    assert enlarge_row(EMPTY, 5, []).tolist() == [[0, 0], [1, 5]]
    assert enlarge_col(EMPTY, -3, []).tolist() == [[0, 1], [0, -3]]
    big = enlarge_row(TREFOIL, 0, [0, 0])
    assert big.tolist() == [[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, -1, 1], [0, 0, 0, -1]]
    m = enlarge_col(FIGURE_EIGHT, 2, [7, 7])
    assert m.tolist() == [[0, 1, 0, 0], [0, 2, 7, 7], [0, 0, 1, 1], [0, 0, 0, -1]]
    validate(m.tolist())
    with pytest.raises(LengthMismatch):
        enlarge_row(TREFOIL, 1, [1])
    with pytest.raises(LengthMismatch):
        enlarge_col(TREFOIL, 1, [1, 2, 3])


def test_try_reduce_examples():
    assert try_reduce(validate([[0, 0], [1, 5]])) == EMPTY
    assert try_reduce(enlarge_row(TREFOIL, 3, [1, -2])) == TREFOIL
    assert try_reduce(TREFOIL) is None
    assert try_reduce(EMPTY) is None


def _brute_force_reducible(m):
    # oracle: does any simultaneous permutation put an enlargement block at (1, 2)?
    n = m.size
    for perm in itertools.permutations(range(n)):
        r = [[m.rows[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
        row_pat = (not any(r[0]) and r[1][0] == 1 and not any(r[1][2:])
                   and not any(r[k][0] for k in range(2, n)))
        col_pat = (not any(r[k][0] for k in range(n)) and r[0][1] == 1 and not any(r[0][2:])
                   and not any(r[k][1] for k in range(2, n)))
        if row_pat or col_pat:
            return True
    return False


@settings(max_examples=60)
@given(seifert_matrices(max_size=4), st.booleans())
def test_try_reduce_agrees_with_permutation_search(m, stabilize):
    if stabilize:
        m = enlarge_row(m, 1, [0] * m.size)
        m = congruent(m, random_elementary(m.size, random.Random(m.size)))
    if m.size >= 2:
        assert (try_reduce(m) is not None) == _brute_force_reducible(m)


def test_block_sum():
    assert block_sum(TREFOIL, EMPTY) == TREFOIL
    assert block_sum(EMPTY, TREFOIL) == TREFOIL
    assert block_sum(TREFOIL, TREFOIL).tolist() == [
        [-1, 1, 0, 0], [0, -1, 0, 0], [0, 0, -1, 1], [0, 0, 0, -1]]


def test_perturb():
    assert perturb(TREFOIL, 1, 0) == TREFOIL
    assert perturb(TREFOIL, 1, 1).tolist() == [[0, 1], [0, -1]]
    with pytest.raises(IndexOutOfRange):
        perturb(TREFOIL, 3, 1)
    with pytest.raises(IndexOutOfRange):
        perturb(TREFOIL, 0, 1)


def test_random_seifert_shape_and_determinism():
    assert random_seifert(0, 5, 1) == EMPTY
    m = random_seifert(2, 5, 11)
    (a, b1), (b, c) = m.rows
    assert b1 == b + 1
    assert random_seifert(8, 3, 99, scramble=10) == random_seifert(8, 3, 99, scramble=10)
    with pytest.raises(OddSizeRequested):
        random_seifert(3, 1, 0)


def test_random_s_moves_zero_is_identity():
    assert random_s_moves(TREFOIL, 0, 5) == TREFOIL


def test_random_s_moves_respects_entry_limit():
    m = random_s_moves(random_seifert(6, 5, 2), 40, 3, limit=50)
    assert max(abs(v) for r in m.rows for v in r) <= 50


@given(seifert_matrices(), st.integers(-3, 3), st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_enlargements_round_trip(m, x, vec):
    vec = vec[:m.size]
    assert try_reduce(enlarge_row(m, x, vec)) == m
    assert try_reduce(enlarge_col(m, x, vec)) == m


@settings(max_examples=50)
@given(seifert_matrices(), seeds, st.integers(0, 12))
def test_moves_stay_in_class(m, seed, k):
    # closure: every produced matrix revalidates from raw entries
    for out in (random_s_moves(m, k, seed), block_sum(m, m),
                congruent(m, random_elementary(m.size, random.Random(seed)))):
        assert validate(out.tolist()) == out


@given(seifert_matrices(), st.data())
def test_perturb_keeps_skew_part(m, data):
    if m.size == 0:
        return
    i = data.draw(st.integers(1, m.size))
    amount = data.draw(st.integers(-4, 4))
    assert perturb(m, i, amount).skew() == m.skew()


@given(seifert_matrices())
def test_skew_determinant_is_one(m):
    from seifert_forge.linalg import bareiss_det
    assert bareiss_det(m.skew()) == 1
