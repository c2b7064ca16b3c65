"""Alternating sums of diagonal perturbations and the induced filtration.

For a Seifert matrix ``M`` and 1-based indices ``i_1..i_d``, the alternating
sum is

    sum over e in {0,1}^d of (-1)^(e_1+...+e_d) [M + e_1 E_{i_1 i_1} + ... ]

and the degree-d piece of the filtration is spanned by all of them.
Combinations are kept on literal matrices; S-equivalence is only ever seen
through invariants, which are insensitive to it.

Why the z^d divisibility holds: the diagonal entry ``m_ii`` enters
``x M - x^-1 M^T`` only through the (i, i) entry ``z * m_ii``, so the
Conway polynomial is affine in each ``m_ii`` with slope divisible by z.
Each distinct index in the alternating sum takes one finite difference,
picking up one factor of z; a repeated index takes a second difference of an
affine function, which is zero.
"""

import functools
import itertools
import random
from fractions import Fraction

from .combination import LinearCombination
from .invariants import LaurentPolynomial, conway
from .linalg import rank
from .seifert import (
    EMPTY, FIGURE_EIGHT, TREFOIL, IndexOutOfRange, _trusted, block_sum, congruent,
    perturb, random_elementary, random_seifert, try_reduce, validate,
)

#: Largest degree `rank_experiment` accepts unless told otherwise.
RANK_DEGREE_CAP = 8
#: Reseeds allowed when a random family comes out rank-deficient.
RANK_RETRIES = 5


class DegreeTooLarge(ValueError):
    pass


def trial_rng(seed, trial):
    """Independent, reproducible RNG stream for one trial."""
    return random.Random(f"{seed}:{trial}")


@functools.lru_cache(maxsize=1 << 16)
def _conway(m):
    return conway(m)


def check_indices(m, idx):
    idx = tuple(int(i) for i in idx)
    for i in idx:
        if not 1 <= i <= m.size:
            raise IndexOutOfRange(f"index {i} not in 1..{m.size}")
    return idx


def _perturbed(m, idx, eps):
    rows = [list(r) for r in m.rows]
    for i, e in zip(idx, eps):
        if e:
            rows[i - 1][i - 1] += 1
    return _trusted(rows)


def alternating_sum(m, idx):
    """The signed sum of all diagonal perturbations of ``m`` along ``idx``."""
    m = validate(m)
    idx = check_indices(m, idx)
    return LinearCombination(
        (_perturbed(m, idx, eps), (-1) ** sum(eps))
        for eps in itertools.product((0, 1), repeat=len(idx)))


def conway_of_combination(m, idx):
    """Conway polynomial extended linearly to ``alternating_sum(m, idx)``."""
    total = LaurentPolynomial("z")
    for mat, c in alternating_sum(m, idx).items():
        total = total + _conway(mat) * int(c)
    return total


def monomial_value(spec, m):
    """Product of Conway coefficients a_{e} over exponents e in ``spec``."""
    nabla = _conway(validate(m))
    out = 1
    for e in spec:
        if e < 0 or e % 2:
            raise ValueError(f"exponent must be even and non-negative, got {e}")
        out *= nabla[e]
        if not out:
            break
    return out


def evaluate(spec, combination):
    """Linear extension of a monomial in Conway coefficients.

    ``spec`` is a multiset of even exponents: (2,) is a_2, (4, 2) is
    a_4 * a_2, and (0,) or () is the constant 1.
    """
    spec = tuple(spec)
    return combination.apply(lambda m: monomial_value(spec, m))


def monomials(d):
    """Partitions of ``d`` into even parts, in decreasing lexicographic order."""
    if d < 0 or d % 2:
        return []

    def parts(rest, largest):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, largest), 0, -2):
            for tail in parts(rest - p, p):
                yield (p,) + tail

    return list(parts(d, d - d % 2))


@functools.lru_cache(maxsize=None)
def partition_count(n):
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def p_even(d):
    """Number of partitions of ``d`` into even parts."""
    if d < 0 or d % 2:
        return 0
    return partition_count(d // 2)


def ft_degree_test(k, d, trials, max_size=12, seed=0, bound=5):
    """Check that a_{2k} vanishes on random degree-d alternating sums.

    Each trial draws a random (scrambled) Seifert matrix of even size between
    d and ``max_size`` and ``d`` distinct indices. The vanishing claim only
    applies when ``d >= 2k + 1``; for smaller ``d`` the report is expected to
    fail and lists a witness.
    """
    if max_size < d:
        raise ValueError(f"max_size {max_size} cannot hold {d} distinct indices")
    nonzero = 0
    witness = None
    lo = max(2, d + d % 2)
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        n = rng.randrange(lo, max_size + 1, 2)
        m = random_seifert(n, bound, rng.getrandbits(32), scramble=rng.randint(0, 8))
        idx = sorted(rng.sample(range(1, n + 1), d))
        value = conway_of_combination(m, idx)[2 * k]
        if value:
            nonzero += 1
            if witness is None:
                witness = {"trial": trial, "matrix": m.tolist(), "indices": idx, "value": value}
    return {
        "k": k, "d": d, "trials": trials, "seed": seed, "max_size": max_size,
        "claim_applies": d >= 2 * k + 1,
        "nonzero": nonzero,
        "counterexample": witness,
        "pass": nonzero == 0,
    }


def _genus_one(rng, bound):
    return random_seifert(2, bound, rng.getrandbits(32))


def _rank_family(d, rng, bound=3):
    """Degree-d alternating sums for the rank experiment.

    Three kinds: block sums of genus-1 matrices perturbed on every diagonal
    slot (named trefoil / figure-eight blocks and random ones), block sums of
    scrambled blocks shaped by each even partition of d, and scrambled
    matrices of size d + 2 with d random distinct indices.
    """
    family = []
    full = list(range(1, d + 1))

    m = EMPTY
    for j in range(d // 2):
        m = block_sum(m, TREFOIL if j % 2 == 0 else FIGURE_EIGHT)
    family.append((m, full))

    m = EMPTY
    for _ in range(d // 2):
        m = block_sum(m, _genus_one(rng, bound))
    family.append((m, full))

    for part in monomials(d):
        m = EMPTY
        for p in part:
            m = block_sum(m, random_seifert(p, bound, rng.getrandbits(32), scramble=2 * p))
        family.append((m, full))

    target = max(2 * p_even(d), len(family)) + 2
    while len(family) < target:
        n = d + 2
        m = random_seifert(n, bound, rng.getrandbits(32), scramble=2 * n)
        family.append((m, sorted(rng.sample(range(1, n + 1), d))))
    return family


def rank_experiment(d, seed=0, max_degree=RANK_DEGREE_CAP, retries=RANK_RETRIES):
    """Rank of Conway-monomial evaluations on degree-d alternating sums.

    Rows are family members, columns are `monomials(d)`. The rank is at most
    ``p_even(d)``; a rank-deficient random family is redrawn up to
    ``retries`` times.
    """
    if d > max_degree:
        raise DegreeTooLarge(f"degree {d} exceeds cap {max_degree}")
    if d < 0 or d % 2:
        raise ValueError(f"degree must be even and non-negative, got {d}")
    cols = monomials(d)
    expected = p_even(d)
    for attempt in range(retries + 1):
        rng = trial_rng(seed, attempt)
        family = _rank_family(d, rng)
        matrix = []
        for m, idx in family:
            comb = alternating_sum(m, idx)
            matrix.append([evaluate(spec, comb) for spec in cols])
        r = rank(matrix)
        if r == expected:
            break
    return {
        "d": d, "seed": seed, "attempts": attempt + 1,
        "monomials": [list(c) for c in cols],
        "family": [{"matrix": m.tolist(), "indices": idx} for m, idx in family],
        "matrix": [[int(v) if Fraction(v).denominator == 1 else str(v) for v in row]
                   for row in matrix],
        "rank": r, "expected": expected, "pass": r == expected,
    }


def _moves(m):
    """Candidate unknotting-search moves from ``m``, cheapest first."""
    n = m.size
    if n >= 2 and try_reduce(m) is not None:
        yield {"move": "reduce"}
    for i in range(1, n + 1):
        for a in (1, -1):
            yield {"move": "perturb", "index": i, "amount": a}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for s in (1, -1):
                p = [[int(r == c) for c in range(n)] for r in range(n)]
                p[i][j] = s
                yield {"move": "congruence", "P": p}
            if i < j:
                p = [[int(r == c) for c in range(n)] for r in range(n)]
                p[i][i] = p[j][j] = 0
                p[i][j], p[j][i] = 1, -1
                yield {"move": "congruence", "P": p}


def apply_move(m, move):
    kind = move["move"]
    if kind == "reduce":
        out = try_reduce(m)
        if out is None:
            raise ValueError("reduce does not apply")
        return out
    if kind == "perturb":
        return perturb(m, move["index"], move["amount"])
    if kind == "congruence":
        return congruent(m, move["P"])
    raise ValueError(f"unknown move {kind!r}")


def apply_moves(m, moves):
    m = validate(m)
    for mv in moves:
        m = apply_move(m, mv)
    return m


def unknotting_search(m, max_depth=4):
    """Iterative-deepening search for moves taking ``m`` to the 0x0 matrix.

    Moves are ``try_reduce``, ``perturb(i, +-1)`` and elementary
    congruences. Returns the move list, or None if nothing is found within
    ``max_depth`` (which proves nothing).
    """
    m = validate(m)
    if m.size == 0:
        return []

    def dfs(cur, depth, path, seen):
        if cur.size == 0:
            return list(path)
        # each reduce removes two rows, so the empty matrix is out of reach
        if depth == 0 or cur.size // 2 > depth:
            return None
        if seen.get(cur, -1) >= depth:
            return None
        seen[cur] = depth
        for mv in _moves(cur):
            nxt = apply_move(cur, mv)
            path.append(mv)
            found = dfs(nxt, depth - 1, path, seen)
            if found is not None:
                return found
            path.pop()
        return None

    for depth in range(1, max_depth + 1):
        found = dfs(m, depth, [], {})
        if found is not None:
            return found
    return None
