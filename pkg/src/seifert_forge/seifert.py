"""Seifert matrices and the moves generating S-equivalence.

A Seifert matrix here is an even-size integer matrix ``M`` whose skew part
``M - M^T`` is unimodular; the 0x0 matrix is included. An integer
skew-symmetric matrix of even size has determinant ``Pf^2 >= 0``, so
unimodularity of the skew part is the same as ``det(M - M^T) == 1``. That
is the check performed; a determinant of -1 cannot occur.

Public indices are 1-based throughout.
"""

import random
from dataclasses import dataclass

from .linalg import bareiss_det

#: Default bound on absolute entries produced by random moves.
ENTRY_LIMIT = 10**6


class SeifertError(ValueError):
    """Base class for invalid Seifert-matrix input."""


class NotSquare(SeifertError):
    pass


class OddSize(SeifertError):
    pass


class SkewPartNotUnimodular(SeifertError):
    def __init__(self, det):
        super().__init__(f"det(M - M^T) = {det}, expected 1")
        self.det = det


class SizeMismatch(SeifertError):
    pass


class LengthMismatch(SeifertError):
    pass


class IndexOutOfRange(SeifertError, IndexError):
    pass


class OddSizeRequested(SeifertError):
    pass


class NotUnimodular(SeifertError):
    pass


@dataclass(frozen=True)
class SeifertMatrix:
    """Validated, immutable Seifert matrix. Build it with `validate`."""

    rows: tuple

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self):
        return [list(r) for r in self.rows]

    def transpose_rows(self):
        n = self.size
        return [[self.rows[j][i] for j in range(n)] for i in range(n)]

    def skew(self):
        """The skew part ``M - M^T`` as a list of rows."""
        n = self.size
        r = self.rows
        return [[r[i][j] - r[j][i] for j in range(n)] for i in range(n)]

    def __repr__(self):
        return f"SeifertMatrix({self.tolist()!r})"


def _as_rows(a):
    rows = tuple(tuple(int(v) for v in r) for r in a)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquare("matrix is not square")
    return rows


def validate(a):
    """Check membership and return a `SeifertMatrix`.

    >>> validate([[-1, 1], [0, -1]]).size
    2
    """
    if isinstance(a, SeifertMatrix):
        return a
    rows = _as_rows(a)
    n = len(rows)
    if n % 2:
        raise OddSize(f"size {n} is odd")
    det = bareiss_det([[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)])
    if det != 1:
        raise SkewPartNotUnimodular(det)
    return SeifertMatrix(rows)


def _trusted(rows):
    # for constructions whose skew part is unimodular by design
    return SeifertMatrix(tuple(tuple(r) for r in rows))


def unimodular(p):
    """Validate an integer matrix with determinant +1 or -1; returns rows."""
    rows = _as_rows(p)
    det = bareiss_det(rows)
    if det not in (1, -1):
        raise NotUnimodular(f"det = {det}")
    return rows


def _matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def congruent(m, p):
    """Return ``P M P^T`` for a unimodular ``P``."""
    m = validate(m)
    p = unimodular(p)
    if len(p) != m.size:
        raise SizeMismatch(f"P has size {len(p)}, M has size {m.size}")
    if m.size == 0:
        return m
    pt = [list(c) for c in zip(*p)]
    return _trusted(_matmul(_matmul(p, m.rows), pt))


def enlarge_row(m, x, column):
    """Stabilize ``M`` to the block matrix ((0 0 O), (1 x O), (O C M))."""
    m = validate(m)
    column = [int(c) for c in column]
    n = m.size
    if len(column) != n:
        raise LengthMismatch(f"column has length {len(column)}, expected {n}")
    rows = [[0] * (n + 2), [1, int(x)] + [0] * n]
    rows += [[0, column[i]] + list(m.rows[i]) for i in range(n)]
    return _trusted(rows)


def enlarge_col(m, x, row):
    """Stabilize ``M`` to the block matrix ((0 1 O), (0 x R), (O O M))."""
    m = validate(m)
    row = [int(c) for c in row]
    n = m.size
    if len(row) != n:
        raise LengthMismatch(f"row has length {len(row)}, expected {n}")
    rows = [[0, 1] + [0] * n, [0, int(x)] + row]
    rows += [[0, 0] + list(m.rows[i]) for i in range(n)]
    return _trusted(rows)


def _delete(rows, a, b):
    keep = [k for k in range(len(rows)) if k != a and k != b]
    return [[rows[i][j] for j in keep] for i in keep]


def _row_pattern(r, a, b):
    # row a zero; column a zero except (b, a) = 1; row b zero off columns a, b
    n = len(r)
    if r[b][a] != 1:
        return False
    for k in range(n):
        if r[a][k]:
            return False
        if k != b and r[k][a]:
            return False
        if k != a and k != b and r[b][k]:
            return False
    return True


def _col_pattern(r, a, b):
    # column a zero; row a zero except (a, b) = 1; column b zero off rows a, b
    n = len(r)
    if r[a][b] != 1:
        return False
    for k in range(n):
        if r[k][a]:
            return False
        if k != b and r[a][k]:
            return False
        if k != a and k != b and r[k][b]:
            return False
    return True


def try_reduce(m):
    """Undo a stabilization, up to simultaneous permutation of rows/columns.

    Returns the inner matrix, or None when no pair of indices carries one of
    the two enlargement patterns. None says nothing about S-equivalence.
    The pair (1, 2) is tried first, so this inverts `enlarge_row` and
    `enlarge_col` exactly.
    """
    m = validate(m)
    r = m.rows
    n = m.size
    if n < 2:
        return None
    for a in range(n):
        # both patterns need an all-zero row or column at a
        zero_row = not any(r[a])
        zero_col = not any(r[k][a] for k in range(n))
        if not (zero_row or zero_col):
            continue
        for b in range(n):
            if b == a:
                continue
            if zero_row and _row_pattern(r, a, b):
                return _trusted(_delete(r, a, b))
            if zero_col and _col_pattern(r, a, b):
                return _trusted(_delete(r, a, b))
    return None


def block_sum(a, b):
    """Block-diagonal sum ``A (+) B`` (Seifert matrix of a connected sum)."""
    a, b = validate(a), validate(b)
    na, nb = a.size, b.size
    rows = [list(r) + [0] * nb for r in a.rows]
    rows += [[0] * na + list(r) for r in b.rows]
    return _trusted(rows)


def perturb(m, i, amount=1):
    """Add ``amount`` to the (i, i) entry (1-based). The skew part is unchanged."""
    m = validate(m)
    if not 1 <= i <= m.size:
        raise IndexOutOfRange(f"index {i} not in 1..{m.size}")
    rows = [list(r) for r in m.rows]
    rows[i - 1][i - 1] += int(amount)
    return _trusted(rows)


def random_elementary(n, rng):
    """A random elementary unimodular matrix: I + (+-1) E_ij, or a signed swap."""
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        if n == 1:
            p[0][0] = rng.choice((1, -1))
        return p
    i, j = rng.sample(range(n), 2)
    if rng.random() < 0.75:
        p[i][j] = rng.choice((1, -1))
    else:
        p[i][i] = p[j][j] = 0
        p[i][j] = 1
        p[j][i] = -1
    return p


def _max_abs(m):
    return max((abs(v) for r in m.rows for v in r), default=0)


def random_seifert(n, bound=5, seed=0, scramble=0, limit=ENTRY_LIMIT):
    """Reproducible random Seifert matrix of size ``n``.

    A symmetric matrix with entries in [-bound, bound] plus the strict upper
    triangle of the standard symplectic form, so the skew part is exactly the
    standard form. ``scramble`` further applies that many random elementary
    congruences (moves pushing an entry above ``limit`` are skipped).
    """
    if n % 2 or n < 0:
        raise OddSizeRequested(f"size {n} must be even and non-negative")
    rng = random.Random(seed)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = rng.randint(-bound, bound)
            rows[i][j] = rows[j][i] = v
    for k in range(0, n, 2):
        rows[k][k + 1] += 1
    m = _trusted(rows)
    for _ in range(scramble):
        cand = congruent(m, random_elementary(n, rng))
        if _max_abs(cand) <= limit:
            m = cand
    return m


def random_s_moves(m, k, seed=0, limit=ENTRY_LIMIT):
    """Apply ``k`` random S-equivalence moves; deterministic given ``seed``.

    Each step picks uniformly among: congruence by a random elementary
    matrix, `enlarge_row`, `enlarge_col`, and `try_reduce` when it applies.
    A move that would push an entry above ``limit`` is skipped (it still
    counts as a step).
    """
    m = validate(m)
    rng = random.Random(seed)
    for _ in range(k):
        n = m.size
        inner = try_reduce(m) if n >= 2 else None
        kinds = ["congruence", "row", "col"] + (["reduce"] if inner is not None else [])
        kind = rng.choice(kinds)
        if kind == "congruence":
            if n == 0:
                continue
            cand = congruent(m, random_elementary(n, rng))
        elif kind == "row":
            cand = enlarge_row(m, rng.randint(-3, 3), [rng.randint(-2, 2) for _ in range(n)])
        elif kind == "col":
            cand = enlarge_col(m, rng.randint(-3, 3), [rng.randint(-2, 2) for _ in range(n)])
        else:
            cand = inner
        if _max_abs(cand) <= limit:
            m = cand
    return m


TREFOIL = _trusted([[-1, 1], [0, -1]])
FIGURE_EIGHT = _trusted([[1, 1], [0, -1]])
EMPTY = _trusted([])
