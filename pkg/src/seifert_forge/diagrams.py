"""Chord and web diagrams on an oriented circle.

A chord diagram of degree d is stored as a tuple of length 2d: the chord
labels met walking once around the circle. The canonical form is the
lexicographically least relabeled word over all rotations (no reflections,
since the circle is oriented); relabeling assigns 0, 1, 2, ... in order of
first occurrence. Strings like ``"ABAB"`` are accepted wherever a code is.

The relation space at degree d is spanned by the four-term (4T) relations
and the framing-independence (FI) relations. 4T relations are generated as
the difference of the two STU expansions of a tripod (one trivalent vertex
with three legs) at two of its legs, so they use the same sign convention as
`stu_reduce`:

    vertex with cyclic order (leg e0, e1, e2), leg at position p
        =  [e1 end, e2 end at p]  -  [e2 end, e1 end at p]

Reversing a cyclic order negates a diagram (AS).
"""

import functools
import itertools
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .combination import LinearCombination
from .linalg import SparseEchelon

#: Default degree cap for relation spans; override with SEIFERT_FORGE_MAX_DEGREE.
DEFAULT_MAX_DEGREE = 6


def max_degree():
    return int(os.environ.get("SEIFERT_FORGE_MAX_DEGREE", DEFAULT_MAX_DEGREE))


class DiagramError(ValueError):
    pass


class LeglessComponent(DiagramError):
    """A dashed component with no univalent vertex; STU cannot reach it."""


class DegreeCapExceeded(DiagramError):
    pass


# -- chord diagrams ---------------------------------------------------------

def _relabel(word):
    seen = {}
    return tuple(seen.setdefault(c, len(seen)) for c in word)


def canonicalize(code):
    """Canonical tuple of a chord code (string or sequence of labels)."""
    word = tuple(code)
    n = len(word)
    if n == 0:
        return ()
    counts = {}
    for c in word:
        counts[c] = counts.get(c, 0) + 1
    if any(v != 2 for v in counts.values()):
        raise DiagramError(f"every label must occur exactly twice in {code!r}")
    return min(_relabel(word[r:] + word[:r]) for r in range(n))


def code_string(diagram):
    """Letters A, B, ... for a canonical tuple (degree <= 26)."""
    return "".join(chr(65 + c) for c in diagram)


def degree(diagram):
    return len(diagram) // 2


def _matchings(points):
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points)):
        rest = points[1:k] + points[k + 1:]
        for m in _matchings(rest):
            yield [(first, points[k])] + m


def _word_from_matching(n, matching):
    word = [None] * n
    for label, (a, b) in enumerate(matching):
        word[a] = word[b] = label
    return word


@functools.lru_cache(maxsize=None)
def enumerate_chords(d):
    """All canonical chord diagrams of degree ``d``, sorted."""
    n = 2 * d
    found = {canonicalize(_word_from_matching(n, m)) for m in _matchings(list(range(n)))}
    return tuple(sorted(found))


def has_isolated_chord(diagram):
    n = len(diagram)
    return any(diagram[i] == diagram[(i + 1) % n] for i in range(n))


def fi_relations(d):
    """One singleton relation per diagram with an isolated chord."""
    return [LinearCombination.single(D) for D in enumerate_chords(d) if has_isolated_chord(D)]


def _stu_pair(word, pos, first, second):
    """Replace the leg at ``pos`` by chord ends labelled (first, second)."""
    s = canonicalize(word[:pos] + [first, second] + word[pos + 1:])
    u = canonicalize(word[:pos] + [second, first] + word[pos + 1:])
    return s, u


@functools.lru_cache(maxsize=None)
def _four_t(d):
    if d < 2:
        return ()
    n = 2 * d - 1              # circle points: 2(d-2) chord ends plus 3 legs
    legs = ("P", "Q", "R")     # cyclic order at the vertex
    out = set()
    # rotate so that leg P sits at position 0
    for q, r in itertools.permutations(range(1, n), 2):
        others = [k for k in range(1, n) if k != q and k != r]
        for m in _matchings(others):
            base = [None] * n
            for label, (a, b) in enumerate(m):
                base[a] = base[b] = label
            pos = {"P": 0, "Q": q, "R": r}
            terms = []
            for sign, leg in ((1, "P"), (-1, "Q")):
                nxt = legs[(legs.index(leg) + 1) % 3]
                nnx = legs[(legs.index(leg) + 2) % 3]
                word = list(base)
                word[pos[nxt]] = nxt
                word[pos[nnx]] = nnx
                s, u = _stu_pair(word, pos[leg], nxt, nnx)
                terms += [(s, sign), (u, -sign)]
            rel = LinearCombination(terms)
            if rel:
                out.add(_normalize(rel))
    return tuple(sorted(out, key=lambda c: sorted(c.items())))


def _normalize(rel):
    # fix the overall sign so duplicates up to sign collapse
    first = min(rel.keys())
    return rel if rel[first] > 0 else -rel


def four_t_relations(d):
    """All distinct 4T relations among degree-d canonical diagrams."""
    return list(_four_t(d))


@dataclass
class RelationSpan:
    """Row-reduced span of the 4T and FI relations at one degree."""

    degree: int
    basis: tuple                       # canonical diagrams (coordinates)
    echelon: SparseEchelon = field(repr=False)

    @property
    def rank(self):
        return self.echelon.rank

    @property
    def quotient_dim(self):
        return len(self.basis) - self.rank

    def coordinates(self, comb):
        vec = {}
        for D, c in comb.items():
            if len(D) != 2 * self.degree:
                raise DiagramError(f"diagram {D} is not of degree {self.degree}")
            vec[D] = vec.get(D, 0) + Fraction(c)
        return vec

    def contains(self, comb):
        return self.echelon.contains(self.coordinates(comb))

    def reduce(self, comb):
        """Residual of ``comb`` modulo the span, up to a non-zero scalar."""
        return self.echelon.reduce(self.coordinates(comb))


def _check_cap(d, cap):
    cap = max_degree() if cap is None else cap
    if d > cap:
        raise DegreeCapExceeded(f"degree {d} exceeds cap {cap}")


@functools.lru_cache(maxsize=None)
def _span(d):
    rels = fi_relations(d) + four_t_relations(d)
    weight = {}
    for rel in rels:
        for D in rel.keys():
            weight[D] = weight.get(D, 0) + 1
    ech = SparseEchelon(weight)
    for rel in sorted(rels, key=len):
        ech.add(dict(rel.items()))
    return RelationSpan(d, enumerate_chords(d), ech)


def relation_span(d, cap=None):
    _check_cap(d, cap)
    return _span(d)


def quotient_dim(d, cap=None):
    """Dimension of the degree-d chord space modulo 4T and FI."""
    return relation_span(d, cap).quotient_dim


def rank_mod_relations(combinations, d, cap=None):
    """Rank of ``combinations`` in the quotient by `relation_span` ``(d)``."""
    span = relation_span(d, cap)
    ech = span.echelon.copy()
    return sum(ech.add(span.coordinates(c)) for c in combinations)


# -- web diagrams -----------------------------------------------------------

@dataclass(frozen=True)
class WebDiagram:
    """Uni-trivalent dashed graph with its univalent vertices on the circle.

    ``legs``: univalent vertex ids in circle order.
    ``vertices``: trivalent vertex id -> counter-clockwise tuple of 3 edge ids.
    ``edges``: edge id -> (vertex id, vertex id).
    Parallel edges are allowed; loops are not.
    """

    legs: tuple = ()
    vertices: dict = field(default_factory=dict)
    edges: dict = field(default_factory=dict)

    def __post_init__(self):
        deg = {}
        for e, (a, b) in self.edges.items():
            if a == b:
                raise DiagramError(f"edge {e} is a loop")
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        for v in self.legs:
            if deg.get(v) != 1:
                raise DiagramError(f"leg {v} must be univalent")
        for v, cyc in self.vertices.items():
            if len(cyc) != 3 or deg.get(v) != 3:
                raise DiagramError(f"vertex {v} must be trivalent")
            for e in cyc:
                if v not in self.edges[e]:
                    raise DiagramError(f"edge {e} is not incident to vertex {v}")
        if set(deg) != set(self.legs) | set(self.vertices):
            raise DiagramError("edges reference unknown vertices")
        if len(set(self.legs)) != len(self.legs) or set(self.legs) & set(self.vertices):
            raise DiagramError("vertex ids must be unique")
        if (len(self.legs) + len(self.vertices)) % 2:
            raise DiagramError("odd number of vertices")

    @property
    def degree(self):
        return (len(self.legs) + len(self.vertices)) // 2

    def is_chord_diagram(self):
        return not self.vertices

    def chord_code(self):
        if self.vertices:
            raise DiagramError("diagram has trivalent vertices")
        label = {}
        for e, (a, b) in self.edges.items():
            label[a] = label[b] = e
        return canonicalize([label[v] for v in self.legs])

    def components(self):
        adj = {v: [] for v in list(self.legs) + list(self.vertices)}
        for a, b in self.edges.values():
            adj[a].append(b)
            adj[b].append(a)
        seen, comps = set(), []
        for v in adj:
            if v in seen:
                continue
            stack, comp = [v], set()
            while stack:
                u = stack.pop()
                if u in comp:
                    continue
                comp.add(u)
                stack.extend(adj[u])
            seen |= comp
            comps.append(comp)
        return comps

    def to_json(self):
        """``{legs, vertices: [{id, cyclic}], edges: [[a, b], ...]}`` with integer ids.

        Vertices are renumbered legs first, then trivalent vertices; an edge's
        id is its position in ``edges`` and ``cyclic`` lists edge ids.
        """
        order = list(self.legs) + sorted(self.vertices, key=repr)
        vid = {v: k for k, v in enumerate(order)}
        edge_order = sorted(self.edges, key=repr)
        eid = {e: k for k, e in enumerate(edge_order)}
        return {
            "legs": [vid[v] for v in self.legs],
            "vertices": [{"id": vid[v], "cyclic": [eid[e] for e in self.vertices[v]]}
                         for v in order[len(self.legs):]],
            "edges": [[vid[a], vid[b]] for a, b in (self.edges[e] for e in edge_order)],
        }

    @classmethod
    def from_json(cls, doc):
        edges = {k: (a, b) for k, (a, b) in enumerate(doc["edges"])}
        vertices = {v["id"]: tuple(v["cyclic"]) for v in doc.get("vertices", [])}
        return cls(tuple(doc["legs"]), vertices, edges)


EMPTY_DIAGRAM = WebDiagram()


def chord_diagram(code):
    """A chord diagram as a `WebDiagram` (legs 0..2d-1, one edge per chord)."""
    word = tuple(code)
    ends = {}
    for pos, c in enumerate(word):
        ends.setdefault(c, []).append(pos)
    edges = {k: tuple(p) for k, p in enumerate(ends.values())}
    return WebDiagram(tuple(range(len(word))), {}, edges)


def wheel(spokes):
    """Wheel with a dashed rim of ``spokes`` trivalent vertices.

    Spokes meet the circle consecutively in rim order. Drawing the rim inside
    the circle, counter-clockwise at rim vertex i is: spoke, rim edge to
    vertex i+1, rim edge to vertex i-1.
    """
    m = int(spokes)
    if m < 2:
        raise DiagramError("a wheel needs at least 2 spokes")
    legs = tuple(range(m))
    rim = [m + i for i in range(m)]
    edges = {}
    for i in range(m):
        edges[("s", i)] = (legs[i], rim[i])
        edges[("r", i)] = (rim[i], rim[(i + 1) % m])
    vertices = {rim[i]: (("s", i), ("r", i), ("r", (i - 1) % m)) for i in range(m)}
    return WebDiagram(legs, vertices, edges)


def _offset(W, tag):
    def vid(v):
        return (tag, v)
    return WebDiagram(
        tuple(vid(v) for v in W.legs),
        {vid(v): tuple((tag, e) for e in c) for v, c in W.vertices.items()},
        {(tag, e): (vid(a), vid(b)) for e, (a, b) in W.edges.items()},
    )


def product(W1, W2):
    """Connected-sum product: disjoint dashed parts, legs of W1 then legs of W2."""
    A, B = _offset(W1, 0), _offset(W2, 1)
    return WebDiagram(A.legs + B.legs, {**A.vertices, **B.vertices}, {**A.edges, **B.edges})


def _other(edge, v):
    a, b = edge
    return b if a == v else a


def _eligible(W):
    """(vertex, leg-edge) pairs where STU applies, in a stable order."""
    legs = set(W.legs)
    out = []
    for v, cyc in W.vertices.items():
        for e in cyc:
            if _other(W.edges[e], v) in legs:
                out.append((v, e))
    return sorted(out, key=repr)


def stu_step(W, v, e0):
    """Apply STU at trivalent vertex ``v`` along its leg edge ``e0``.

    Returns ((+1, S), (-1, U)) with W = S - U.
    """
    cyc = W.vertices[v]
    k = cyc.index(e0)
    _, e1, e2 = cyc[k:] + cyc[:k]
    u = _other(W.edges[e0], v)
    w1 = _other(W.edges[e1], v)
    w2 = _other(W.edges[e2], v)
    n1, n2 = ("stu", v, 1), ("stu", v, 2)
    pos = W.legs.index(u)
    edges = {e: ends for e, ends in W.edges.items() if e != e0}
    edges[e1] = (n1, w1)
    edges[e2] = (n2, w2)
    vertices = {x: c for x, c in W.vertices.items() if x != v}
    s_legs = W.legs[:pos] + (n1, n2) + W.legs[pos + 1:]
    u_legs = W.legs[:pos] + (n2, n1) + W.legs[pos + 1:]
    return ((1, WebDiagram(s_legs, vertices, edges)),
            (-1, WebDiagram(u_legs, vertices, dict(edges))))


def stu_reduce(W, rng=None):
    """Expand a web diagram into canonical chord diagrams by repeated STU.

    With ``rng`` (a `random.Random`), the vertex eliminated at each step is
    chosen at random among the eligible ones; the results of different
    orders agree modulo `relation_span`.
    """
    if isinstance(W, (str, tuple)):
        return LinearCombination.single(canonicalize(W))
    for comp in W.components():
        if not comp & set(W.legs):
            raise LeglessComponent(f"component {sorted(comp, key=repr)} has no legs")
    out = {}
    stack = [(1, W)]
    while stack:
        c, D = stack.pop()
        if not D.vertices:
            key = D.chord_code()
            out[key] = out.get(key, 0) + c
            continue
        cand = _eligible(D)
        v, e0 = rng.choice(cand) if rng is not None else cand[0]
        for s, nxt in stu_step(D, v, e0):
            stack.append((c * s, nxt))
    return LinearCombination(sorted(out.items()))


def wheels_product(partition):
    W = EMPTY_DIAGRAM
    for p in partition:
        W = product(W, wheel(p))
    return W


def wheel_monomial(partition, rng=None):
    """STU expansion of the product of wheels with the given spoke counts."""
    return stu_reduce(wheels_product(partition), rng)


def stu_orders_agree(W, trials=3, seed=0):
    """True if random STU elimination orders agree modulo the relations."""
    base = stu_reduce(W)
    span = relation_span(W.degree)
    for t in range(trials):
        other = stu_reduce(W, random.Random(f"{seed}:{t}"))
        if not span.contains(base - other):
            return False
    return True


def combination_to_json(comb):
    from .serialize import encode_rational
    return {"terms": [{"coeff": encode_rational(c), "diagram": code_string(D)}
                      for D, c in comb.items()]}


def combination_from_json(doc):
    from .serialize import decode_rational
    return LinearCombination((canonicalize(t["diagram"]), decode_rational(t["coeff"]))
                             for t in doc["terms"])
