"""Formal Q-linear combinations of hashable objects."""

from fractions import Fraction


class LinearCombination:
    """Immutable formal sum ``sum c_i [x_i]`` with rational coefficients.

    Equal keys are merged and zero coefficients dropped on construction.
    Iteration order is insertion order of first appearance, which keeps
    serialized output deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            acc[key] = acc.get(key, 0) + Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def single(cls, key, c=1):
        return cls([(key, c)])

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __getitem__(self, key):
        return self._terms.get(key, Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        return LinearCombination(list(self.items()) + list(other.items()))

    def __neg__(self):
        return LinearCombination((k, -c) for k, c in self.items())

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return LinearCombination((k, c * scalar) for k, c in self.items())

    __rmul__ = __mul__

    def map_keys(self, fn):
        """Apply ``fn`` to every key, merging keys that collide."""
        return LinearCombination((fn(k), c) for k, c in self.items())

    def apply(self, fn):
        """Evaluate the linear extension of ``fn``."""
        return sum((c * fn(k) for k, c in self.items()), Fraction(0))

    def __repr__(self):
        inner = ", ".join(f"{c}*{k!r}" for k, c in self.items())
        return f"LinearCombination({inner})"
