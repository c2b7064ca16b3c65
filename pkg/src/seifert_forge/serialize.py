"""JSON formats for matrices, polynomials, and combinations.

Integers are written as JSON numbers when ``|v| < 2**53`` and as decimal
strings otherwise; readers accept both. Rationals are ``"p/q"`` strings.
"""

import json
from fractions import Fraction

from .combination import LinearCombination
from .invariants import LaurentPolynomial
from .seifert import SeifertMatrix, validate

SAFE_INT = 2**53


def encode_int(v):
    v = int(v)
    return v if abs(v) < SAFE_INT else str(v)


def decode_int(v):
    if isinstance(v, bool):
        raise ValueError("boolean is not an integer")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v.strip())
    if isinstance(v, float) and v.is_integer():
        return int(v)
    raise ValueError(f"not an integer: {v!r}")


def encode_rational(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def decode_rational(s):
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    return Fraction(str(s))


def matrix_to_json(m):
    rows = m.rows if isinstance(m, SeifertMatrix) else m
    return {"size": len(rows), "rows": [[encode_int(v) for v in r] for r in rows]}


def matrix_from_json(doc, check=True):
    """Read ``{"size": n, "rows": [...]}`` (a bare list of rows is also accepted)."""
    if isinstance(doc, list):
        rows = doc
    else:
        rows = doc["rows"]
    rows = [[decode_int(v) for v in r] for r in rows]
    if isinstance(doc, dict) and "size" in doc and decode_int(doc["size"]) != len(rows):
        raise ValueError(f"size field {doc['size']} does not match {len(rows)} rows")
    return validate(rows) if check else rows


def poly_to_json(p):
    return {"var": p.var, "terms": [[e, encode_int(c)] for e, c in p.terms]}


def poly_from_json(doc):
    return LaurentPolynomial.from_dict(
        doc["var"], {int(e): decode_int(c) for e, c in doc["terms"]})


def matrix_combination_to_json(c):
    return {"terms": [{"coeff": encode_rational(q), "matrix": matrix_to_json(m)}
                      for m, q in c.items()]}


def matrix_combination_from_json(doc):
    return LinearCombination(
        (matrix_from_json(t["matrix"]), decode_rational(t["coeff"])) for t in doc["terms"])


def dumps(doc):
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
