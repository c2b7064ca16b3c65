"""Chord diagrams modulo 4T and FI, and wheels pushed through STU."""

from seifert_forge import (
    canonicalize, code_string, enumerate_chords, monomials, quotient_dim, rank_mod_relations,
    relation_span, stu_reduce, wheel, wheel_monomial,
)

for d in range(6):
    print(f"degree {d}: {len(enumerate_chords(d)):4d} chord diagrams, "
          f"quotient dimension {quotient_dim(d)}")

print("canonical form of BAAB:", code_string(canonicalize("BAAB")))

# The two-spoke wheel becomes a combination of chord diagrams.
w2 = stu_reduce(wheel(2))
print("wheel(2) =", " ".join(f"{'+' if c > 0 else '-'} {abs(c)} {code_string(k)}" for k, c in w2.items()))

# Even wheel monomials stay independent modulo the relations.
for d in (2, 4, 6):
    combs = [wheel_monomial(p) for p in monomials(d)]
    print(f"degree {d}: wheel monomial rank {rank_mod_relations(combs, d)}")

# The three-spoke wheel with consecutive legs is not in the span. Its
# residual (up to scale) is a single diagram.
span = relation_span(3)
w3 = stu_reduce(wheel(3))
print("wheel(3) in span:", span.contains(w3))
res = span.reduce(w3)
print("residual:", {code_string(k): str(v) for k, v in res.items()})
