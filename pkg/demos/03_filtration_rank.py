"""Alternating sums of diagonal perturbations and the monomial rank count."""

from seifert_forge import (
    TREFOIL, alternating_sum, conway_of_combination, ft_degree_test, monomials, p_even,
    rank_experiment, unknotting_search,
)

comb = alternating_sum(TREFOIL, [1, 2])
print("alternating sum on [1, 2] has", len(comb), "terms")
print("its Conway polynomial:", conway_of_combination(TREFOIL, [1, 2]))
print("with a repeated index:", conway_of_combination(TREFOIL, [1, 1]))

# a_2 vanishes on sums with 3 indices, but not on sums with 2.
for d in (2, 3):
    rep = ft_degree_test(k=1, d=d, trials=100, max_size=8, seed=1)
    print(f"a_2 on degree-{d} sums: nonzero in {rep['nonzero']} of {rep['trials']}")

# Products of Conway coefficients are independent on the degree-d piece.
for d in (2, 4, 6):
    rep = rank_experiment(d, seed=7)
    print(f"d={d}: monomials {monomials(d)} rank {rep['rank']} (p_even = {p_even(d)})")

# One crossing change unknots the trefoil.
print("unknotting moves for the trefoil:", unknotting_search(TREFOIL))
