"""Conway and Alexander polynomials from a handful of matrices."""

from seifert_forge import FIGURE_EIGHT, TREFOIL, alexander, block_sum, conway, random_seifert

for name, m in [("trefoil", TREFOIL), ("figure-eight", FIGURE_EIGHT)]:
    print(f"{name:14s} conway {str(conway(m)):12s} alexander {alexander(m)}")

# Both determinant routes agree.
m = random_seifert(8, bound=4, seed=3, scramble=10)
print("random 8x8, interpolation:", conway(m))
print("random 8x8, polynomial Bareiss:", conway(m, method="bareiss"))

# Block sums multiply.
g = block_sum(TREFOIL, FIGURE_EIGHT)
print("trefoil # figure-eight:", conway(g), "=", conway(TREFOIL) * conway(FIGURE_EIGHT))

# Delta is symmetric and Delta(1) = 1.
d = alexander(m)
print("Delta(1) =", d(1), " symmetric:", all(d[-e] == c for e, c in d.terms))
