"""S-moves on Seifert matrices, and what the Conway polynomial sees of them."""

from seifert_forge import (
    TREFOIL, conway, enlarge_col, enlarge_row, random_s_moves, try_reduce, validate,
)

# A Seifert matrix needs det(M - M^T) = 1.
M = validate([[-1, 1], [0, -1]])
print("trefoil:", M.tolist(), "skew part:", M.skew())

# Enlarge by a row move, then undo it with the pattern search.
big = enlarge_row(M, x=2, column=[3, -1])
print("enlarged (4x4):")
for row in big.tolist():
    print("  ", row)
print("reduced back:", try_reduce(big).tolist())

big = enlarge_col(M, x=-1, row=[0, 2])
print("column move, reduced back:", try_reduce(big).tolist())

# Twenty random moves later the matrix looks nothing like the trefoil,
# but the Conway polynomial has not moved.
far = random_s_moves(TREFOIL, 20, seed=5)
print(f"after 20 random moves: size {far.size}, conway {conway(far)}")
print("trefoil conway:", conway(TREFOIL))
