# Path matrices of positive braids
#
# Run: python3 demos/01_path_matrix.py

# %%
from posbraid import parse_braid_word, path_matrix, inverse_path_matrix
from posbraid.pathmatrix import row_reduction_factors, product

trefoil = parse_braid_word("s1^3")
B = path_matrix(trefoil)
print("path matrix of the trefoil word")
print(B)

# %% the same matrix over Z, and its inverse
Bz = path_matrix(trefoil, "Z")
Binv = inverse_path_matrix(trefoil, "Z")
print("\ninverse over Z")
print(Binv)
print("B . B^-1 is the identity:", (Bz @ Binv).is_identity())

# %% setting every label to 0 leaves the permutation matrix of the closure
print("\nB at b = 0:", B.evaluate(lambda v: 0))
print("permutation:", trefoil.permutation().images)

# %% row reduction: B = A_1 A_2 A_3 P
factors, P = row_reduction_factors(trefoil)
for k, a in enumerate(factors, start=1):
    print(f"\nA_{k}\n{a}")
print("product matches B:", product(factors, 2) @ P == B)

# %% a permutation braid: entries are single labels, 1s or 0s
half_twist = parse_braid_word("3 2 1 3 2 3")
print("\nhalf twist on four strands")
print(path_matrix(half_twist))
