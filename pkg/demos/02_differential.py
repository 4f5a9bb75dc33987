# The differential of a_1..a_q
#
# d a_n = 1 + C_nn(B), where C_nn sums products of path matrix entries
# along admissible sequences.

# %%
from posbraid import differential, parse_braid_word
from posbraid.dga import admissible_sequences, count_admissible, polynomial_C

print("admissible sequences for n = 3:", list(admissible_sequences(3)))
print("sizes:", [count_admissible(n) for n in range(1, 6)])

# %% generic C_33 in the symbols B[i,j]
print("\nC_33 =", polynomial_C(3, 3, 3))

# %% substitute the trefoil path matrix
for n, d in enumerate(differential(parse_braid_word("1^3")), start=1):
    print(f"d a{n} = {d}")

# %% sizes grow fast with the strand count
for text in ["1 2 1 2", "1 2 3 1 2 3", "1 2 3 4 1 2 3 4"]:
    ds = differential(parse_braid_word(text))
    print(text.ljust(18), [len(d) for d in ds], "terms")
