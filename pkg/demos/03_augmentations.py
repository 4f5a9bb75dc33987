# Counting augmentations by elimination over GF(2)
#
# A crossing set Y is an augmentation when the 0/1 matrix B(Y) can be
# eliminated without row swaps. All 2^w subsets are scanned with numpy.

# %%
import time

from posbraid import enumerate_augmentations, lu_test, parse_braid_word
from posbraid.augment import evaluate_matrix_gf2
from posbraid.crossings import CrossingSet

trefoil = parse_braid_word("1^3")
for aug in enumerate_augmentations(trefoil, "list").augmentations:
    print(aug, "\n" + str(evaluate_matrix_gf2(trefoil, aug)))

# %% multipliers of the elimination for one augmentation
ok, mult = lu_test(trefoil, CrossingSet.from_members(3, [1]))
print("\n{b1}:", ok, mult)

# %% the larger examples
for text in ["1 2 1 2 1 2 1 2 1 2 1 2", "1 2^2 3 4 3 1^2 2^2 3^2 2 4 3^2",
             "1 2^2 3 1 3 4 1 2 4 2 3^3 4 2"]:
    word = parse_braid_word(text)
    t = time.perf_counter()
    res = enumerate_augmentations(word, jobs=2)
    print(f"{text:34} w={word.w:2} q={word.q} count={res.count:5} "
          f"odd={res.odd} {time.perf_counter() - t:.3f}s")
