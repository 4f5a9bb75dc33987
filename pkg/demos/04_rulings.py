# Normal rulings and the ruling polynomial

# %%
from posbraid import count_augmentations, count_via_rulings, parse_braid_word
from posbraid.braid import diagram_stats
from posbraid.ruling import enumerate_rulings, ruling_polynomial, torus2_closed_form

trefoil = parse_braid_word("1^3")
for switches, theta in enumerate_rulings(trefoil):
    print(switches, "theta =", theta)
print("R =", ruling_polynomial(trefoil))

# %% the (p,2) torus links follow binomial coefficients
for p in range(1, 9):
    poly = ruling_polynomial(parse_braid_word(f"1^{p}"))
    print(f"p={p:2}  {str(poly):32} closed form ok: {poly == torus2_closed_form(p)}")

# %% two different knots, same ruling polynomial
for text in ["1 2^3 3 1 3 2^3 3^3", "1 2^2 3 1 3 1^2 2^3 3 1"]:
    word = parse_braid_word(text)
    print(text, "->", ruling_polynomial(word))

# %% augmentations counted from rulings
for text in ["1^5", "1 2 1 2 1 2", "1^3 2^2 1^2 2^5"]:
    word = parse_braid_word(text)
    stats = diagram_stats(word)
    print(text, stats.tb, count_via_rulings(word), count_augmentations(word))
