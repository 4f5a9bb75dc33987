# Leading principal minors of a generic matrix and the polynomials 1 + C_nn

# %%
import random

from posbraid.grobner import (TermOrder, buchberger, diagonal_generators, format_basis,
                              minor_generators, verify_grobner_theorem)

q = 3
order = TermOrder.default(q)
print("variables, largest first:", [f"B{i}{j}" for _, i, j in order.variables])

for g in minor_generators(q):
    print("minor:", g)

# %% Buchberger over Q
for line in format_basis(buchberger(minor_generators(q), order), order):
    print(line)

# %% the same basis for other admissible orders and over Z2
rng = random.Random(0)
for _ in range(3):
    o = TermOrder.random_diagonal_dominant(q, rng)
    print([f"B{i}{j}" for _, i, j in o.variables[:q]], verify_grobner_theorem(q, "Z2", o))

# %% the diagonal generators themselves
for g in diagonal_generators(q):
    print("1 + C:", g)
