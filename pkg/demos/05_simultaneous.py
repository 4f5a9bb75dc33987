# One crossing set that is a ruling and an augmentation at once

# %%
from posbraid import construct_simultaneous, parse_braid_word, verify_simultaneous
from posbraid.simruling import forest_components

for text in ["1^3", "1 2 1 2 1 2 1 2 1 2 1 2", "1 2^3 3 1 3 2^3 3^3", "2 1 2 1 3 2"]:
    word = parse_braid_word(text)
    res = construct_simultaneous(word)
    print(f"\n{text}: X = {res.X}, theta = {res.mu}")
    for i, path in res.paths.items():
        print(f"  s{i}:", " ".join(f"{role[0]}{k}" for k, role in path))
    print("  forest", res.forest, "trees", forest_components(word.q, res.forest))
    print("  ruling and augmentation:", verify_simultaneous(word, res))
