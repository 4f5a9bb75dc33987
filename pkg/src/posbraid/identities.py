"""Checks of the symbolic matrix identities on given braid words.

Each check returns a bool; ``identity_suite`` runs all of them on a list of
words and the generic ones up to a strand count, returning named results.
"""

from __future__ import annotations

from typing import Iterable

from .braid import BraidWord, underlying_permutation
from .dga import verify_mmb, verify_triangular_inverse
from .freealg import CommPoly, comm_det
from .pathmatrix import (inverse_path_matrix, path_matrix, path_matrix_by_paths,
                         product, row_reduction_factors)


def check_inverse(word: BraidWord, ring: str = "Z") -> bool:
    """``B . B^-1 = B^-1 . B = I``."""
    b_ = path_matrix(word, ring)
    inv = inverse_path_matrix(word, ring)
    return (b_ @ inv).is_identity() and (inv @ b_).is_identity()


def check_zero_evaluation(word: BraidWord) -> bool:
    """Setting every crossing label to 0 leaves the permutation matrix."""
    zero = path_matrix(word, "Z").evaluate(lambda v: 0)
    return zero == underlying_permutation(word).matrix()


def check_row_reduction(word: BraidWord, ring: str = "Z2") -> bool:
    """Undoing the factors from the last one back gives ``A_w ... A_1 B = P_pi``."""
    factors, perm = row_reduction_factors(word, ring)
    undo = [f.map(lambda e: e if e.constant() else -e) for f in factors]
    return product(list(reversed(undo)), word.q, ring) @ path_matrix(word, ring) == perm


def check_factorization(word: BraidWord, ring: str = "Z2") -> bool:
    """``B = A_1 ... A_w P_pi``."""
    factors, perm = row_reduction_factors(word, ring)
    return product(factors, word.q, ring) @ perm == path_matrix(word, ring)


def check_determinant(word: BraidWord, ring: str = "Z2") -> bool:
    """The abelianized determinant of ``B`` is 1."""
    return comm_det(path_matrix(word, "Z").abelianize(ring)) == CommPoly.one(ring)


def check_path_oracle(word: BraidWord, ring: str = "Z") -> bool:
    return path_matrix(word, ring) == path_matrix_by_paths(word, ring)


WORD_CHECKS = {
    "inverse": check_inverse,
    "zero_evaluation": check_zero_evaluation,
    "row_reduction": check_row_reduction,
    "factorization": check_factorization,
    "determinant": check_determinant,
    "path_oracle": check_path_oracle,
}


def identity_suite(q: int, words: Iterable[BraidWord]) -> dict[str, bool]:
    words = list(words)
    out = {name: all(fn(wd) for wd in words) for name, fn in WORD_CHECKS.items()}
    out["triangular_inverse"] = verify_triangular_inverse(q)
    out["mmb"] = verify_mmb(q)
    return out

