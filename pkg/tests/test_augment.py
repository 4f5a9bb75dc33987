import numpy as np
import pytest
from hypothesis import given

from posbraid.augment import (BitMatrix, EnumerationGuardError, augmentation_oracle_direct,
                              augmentation_table, count_augmentations, direct_oracle_table,
                              enumerate_augmentations, evaluate_matrix_gf2, gf2_lu,
                              is_augmentation, leading_minors, lu_test, sequence_oracle)
from posbraid.braid import Permutation, parse_braid_word, random_word
from posbraid.crossings import CrossingSet, all_subsets
from posbraid.pathmatrix import path_matrix
from conftest import braid_words

TREFOIL = parse_braid_word("1^3")


def cs(w, *members):
    return CrossingSet.from_members(w, members)


def test_trefoil_augmentations():
    res = enumerate_augmentations(TREFOIL, "list")
    assert res.count == 5 and res.odd
    got = {a.members for a in res.augmentations}
    assert got == {(1,), (3,), (1, 2), (2, 3), (1, 2, 3)}


def test_trefoil_lu():
    assert evaluate_matrix_gf2(TREFOIL, cs(3, 1, 2)).to_lists() == [[1, 0], [1, 1]]
    ok, mult = lu_test(TREFOIL, cs(3, 1))
    assert ok and mult == {(2, 1): 1}
    assert lu_test(TREFOIL, cs(3)) == (False, None)


def test_empty_word():
    word = parse_braid_word("", 3)
    res = enumerate_augmentations(word, "list")
    assert res.count == 1 and res.augmentations == [CrossingSet(0, 0)]


def test_single_strand():
    assert count_augmentations(parse_braid_word("", 1)) == 1


def test_lu_factor_is_valid():
    m = BitMatrix.from_lists([[1, 1, 0], [1, 0, 1], [0, 1, 0]])
    ok, low = gf2_lu(m)
    assert ok
    # L . m must be upper triangular with unit diagonal
    prod = []
    for r in low:
        acc = 0
        for j in range(3):
            if r >> j & 1:
                acc ^= m.rows[j]
        prod.append(acc)
    assert [[x >> j & 1 for j in range(3)] for x in prod] == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]


def test_leading_minors():
    assert leading_minors(BitMatrix.from_lists([[0, 1], [1, 0]])) == [0, 1]
    assert leading_minors(BitMatrix.from_lists([[1, 0], [1, 1]])) == [1, 1]


def test_permutation_matrix_minors():
    # zero evaluation gives P_pi, an augmentation only for suitable pi
    word = parse_braid_word("1 2 1")
    e = evaluate_matrix_gf2(word, CrossingSet(3, 0))
    assert e.to_lists() == Permutation((3, 2, 1)).matrix()


@given(braid_words(max_q=4, max_w=8))
def test_criteria_agree_per_subset(word):
    table = augmentation_table(word)
    for ys in all_subsets(word.w):
        assert table[ys.mask] == is_augmentation(word, ys)
    for mask in range(0, 1 << word.w, max(1, (1 << word.w) // 8)):
        ys = CrossingSet(word.w, mask)
        assert is_augmentation(word, ys) == augmentation_oracle_direct(word, ys)
        assert is_augmentation(word, ys) == sequence_oracle(word, ys)


@given(braid_words(max_q=4, max_w=10))
def test_direct_table_matches(word):
    assert np.array_equal(direct_oracle_table(word), augmentation_table(word))


@given(braid_words(max_q=5, max_w=11))
def test_last_minor_never_fails(word):
    res = enumerate_augmentations(word)
    assert res.last_minor_failures == 0
    mat = path_matrix(word)
    # consistency with full minors over GF(2)
    for mask in range(0, 1 << word.w, max(1, (1 << word.w) // 4)):
        ys = CrossingSet(word.w, mask)
        m = evaluate_matrix_gf2(word, ys)
        assert m.to_lists() == mat.evaluate(ys.assignment())
        assert (all(leading_minors(m))) == is_augmentation(word, ys)


def test_jobs_do_not_change_results():
    rng = np.random.default_rng(5)
    word = random_word(rng, 4, 14)
    one = enumerate_augmentations(word, "list", jobs=1)
    four = enumerate_augmentations(word, "list", jobs=4)
    assert one == four


def test_guard():
    with pytest.raises(EnumerationGuardError):
        enumerate_augmentations(parse_braid_word("1^12"), max_subsets=1 << 10)
    with pytest.raises(ValueError):
        enumerate_augmentations(TREFOIL, mode="bogus")
    with pytest.raises(ValueError):
        lu_test(TREFOIL, CrossingSet(2, 0))
