import pytest
from hypothesis import given

from posbraid.braid import (BraidWord, BraidWordError, Permutation, apply_r3, cyclic_rotate,
                            diagram_stats, parse_braid_word, reduced_permutation_word,
                            underlying_permutation, words)
from conftest import braid_words


@pytest.mark.parametrize("text,q,letters", [
    ("s1^3", 2, (1, 1, 1)),
    ("1 2 1", 3, (1, 2, 1)),
    ("1,2^2 ,3", 4, (1, 2, 2, 3)),
    ("", 1, ()),
    ("s2 s1", 3, (2, 1)),
])
def test_parse(text, q, letters):
    word = parse_braid_word(text)
    assert word.q == q and word.letters == letters


def test_parse_strand_override():
    assert parse_braid_word("1", 4).q == 4
    with pytest.raises(BraidWordError):
        parse_braid_word("3", 3)


@pytest.mark.parametrize("bad", ["x", "1^0", "0", "1^-1", "s", "1^"])
def test_parse_rejects(bad):
    with pytest.raises(BraidWordError):
        parse_braid_word(bad)


def test_word_validation():
    with pytest.raises(BraidWordError):
        BraidWord(2, (2,))


def test_trefoil_stats():
    s = diagram_stats(parse_braid_word("1^3"))
    assert (s.w, s.q, s.mu, s.tb, s.connected) == (3, 2, 1, 1, True)


def test_torus_3_6_is_three_components():
    s = diagram_stats(parse_braid_word("1 2 1 2 1 2 1 2 1 2 1 2"))
    assert s.mu == 3 and s.tb == 9


def test_permutation_of_prefix():
    word = parse_braid_word("1 2")
    # strand starting at 1 moves down twice
    assert underlying_permutation(word)(1) == 3
    assert underlying_permutation(word, upto=1).images == (2, 1, 3)
    with pytest.raises(ValueError):
        underlying_permutation(word, upto=3)


def test_permutation_algebra():
    p = Permutation((2, 3, 1))
    assert p.compose(p.inverse()) == Permutation.identity(3)
    assert p.cycles() == [(1, 2, 3)]
    assert p.matrix() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]


@given(braid_words(max_q=5, max_w=10))
def test_concat_composes_permutations(word):
    half = word.w // 2
    a, c = BraidWord(word.q, word.letters[:half]), BraidWord(word.q, word.letters[half:])
    assert a.concat(c).permutation() == c.permutation().compose(a.permutation())


@given(braid_words(max_q=5, max_w=10))
def test_rotation_keeps_cycle_type(word):
    rot = cyclic_rotate(word, 1)
    assert diagram_stats(rot).mu == diagram_stats(word).mu


def test_r3_round_trip():
    word = parse_braid_word("2 1 2 1", 3)
    moved = apply_r3(word, 1)
    assert moved.letters == (1, 2, 1, 1)
    assert apply_r3(moved, 1) == word
    assert moved.permutation() == word.permutation()
    with pytest.raises(BraidWordError):
        apply_r3(word, 3)
    with pytest.raises(BraidWordError):
        apply_r3(parse_braid_word("1 1 1"), 1)


def test_reduced_permutation_words():
    from itertools import permutations

    for images in permutations(range(1, 5)):
        p = Permutation(images)
        word = reduced_permutation_word(p)
        assert word.permutation() == p
        assert word.w == len(p.inversions())


def test_words_count():
    assert sum(1 for _ in words(3, 4)) == 16
