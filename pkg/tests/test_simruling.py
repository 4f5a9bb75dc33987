from hypothesis import given

from posbraid.braid import diagram_stats, parse_braid_word
from posbraid.catalog import default_catalog
from posbraid.simruling import (MARKER, PASS, TURN, construct_simultaneous, forest_components,
                                forest_ok, verify_simultaneous)
from conftest import braid_words


def test_trefoil_trace():
    res = construct_simultaneous(parse_braid_word("1^3"))
    assert res.X.members == (1,)
    assert res.paths[1] == ((1, TURN), (2, PASS), (3, PASS))
    assert res.paths[2][0] == (1, MARKER)
    assert res.forest == ((1, 2),)
    assert res.to_json() == {"X": [1], "forest": [[1, 2]], "theta": 1}


def test_identity_word():
    word = parse_braid_word("", 4)
    res = construct_simultaneous(word)
    assert len(res.X) == 0 and res.forest == () and res.mu == 4
    assert verify_simultaneous(word, res)


def test_pure_braid_needs_no_splice():
    res = construct_simultaneous(parse_braid_word("1 2 1 2 1 2 1 2 1 2 1 2"))
    assert len(res.X) == 0 and res.mu == 3


def _check(word):
    res = construct_simultaneous(word)
    mu = diagram_stats(word).mu
    assert len(res.X) == word.q - mu
    assert verify_simultaneous(word, res)
    assert forest_ok(word.q, mu, res.forest)
    # the removed paths partition the crossings
    assert sorted(res.owner) == list(range(1, word.w + 1))
    assert set(res.owner.values()) <= set(range(1, word.q + 1))


def test_catalog_words():
    for rec in default_catalog():
        _check(rec.word)


@given(braid_words(min_q=1, max_q=5, max_w=16))
def test_random_words(word):
    _check(word)


def test_forest_checks():
    assert forest_ok(3, 1, [(1, 3), (2, 3)])
    assert not forest_ok(3, 1, [(1, 2), (1, 3)])    # out-degree two
    assert not forest_ok(2, 1, [(2, 1)])            # decreasing edge
    assert not forest_ok(3, 2, [(1, 2), (2, 3)])    # wrong component count
    assert forest_components(4, [(1, 3)]) == [{1, 3}, {2}, {4}]
