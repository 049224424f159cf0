import random

import pytest

from prefixmon.munn import MunnTree, fim_equal, fim_is_idempotent, munn_tree
from prefixmon.words import Alphabet, Letter, Word, free_reduce, invert, word_from_text

ABC = Alphabet(("a", "b", "c"))


def rand_word(rng, alphabet, max_len):
    n = rng.randrange(max_len + 1)
    return Word(
        alphabet,
        tuple(Letter(rng.randrange(len(alphabet)), rng.choice((1, -1))) for _ in range(n)),
    )


def test_tree_of_simple_words():
    t = munn_tree(word_from_text(ABC, "a a^-1 b"))
    assert t.vertices == frozenset({(), (Letter(0, 1),), (Letter(1, 1),)})
    assert t.terminal == (Letter(1, 1),)


def test_terminal_must_be_vertex():
    with pytest.raises(ValueError):
        MunnTree(frozenset({()}), (Letter(0, 1),))


def test_wagner_axioms_1000_pairs():
    rng = random.Random(51)
    for _ in range(1000):
        u = rand_word(rng, ABC, 8)
        v = rand_word(rng, ABC, 8)
        uu = u * invert(u)
        vv = v * invert(v)
        assert fim_equal(uu * u, u)
        assert fim_equal(uu * vv, vv * uu)


def test_idempotents():
    rng = random.Random(52)
    for _ in range(200):
        u = rand_word(rng, ABC, 6)
        assert fim_is_idempotent(u * invert(u))
        w = u * invert(u)
        assert fim_equal(w * w, w)
    assert fim_is_idempotent(word_from_text(ABC, "1"))
    assert not fim_is_idempotent(word_from_text(ABC, "a"))


def test_fim_equality_is_a_congruence():
    # u ~ u', v ~ v'  =>  u v ~ u' v'
    rng = random.Random(53)
    for _ in range(200):
        u = rand_word(rng, ABC, 5)
        v = rand_word(rng, ABC, 5)
        u2 = u * invert(u) * u  # Wagner-equal variant of u
        v2 = v * invert(v) * v
        assert fim_equal(u * v, u2 * v2)


def test_fim_refines_free_group_equality():
    rng = random.Random(54)
    for _ in range(300):
        u = rand_word(rng, ABC, 7)
        v = rand_word(rng, ABC, 7)
        if fim_equal(u, v):
            assert free_reduce(u).letters == free_reduce(v).letters


def test_fim_distinguishes_order_of_traversal_only_by_tree():
    # same free-group image, different trees
    u = word_from_text(ABC, "a a^-1")
    v = word_from_text(ABC, "b b^-1")
    assert not fim_equal(u, v)
    # commuting idempotents give equal trees
    assert fim_equal(u * v, v * u)
