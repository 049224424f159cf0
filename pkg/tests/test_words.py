import random

import pytest

from prefixmon.words import (
    Alphabet,
    Letter,
    Word,
    WordError,
    empty_word,
    free_reduce,
    invert,
    is_reduced,
    prefixes,
    translate,
    word_from_text,
    word_to_text,
)

AB = Alphabet(("a", "b"))


def rand_word(rng, alphabet, max_len):
    n = rng.randrange(max_len + 1)
    letters = tuple(
        Letter(rng.randrange(len(alphabet)), rng.choice((1, -1))) for _ in range(n)
    )
    return Word(alphabet, letters)


def test_alphabet_validation():
    with pytest.raises(WordError):
        Alphabet(("a", "a"))
    with pytest.raises(WordError):
        Alphabet(("1bad",))
    assert "a" in AB and "c" not in AB
    assert AB.index("b") == 1
    with pytest.raises(WordError):
        AB.index("c")


def test_letter_validation():
    with pytest.raises(WordError):
        Letter(0, 0)
    with pytest.raises(WordError):
        Letter(-1, 1)
    assert Letter(0, 1).inverse() == Letter(0, -1)


def test_word_bounds_and_concat():
    with pytest.raises(WordError):
        Word(AB, (Letter(2, 1),))
    u = word_from_text(AB, "a b")
    v = word_from_text(AB, "b^-1")
    assert word_to_text(u * v) == "a b b^-1"
    with pytest.raises(WordError):
        u * word_from_text(Alphabet(("a",)), "a")


def test_free_reduce_examples():
    # [TRIVIAL] hand-checked reductions
    assert word_to_text(free_reduce(word_from_text(AB, "a a^-1"))) == "1"
    assert word_to_text(free_reduce(word_from_text(AB, "a b b^-1 a^-1 a"))) == "a"
    assert word_to_text(free_reduce(word_from_text(AB, "a b a^-1"))) == "a b a^-1"


def test_free_reduce_is_idempotent_and_reduced():
    rng = random.Random(11)
    for _ in range(300):
        w = rand_word(rng, AB, 12)
        r = free_reduce(w)
        assert is_reduced(r)
        assert free_reduce(r).letters == r.letters


def test_invert_is_involution_and_kills_products():
    rng = random.Random(12)
    for _ in range(300):
        w = rand_word(rng, AB, 10)
        assert invert(invert(w)).letters == w.letters
        assert free_reduce(w * invert(w)).is_empty()
        assert free_reduce(invert(w) * w).is_empty()


def test_prefixes():
    w = word_from_text(AB, "a b a")
    assert [word_to_text(p) for p in prefixes(w)] == ["1", "a", "a b", "a b a"]
    assert prefixes(empty_word(AB)) == [empty_word(AB)]


def test_word_text_round_trip():
    rng = random.Random(13)
    for _ in range(300):
        w = rand_word(rng, AB, 10)
        assert word_from_text(AB, word_to_text(w)).letters == w.letters


def test_word_text_exponents():
    assert word_to_text(word_from_text(AB, "a^3 b^-2")) == "a a a b^-1 b^-1"
    with pytest.raises(WordError):
        word_from_text(AB, "a^0")
    with pytest.raises(WordError):
        word_from_text(AB, "")
    with pytest.raises(WordError):
        word_from_text(AB, "c")


def test_translate():
    big = Alphabet(("x", "a", "b"))
    w = word_from_text(AB, "a b^-1")
    t = translate(w, big)
    assert word_to_text(t) == "a b^-1"
    assert t.alphabet == big
    with pytest.raises(WordError):
        translate(w, Alphabet(("a",)))
