import random

import pytest

from prefixmon.presentations import (
    ParseError,
    Presentation,
    PresentationKind,
    parse_presentation,
    serialize_presentation,
    tietze_substitute,
    validate,
)
from prefixmon.words import Alphabet, Letter, Word, word_from_text, word_to_text


def test_parse_basic():
    p = parse_presentation("gp< a, b | a b a = 1 >")
    assert p.kind is PresentationKind.GROUP
    assert p.alphabet.names == ("a", "b")
    assert len(p.relations) == 1
    assert word_to_text(p.relations[0][0]) == "a b a"
    assert p.relations[0][1].is_empty()
    assert p.is_special


def test_parse_kinds_and_comments():
    text = """
    # a commutative monoid
    mon< a, b |
        a b = b a   # the only relation
    >
    """
    p = parse_presentation(text)
    assert p.kind is PresentationKind.MONOID
    assert not p.is_special


def test_parse_exponents_not_reduced():
    # relators are kept literally, not freely reduced
    p = parse_presentation("gp< a | a a^-1 = 1 >")
    assert word_to_text(p.relators[0]) == "a a^-1"


def test_parse_empty_sections():
    p = parse_presentation("inv< a | >")
    assert p.relations == ()
    q = parse_presentation("gp< | >")
    assert len(q.alphabet) == 0


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_presentation("gp< a | a c = 1 >")
    assert exc.value.line == 1
    with pytest.raises(ParseError):
        parse_presentation("ring< a | >")
    with pytest.raises(ParseError):
        parse_presentation("gp< a | a = 1")
    with pytest.raises(ParseError):
        parse_presentation("gp< a | a^0 = 1 >")


def test_monoid_rejects_negative_letters():
    with pytest.raises(ParseError):
        parse_presentation("mon< a | a^-1 = 1 >")
    # fine in inverse and group kinds
    parse_presentation("inv< a | a^-1 = 1 >")
    parse_presentation("gp< a | a^-1 = 1 >")


def rand_presentation(rng):
    kind = rng.choice(list(PresentationKind))
    n = rng.randrange(1, 4)
    alphabet = Alphabet(tuple(f"g{i}" for i in range(n)))
    signs = (1,) if kind is PresentationKind.MONOID else (1, -1)

    def rand_word():
        k = rng.randrange(5)
        return Word(
            alphabet,
            tuple(
                Letter(rng.randrange(n), rng.choice(signs)) for _ in range(k)
            ),
        )

    relations = tuple((rand_word(), rand_word()) for _ in range(rng.randrange(4)))
    return Presentation(kind, alphabet, relations)


def test_round_trip_1000_random():
    rng = random.Random(20)
    for _ in range(1000):
        p = rand_presentation(rng)
        text = serialize_presentation(p)
        q = parse_presentation(text)
        assert q == p
        assert serialize_presentation(q) == text


def test_validate_clean_and_dirty():
    p = parse_presentation("mon< a, b | a b = b a >")
    assert validate(p) == []
    # a monoid presentation smuggling in a negative letter via the model
    ab = Alphabet(("a",))
    bad = Presentation(
        PresentationKind.MONOID, ab, ((Word(ab, (Letter(0, -1),)), Word(ab, ())),)
    )
    assert any("negative letter" in d for d in validate(bad))


def test_tietze_substitute():
    p = parse_presentation("gp< a, b | a b a = 1 >")
    q = tietze_substitute(p, Letter(1, 1), word_from_text(p.alphabet, "a^-2"))
    assert q.alphabet.names == ("a",)
    # a (a^-2) a reduces to the empty word
    assert q.relations[0][0].is_empty()
    with pytest.raises(ValueError):
        tietze_substitute(p, Letter(1, 1), word_from_text(p.alphabet, "b"))
