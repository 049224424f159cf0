import pytest

from prefixmon.constructions import (
    add_free_generator,
    build_e_word,
    build_mqw,
    fresh_name,
    group_case_restriction,
    hnn_identity_extension,
    monoid_to_group,
    prefix_generators,
    ru_generators,
    special_inverse_of_rc,
    special_inverse_of_rc_relations,
    star_construction,
    star_prefix_generators,
)
from prefixmon.munn import fim_is_idempotent
from prefixmon.presentations import (
    PresentationKind,
    parse_presentation,
    serialize_presentation,
)
from prefixmon.words import free_reduce, word_from_text, word_to_text


def texts(words):
    return [word_to_text(w) for w in words]


def test_prefix_generators_aba():
    p = parse_presentation("gp< a, b | a b a = 1 >")
    r = prefix_generators(p)
    assert texts(r.raw) == ["1", "a", "a b", "a b a"]
    assert texts(r.nontrivial) == ["a", "a b", "a b a"]
    assert all(r.notes[w] == 0 for w in r.raw)


def test_prefix_generators_dedupe_across_relators():
    p = parse_presentation("gp< a, b | a b = 1, a a = 1 >")
    r = prefix_generators(p)
    assert texts(r.raw) == ["1", "a", "a b", "a a"]
    assert r.notes[r.raw[1]] == 0  # "a" first seen in relator 0


def test_prefix_generators_kind_checks():
    with pytest.raises(ValueError):
        prefix_generators(parse_presentation("mon< a | a = 1 >"))
    with pytest.raises(ValueError):
        prefix_generators(parse_presentation("gp< a, b | a = b >"))
    r = ru_generators(parse_presentation("inv< a | a a^-1 = 1 >"))
    assert texts(r.nontrivial) == ["a"]
    with pytest.raises(ValueError):
        ru_generators(parse_presentation("gp< a | a = 1 >"))


def test_fresh_name():
    assert fresh_name("s", {"a"}) == "s"
    assert fresh_name("s", {"s"}) == "s1"
    assert fresh_name("s", {"s", "s1"}) == "s2"


def test_monoid_to_group():
    p = parse_presentation("mon< a, b | a b = b a >")
    g = monoid_to_group(p)
    assert serialize_presentation(g) == (
        "gp< a, b | a b a^-1 b^-1 = 1, a a^-1 = 1, b b^-1 = 1 >"
    )
    assert g.is_special


def test_star_construction():
    p = parse_presentation("gp< a | a a a = 1 >")
    k = star_construction(p, ["a"])
    assert serialize_presentation(k) == (
        "gp< a, s, t | s a a a s^-1 = 1, t a t^-1 t a^-1 t^-1 = 1 >"
    )
    # the t-relators are freely trivial: K is G free-product a rank-2 free group
    assert free_reduce(k.relators[1]).is_empty()
    with pytest.raises(ValueError):
        star_construction(p, ["b"])


def test_star_construction_avoids_name_clashes():
    p = parse_presentation("gp< s, t | s t s = 1 >")
    k = star_construction(p, ["t"])
    assert k.alphabet.names == ("s", "t", "s1", "t1")


def test_star_prefix_generators():
    p = parse_presentation("gp< a | a a a = 1 >")
    gens = star_prefix_generators(p, ["a"])
    assert texts(gens) == ["s", "s a", "s a a", "s a a a", "t", "t a", "t a t^-1"]


def test_add_free_generator_and_restriction():
    p = parse_presentation("gp< a | a a a = 1 >")
    q = add_free_generator(p)
    assert serialize_presentation(q) == "gp< a, y | a a a = 1, y y^-1 = 1 >"
    r = group_case_restriction(q)
    # y survives (it occurs in its own relator); an untouched letter would not
    assert r.alphabet.names == ("a", "y")
    p2 = parse_presentation("gp< a, b | a a = 1 >")
    assert group_case_restriction(p2).alphabet.names == ("a",)


def test_special_inverse_of_rc():
    p = parse_presentation("mon< a, b | a b = b >")
    m = special_inverse_of_rc(p)
    assert m.kind is PresentationKind.INVERSE
    assert serialize_presentation(m) == (
        "inv< a, b | a a^-1 = 1, b b^-1 = 1, a b b^-1 = 1 >"
    )
    m2 = special_inverse_of_rc_relations(p)
    assert serialize_presentation(m2) == (
        "inv< a, b | a a^-1 = 1, b b^-1 = 1, a b = b >"
    )


def test_e_word_is_idempotent():
    p = parse_presentation("inv< a, b | >")
    al = p.alphabet
    us = [word_from_text(al, t) for t in ("a", "b a^-1", "b b")]
    e = build_e_word(us)
    assert fim_is_idempotent(e)
    assert word_to_text(build_e_word(us[:1])) == "a a^-1"
    with pytest.raises(ValueError):
        build_e_word([])


def test_build_mqw_forms():
    p = parse_presentation("gp< a | a a = 1 >")
    w = [word_from_text(p.alphabet, "a")]
    one, two = build_mqw(p.alphabet, p.relators, w)
    assert one.kind is PresentationKind.INVERSE and two.kind is PresentationKind.INVERSE
    assert one.alphabet.names == ("a", "t")
    # folded form: a single relator f r1 with f an idempotent
    assert len(one.relations) == 1
    f_r1 = one.relators[0]
    assert word_to_text(f_r1).endswith("a a")  # r1 at the end
    assert fim_is_idempotent(one.relators[0]) is False  # f r1 ends away from 1
    # expanded form: r_i, invertibility of letters, conjugation relators
    assert serialize_presentation(two) == (
        "inv< a, t | a a = 1, a a^-1 = 1, a^-1 a = 1, "
        "t a t^-1 t a^-1 t^-1 = 1 >"
    )


def test_hnn_identity_extension():
    p = parse_presentation("gp< a | a a a = 1 >")
    q = hnn_identity_extension(p, [word_from_text(p.alphabet, "a")])
    assert serialize_presentation(q) == (
        "gp< a, z | a a a = 1, z^-1 a z a^-1 = 1 >"
    )
    with pytest.raises(ValueError):
        hnn_identity_extension(parse_presentation("mon< a | a = 1 >"), [])
