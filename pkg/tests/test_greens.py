import pytest

from prefixmon import stallings
from prefixmon.greens import (
    AmbientSubmonoid,
    ball,
    compute_ball,
    greens_class_check,
    h_class_in_ball,
    is_right_unit_in_ball,
    right_stabilizer_in_ball,
    schutz_free_ambient,
    unit_generators_in_ball,
)
from prefixmon.normal_forms import Answer, cyclic_group_oracle, free_group_oracle
from prefixmon.words import Alphabet, free_reduce, word_from_text, word_to_text

AT = Alphabet(("a", "t"))


def submonoid(oracle, texts):
    return AmbientSubmonoid(oracle, [word_from_text(oracle.alphabet, t) for t in texts])


def test_ball_free_monogenic():
    al = Alphabet(("a",))
    m = submonoid(free_group_oracle(al), ["a", "a a"])
    elems = {word_to_text(w) for w in ball(m, 3)}
    # [DERIVED] products of <=3 factors from {a, a^2} give exponents 0..6
    assert elems == {"1"} | {" ".join(["a"] * k) for k in range(1, 7)}


def test_ball_dedupes_by_oracle():
    al = Alphabet(("a",))
    m = submonoid(cyclic_group_oracle(al, 3), ["a"])
    assert len(ball(m, 10)) == 3


def test_ball_max_len_truncates():
    al = Alphabet(("a",))
    m = submonoid(free_group_oracle(al), ["a"])
    b = compute_ball(m, 5, max_len=2)
    assert not b.complete
    assert len(b.elements) == 3


def test_ball_expressions_replay():
    m = submonoid(free_group_oracle(AT), ["a", "a^-1", "t"])
    b = compute_ball(m, 4)
    for rep in b.elements:
        expr = b.expressions[rep.letters]
        prod = word_from_text(AT, "1")
        for gi in expr:
            prod = prod * m.generators[gi]
        assert free_reduce(prod).letters == rep.letters


def test_right_unit_search():
    m = submonoid(free_group_oracle(AT), ["a", "a^-1", "t"])
    verdict, witness = is_right_unit_in_ball(m, word_from_text(AT, "a"))
    assert verdict is Answer.EQUAL
    assert free_reduce(word_from_text(AT, "a") * witness).is_empty()
    # t has no inverse inside the monoid: semidecision stays Unknown
    verdict, witness = is_right_unit_in_ball(m, word_from_text(AT, "t"), radius=4)
    assert verdict is Answer.UNKNOWN and witness is None


def test_unit_generators():
    m = submonoid(free_group_oracle(AT), ["a", "a^-1", "t"])
    units = unit_generators_in_ball(m, 4)
    assert {word_to_text(u) for u in units} == {"a", "a^-1"}


def test_schutz_trivial_for_t():
    m = submonoid(free_group_oracle(AT), ["a", "a^-1", "t"])
    m.unit_subgroup = stallings.build_subgroup(AT, [word_from_text(AT, "a")])
    aut = schutz_free_ambient(m, word_from_text(AT, "t"))
    assert aut.num_states == 1 and stallings.rank(aut) == 0


def test_schutz_requires_unit_subgroup():
    m = submonoid(free_group_oracle(AT), ["a"])
    with pytest.raises(ValueError):
        schutz_free_ambient(m, word_from_text(AT, "t"))


def test_greens_classes_in_group_ambient():
    # whole group: every element is a unit, one H-class
    al = Alphabet(("a",))
    m = submonoid(cyclic_group_oracle(al, 3), ["a"])
    report = greens_class_check(m, word_from_text(al, "a"), radius=4)
    assert report.ok
    assert len(report.l_class) == 3 and len(report.r_class) == 3
    assert len(report.h_class) == 3 and len(report.units) == 3


def test_greens_classes_free_monoid():
    m = submonoid(free_group_oracle(AT), ["a", "t"])
    report = greens_class_check(m, word_from_text(AT, "a t"), radius=4)
    assert report.ok
    # free monoid on two letters: trivial units, singleton classes
    assert {w.letters for w in report.h_class} == {word_from_text(AT, "a t").letters}
    assert len(report.units) == 1


def test_h_class_and_stabilizer():
    m = submonoid(free_group_oracle(AT), ["a", "a^-1", "t"])
    h = h_class_in_ball(m, word_from_text(AT, "t"), radius=4)
    # H_t = Ut meet tU truncates to {t} here: a^i t = t a^j forces i = j = 0
    assert {word_to_text(w) for w in h} == {"t"}
    stab = right_stabilizer_in_ball(m, word_from_text(AT, "t"), radius=4)
    assert {word_to_text(w) for w in stab} == {"1"}
