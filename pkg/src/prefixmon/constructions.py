"""Presentation transformers: prefix/right-unit generator extraction, the
monoid-to-group and star constructions, the special-inverse-monoid
presentations for right-cancellative monoids, and HNN extensions with an
identity-conjugating stable letter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .presentations import Presentation, PresentationKind
from .words import (
    Alphabet,
    Letter,
    Word,
    empty_word,
    free_reduce,
    invert,
    prefixes,
    translate,
)


@dataclass(frozen=True)
class GeneratorReport:
    """Literal prefix words of the relators, with the freely-trivial ones
    filtered out of ``nontrivial``.  ``notes`` maps each word to the index of
    the first relator it came from."""

    raw: tuple
    nontrivial: tuple
    notes: dict = field(compare=False, default_factory=dict)


def _prefix_report(p: Presentation) -> GeneratorReport:
    if not p.is_special:
        raise ValueError("prefix extraction requires a special presentation")
    raw = []
    notes = {}
    seen = set()
    for i, relator in enumerate(p.relators):
        for q in prefixes(relator):
            if q.letters not in seen:
                seen.add(q.letters)
                raw.append(q)
                notes[q] = i
    if not raw:
        raw = [empty_word(p.alphabet)]
        notes[raw[0]] = -1
    nontrivial = tuple(w for w in raw if not free_reduce(w).is_empty())
    return GeneratorReport(tuple(raw), nontrivial, notes)


def prefix_generators(p: Presentation) -> GeneratorReport:
    """Prefixes of the relators of a special group presentation."""
    if p.kind is not PresentationKind.GROUP:
        raise ValueError("prefix_generators requires a group presentation")
    return _prefix_report(p)


def ru_generators(p: Presentation) -> GeneratorReport:
    """Prefixes of the relators of a special inverse-monoid presentation."""
    if p.kind is not PresentationKind.INVERSE:
        raise ValueError("ru_generators requires an inverse monoid presentation")
    return _prefix_report(p)


def fresh_name(base: str, taken) -> str:
    if base not in taken:
        return base
    k = 1
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def monoid_to_group(p: Presentation) -> Presentation:
    """Group presentation with relators u_i v_i^-1 and a a^-1 for each letter."""
    if p.kind is not PresentationKind.MONOID:
        raise ValueError("monoid_to_group requires a monoid presentation")
    alphabet = p.alphabet
    one = empty_word(alphabet)
    relations = [(u * invert(v), one) for u, v in p.relations]
    for i in range(len(alphabet)):
        a = Word(alphabet, (Letter(i, 1),))
        relations.append((a * invert(a), one))
    return Presentation(PresentationKind.GROUP, alphabet, tuple(relations))


def star_construction(p: Presentation, subset) -> Presentation:
    """Presentation of the free product with a rank-2 free group whose prefix
    monoid splits off the submonoid generated by the ``subset`` letters.

    Relators: s w_i s^-1 for every old relator, and t b t^-1 t b^-1 t^-1 for
    every letter b in the subset.
    """
    if p.kind is not PresentationKind.GROUP or not p.is_special:
        raise ValueError("star_construction requires a special group presentation")
    subset = list(subset)
    for b in subset:
        if b not in p.alphabet:
            raise ValueError(f"subset letter {b!r} not in alphabet")
    taken = set(p.alphabet.names)
    s_name = fresh_name("s", taken)
    taken.add(s_name)
    t_name = fresh_name("t", taken)
    alphabet = Alphabet(p.alphabet.names + (s_name, t_name))
    s = Word(alphabet, (Letter(alphabet.index(s_name), 1),))
    t = Word(alphabet, (Letter(alphabet.index(t_name), 1),))
    one = empty_word(alphabet)
    relations = []
    for w in p.relators:
        wt = translate(w, alphabet)
        relations.append((s * wt * invert(s), one))
    for b_name in subset:
        b = Word(alphabet, (Letter(alphabet.index(b_name), 1),))
        relations.append((t * b * invert(t) * t * invert(b) * invert(t), one))
    return Presentation(PresentationKind.GROUP, alphabet, tuple(relations))


def star_prefix_generators(p: Presentation, subset) -> list[Word]:
    """The literal generator list of the star construction's prefix monoid:
    s q for every relator prefix q, plus t, t b and t b t^-1 per subset letter."""
    star = star_construction(p, subset)
    alphabet = star.alphabet
    s = Word(alphabet, (Letter(len(p.alphabet), 1),))
    t = Word(alphabet, (Letter(len(p.alphabet) + 1, 1),))
    out = []
    seen = set()
    for w in p.relators:
        for q in prefixes(w):
            word = s * translate(q, alphabet)
            if word.letters not in seen:
                seen.add(word.letters)
                out.append(word)
    for b_name in subset:
        b = Word(alphabet, (Letter(alphabet.index(b_name), 1),))
        for word in (t, t * b, t * b * invert(t)):
            if word.letters not in seen:
                seen.add(word.letters)
                out.append(word)
    return out


def add_free_generator(p: Presentation) -> Presentation:
    """Append a fresh letter y with the relator y y^-1."""
    if p.kind is not PresentationKind.GROUP or not p.is_special:
        raise ValueError("add_free_generator requires a special group presentation")
    y_name = fresh_name("y", set(p.alphabet.names))
    alphabet = Alphabet(p.alphabet.names + (y_name,))
    y = Word(alphabet, (Letter(alphabet.index(y_name), 1),))
    one = empty_word(alphabet)
    relations = tuple(
        (translate(lhs, alphabet), translate(rhs, alphabet)) for lhs, rhs in p.relations
    ) + ((y * invert(y), one),)
    return Presentation(PresentationKind.GROUP, alphabet, relations)


def group_case_restriction(p: Presentation) -> Presentation:
    """Restrict to the letters occurring in relators (drops free-factor letters)."""
    if p.kind is not PresentationKind.GROUP or not p.is_special:
        raise ValueError("group_case_restriction requires a special group presentation")
    used = sorted(
        {lt.index for w in p.relators for lt in w.letters}
    )
    alphabet = Alphabet(tuple(p.alphabet.name(i) for i in used))
    relations = tuple(
        (translate(lhs, alphabet), translate(rhs, alphabet)) for lhs, rhs in p.relations
    )
    return Presentation(PresentationKind.GROUP, alphabet, relations)


def special_inverse_of_rc(p: Presentation) -> Presentation:
    """Special inverse-monoid presentation whose right units realise the
    greatest right cancellative image of the input monoid presentation:
    relators a a^-1 per letter, then u_i v_i^-1 per relation."""
    if p.kind is not PresentationKind.MONOID:
        raise ValueError("special_inverse_of_rc requires a monoid presentation")
    alphabet = p.alphabet
    one = empty_word(alphabet)
    relations = []
    for i in range(len(alphabet)):
        a = Word(alphabet, (Letter(i, 1),))
        relations.append((a * invert(a), one))
    for u, v in p.relations:
        relations.append((u * invert(v), one))
    return Presentation(PresentationKind.INVERSE, alphabet, tuple(relations))


def special_inverse_of_rc_relations(p: Presentation) -> Presentation:
    """Equivalent form of special_inverse_of_rc using relations u_i = v_i."""
    if p.kind is not PresentationKind.MONOID:
        raise ValueError("special_inverse_of_rc requires a monoid presentation")
    alphabet = p.alphabet
    one = empty_word(alphabet)
    relations = []
    for i in range(len(alphabet)):
        a = Word(alphabet, (Letter(i, 1),))
        relations.append((a * invert(a), one))
    for u, v in p.relations:
        relations.append((u, v))
    return Presentation(PresentationKind.INVERSE, alphabet, tuple(relations))


def build_e_word(us: list[Word]) -> Word:
    """Concatenation of u u^-1 over the given words; always an idempotent in
    the free inverse monoid."""
    if not us:
        raise ValueError("build_e_word requires a nonempty word list")
    w = empty_word(us[0].alphabet)
    for u in us:
        w = w * u * invert(u)
    return w


def build_mqw(alphabet: Alphabet, relators: list[Word], conjugated_words: list[Word],
              stable: str = "t") -> tuple[Presentation, Presentation]:
    """The two equivalent special inverse-monoid presentations attaching a
    stable letter that conjugates each listed word to a right unit.

    Returns (folded form, expanded form).  The folded form has one relator
    f r_1 built from an idempotent word f and the distinguished first relator;
    the expanded form lists all relators plus the invertibility and
    conjugation relators separately.
    """
    if not relators:
        raise ValueError("build_mqw requires a nonempty relator list")
    taken = set(alphabet.names)
    t_name = fresh_name(stable, taken)
    ext = Alphabet(alphabet.names + (t_name,))
    t = Word(ext, (Letter(ext.index(t_name), 1),))
    one = empty_word(ext)
    pos_letters = [Word(ext, (Letter(i, 1),)) for i in range(len(alphabet))]
    conj = [t * translate(w, ext) * invert(t) for w in conjugated_words]
    f = build_e_word(pos_letters + conj + [invert(a) for a in pos_letters])
    rs = [translate(r, ext) for r in relators]
    form_one = Presentation(
        PresentationKind.INVERSE,
        ext,
        tuple([(f * rs[0], one)] + [(r, one) for r in rs[1:]]),
    )
    relations = [(r, one) for r in rs]
    for a in pos_letters:
        relations.append((a * invert(a), one))
        relations.append((invert(a) * a, one))
    for w in conjugated_words:
        wt = translate(w, ext)
        relations.append((t * wt * invert(t) * t * invert(wt) * invert(t), one))
    form_two = Presentation(PresentationKind.INVERSE, ext, tuple(relations))
    return form_one, form_two


def hnn_identity_extension(base: Presentation, subgroup_words: list[Word],
                           stable: str = "z") -> Presentation:
    """Append a stable letter commuting with each listed word: relators
    z^-1 w z w^-1."""
    if base.kind is not PresentationKind.GROUP:
        raise ValueError("hnn_identity_extension requires a group presentation")
    z_name = fresh_name(stable, set(base.alphabet.names))
    alphabet = Alphabet(base.alphabet.names + (z_name,))
    z = Word(alphabet, (Letter(alphabet.index(z_name), 1),))
    one = empty_word(alphabet)
    relations = [
        (translate(lhs, alphabet), translate(rhs, alphabet))
        for lhs, rhs in base.relations
    ]
    for w in subgroup_words:
        wt = translate(w, alphabet)
        relations.append((invert(z) * wt * z * invert(wt), one))
    return Presentation(PresentationKind.GROUP, alphabet, tuple(relations))
