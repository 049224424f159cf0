"""Presentations of groups, monoids and inverse monoids: model, parser, printer.

Text grammar (whitespace-tolerant, ``#`` comments to end of line)::

    presentation := kind '<' genlist '|' rellist '>'
    kind         := 'gp' | 'mon' | 'inv'
    genlist      := e | ident (',' ident)*
    rellist      := e | relation (',' relation)*
    relation     := word '=' word
    word         := '1' | term+
    term         := ident ('^' nonzero-integer)?
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .words import Alphabet, Letter, Word, empty_word, free_reduce, invert


class PresentationKind(Enum):
    GROUP = "gp"
    MONOID = "mon"
    INVERSE = "inv"


@dataclass(frozen=True)
class Presentation:
    kind: PresentationKind
    alphabet: Alphabet
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        if not isinstance(self.relations, tuple):
            object.__setattr__(self, "relations", tuple(self.relations))

    @property
    def is_special(self) -> bool:
        """True iff every relation has the form w = 1."""
        return all(rhs.is_empty() for _, rhs in self.relations)

    @property
    def relators(self) -> list[Word]:
        return [lhs for lhs, _ in self.relations]


class ParseError(ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<ident>[a-zA-Z_][a-zA-Z0-9_]*)
  | (?P<int>-?\d+)
  | (?P<punct><|>|\||,|=|\^)
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text):
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, value, line, pos - line_start + 1))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rfind("\n") + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def error(self, message):
        tok = self.current
        raise ParseError(message, tok.line, tok.column)

    def accept(self, kind, text=None):
        tok = self.current
        if tok.kind == kind and (text is None or tok.text == text):
            self.pos += 1
            return tok
        return None

    def expect(self, kind, text=None):
        tok = self.accept(kind, text)
        if tok is None:
            want = text if text is not None else kind
            self.error(f"expected {want!r}, found {self.current.text!r}")
        return tok

    def parse(self) -> Presentation:
        kind_tok = self.expect("ident")
        try:
            kind = PresentationKind(kind_tok.text)
        except ValueError:
            raise ParseError(
                f"unknown presentation kind {kind_tok.text!r} (use gp, mon or inv)",
                kind_tok.line,
                kind_tok.column,
            ) from None
        self.expect("punct", "<")
        names = []
        if self.current.kind == "ident":
            names.append(self.expect("ident").text)
            while self.accept("punct", ","):
                names.append(self.expect("ident").text)
        alphabet = Alphabet(tuple(names))
        self.expect("punct", "|")
        relations = []
        if not (self.current.kind == "punct" and self.current.text == ">"):
            relations.append(self.parse_relation(alphabet, kind))
            while self.accept("punct", ","):
                relations.append(self.parse_relation(alphabet, kind))
        self.expect("punct", ">")
        self.expect("eof")
        return Presentation(kind, alphabet, tuple(relations))

    def parse_relation(self, alphabet, kind):
        lhs = self.parse_word(alphabet, kind)
        self.expect("punct", "=")
        rhs = self.parse_word(alphabet, kind)
        return (lhs, rhs)

    def parse_word(self, alphabet, kind):
        if self.current.kind == "int" and self.current.text == "1":
            self.pos += 1
            return empty_word(alphabet)
        letters = []
        if self.current.kind != "ident":
            self.error(f"expected a word, found {self.current.text!r}")
        while self.current.kind == "ident":
            tok = self.expect("ident")
            if tok.text not in alphabet:
                raise ParseError(
                    f"unknown generator {tok.text!r}", tok.line, tok.column
                )
            idx = alphabet.index(tok.text)
            exp = 1
            if self.accept("punct", "^"):
                exp_tok = self.expect("int")
                exp = int(exp_tok.text)
                if exp == 0:
                    raise ParseError("zero exponent", exp_tok.line, exp_tok.column)
            sign = 1 if exp > 0 else -1
            if sign < 0 and kind is PresentationKind.MONOID:
                raise ParseError(
                    f"negative letter {tok.text}^-1 in a monoid presentation",
                    tok.line,
                    tok.column,
                )
            letters.extend(Letter(idx, sign) for _ in range(abs(exp)))
        return Word(alphabet, tuple(letters))


def parse_presentation(text: str) -> Presentation:
    """Parse the DSL; raises ParseError with line/column on bad input."""
    return _Parser(text).parse()


def serialize_presentation(p: Presentation) -> str:
    """Canonical single-line form; parse(serialize(p)) == p."""
    gens = ", ".join(p.alphabet.names)
    rels = ", ".join(f"{lhs} = {rhs}" for lhs, rhs in p.relations)
    if rels:
        return f"{p.kind.value}< {gens} | {rels} >"
    return f"{p.kind.value}< {gens} | >"


def validate(p: Presentation) -> list[str]:
    """Human-readable invariant violations; empty list means valid."""
    diagnostics = []
    n = len(p.alphabet)
    for i, (lhs, rhs) in enumerate(p.relations):
        for side, w in (("lhs", lhs), ("rhs", rhs)):
            if w.alphabet != p.alphabet:
                diagnostics.append(f"relation {i} {side}: wrong alphabet")
                continue
            for lt in w.letters:
                if lt.index >= n:
                    diagnostics.append(
                        f"relation {i} {side}: letter index {lt.index} out of range"
                    )
                if p.kind is PresentationKind.MONOID and lt.sign < 0:
                    diagnostics.append(
                        f"relation {i} {side}: negative letter "
                        f"{p.alphabet.name(lt.index)}^-1 in monoid presentation"
                    )
    return diagnostics


def tietze_substitute(p: Presentation, gen: Letter, replacement: Word) -> Presentation:
    """Eliminate a generator, replacing gen^+-1 by replacement^+-1 everywhere.

    Group-kind only; the replacement word must not mention the eliminated
    generator.  Substituted relators are freely reduced.
    """
    if p.kind is not PresentationKind.GROUP:
        raise ValueError("tietze_substitute requires a group presentation")
    if gen.sign != 1:
        raise ValueError("gen must be a positive letter")
    if gen.index >= len(p.alphabet):
        raise ValueError("gen not in alphabet")
    if any(lt.index == gen.index for lt in replacement.letters):
        raise ValueError("replacement word mentions the eliminated generator")
    old = p.alphabet
    new_names = tuple(n for i, n in enumerate(old.names) if i != gen.index)
    new_alphabet = Alphabet(new_names)

    def remap(index):
        return index if index < gen.index else index - 1

    def substitute(w: Word) -> Word:
        out: list[Letter] = []
        for lt in w.letters:
            if lt.index == gen.index:
                rep = replacement if lt.sign == 1 else invert(replacement)
                out.extend(Letter(remap(r.index), r.sign) for r in rep.letters)
            else:
                out.append(Letter(remap(lt.index), lt.sign))
        return free_reduce(Word(new_alphabet, tuple(out)))

    relations = tuple(
        (substitute(lhs), substitute(rhs)) for lhs, rhs in p.relations
    )
    return Presentation(p.kind, new_alphabet, relations)
