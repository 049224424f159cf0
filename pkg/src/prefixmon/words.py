"""Alphabets, signed letters, words and free reduction.

Words are immutable value types; every operation returns a fresh word.
The empty word represents the identity and prints as ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_NAME_RE = re.compile(r"[a-zA-Z_][a-zA-Z0-9_]*\Z")


class WordError(ValueError):
    """Invalid alphabet, letter or word construction."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered list of distinct generator names."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.names, tuple):
            object.__setattr__(self, "names", tuple(self.names))
        seen = set()
        for name in self.names:
            if not _NAME_RE.match(name):
                raise WordError(f"invalid generator name: {name!r}")
            if name in seen:
                raise WordError(f"duplicate generator name: {name!r}")
            seen.add(name)

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise WordError(f"unknown generator: {name!r}") from None

    def name(self, index: int) -> str:
        return self.names[index]


@dataclass(frozen=True, order=True)
class Letter:
    """A signed alphabet position: (index, +1) or (index, -1)."""

    index: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise WordError(f"letter sign must be +1 or -1, got {self.sign}")
        if self.index < 0:
            raise WordError(f"letter index must be >= 0, got {self.index}")

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


@dataclass(frozen=True)
class Word:
    """Finite sequence of letters over a fixed alphabet."""

    alphabet: Alphabet
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        n = len(self.alphabet)
        for lt in self.letters:
            if lt.index >= n:
                raise WordError(
                    f"letter index {lt.index} out of range for alphabet of size {n}"
                )

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise WordError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __str__(self):
        return word_to_text(self)

    def is_empty(self) -> bool:
        return not self.letters


def empty_word(alphabet: Alphabet) -> Word:
    return Word(alphabet, ())


def free_reduce(w: Word) -> Word:
    """Remove all adjacent x x^-1 pairs; the result is the unique reduced form."""
    stack: list[Letter] = []
    for lt in w.letters:
        if stack and stack[-1].index == lt.index and stack[-1].sign == -lt.sign:
            stack.pop()
        else:
            stack.append(lt)
    return Word(w.alphabet, tuple(stack))


def invert(w: Word) -> Word:
    """Formal inverse: reverse the letters and flip every sign."""
    return Word(w.alphabet, tuple(lt.inverse() for lt in reversed(w.letters)))


def prefixes(w: Word) -> list[Word]:
    """All |w|+1 prefixes of w, shortest first (empty word included)."""
    return [Word(w.alphabet, w.letters[:k]) for k in range(len(w.letters) + 1)]


def is_reduced(w: Word) -> bool:
    return free_reduce(w).letters == w.letters


def word_from_text(alphabet: Alphabet, text: str) -> Word:
    """Parse the shared word syntax: space-separated ``name`` or ``name^k`` terms.

    The literal ``1`` denotes the empty word.  A term ``name^k`` with k < 0
    expands to |k| inverse letters.
    """
    text = text.strip()
    if text == "1":
        return empty_word(alphabet)
    if not text:
        raise WordError("empty word text; use '1' for the identity")
    letters: list[Letter] = []
    for term in text.split():
        name, caret, exp = term.partition("^")
        if caret:
            try:
                k = int(exp)
            except ValueError:
                raise WordError(f"bad exponent in term {term!r}") from None
            if k == 0:
                raise WordError(f"zero exponent in term {term!r}")
        else:
            k = 1
        idx = alphabet.index(name)
        sign = 1 if k > 0 else -1
        letters.extend(Letter(idx, sign) for _ in range(abs(k)))
    return Word(alphabet, tuple(letters))


def word_to_text(w: Word) -> str:
    """Canonical word text: one term per letter, ``^-1`` on inverse letters."""
    if not w.letters:
        return "1"
    parts = []
    for lt in w.letters:
        name = w.alphabet.name(lt.index)
        parts.append(name if lt.sign == 1 else name + "^-1")
    return " ".join(parts)


def translate(w: Word, target: Alphabet) -> Word:
    """Re-index a word onto another alphabet containing the same names."""
    letters = tuple(
        Letter(target.index(w.alphabet.name(lt.index)), lt.sign) for lt in w.letters
    )
    return Word(target, letters)
