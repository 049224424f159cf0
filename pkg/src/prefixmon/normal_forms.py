"""Word-problem oracles and exact normal forms for free products and HNN
extensions.

Oracles give three-valued answers; the decisive ones (free, cyclic, free
products of decisive factors, HNN over a decisive base with decisive
associated-subgroup membership) compose into towers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .words import Alphabet, Word, empty_word, free_reduce, invert, translate


class Answer(Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not-equal"
    UNKNOWN = "unknown"


class OracleUndecided(RuntimeError):
    """An operation that requires a decisive oracle received Unknown."""


class GroupOracle:
    """Equality decision capability over a fixed alphabet."""

    alphabet: Alphabet

    def decide(self, u: Word, v: Word) -> Answer:
        raise NotImplementedError

    def is_trivial(self, w: Word) -> Answer:
        return self.decide(w, empty_word(self.alphabet))

    def canonical_key(self, w: Word):
        """Hashable key equal across oracle-equal words, or None if unavailable."""
        return None

    def normalize(self, w: Word) -> Word:
        """A canonical oracle-equal word, where one is computable."""
        return w


class FreeGroupOracle(GroupOracle):
    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def decide(self, u, v):
        if free_reduce(u).letters == free_reduce(v).letters:
            return Answer.EQUAL
        return Answer.NOT_EQUAL

    def canonical_key(self, w):
        return free_reduce(w).letters

    def normalize(self, w):
        return free_reduce(w)


class CyclicGroupOracle(GroupOracle):
    def __init__(self, alphabet: Alphabet, order: int):
        if len(alphabet) != 1:
            raise ValueError("cyclic oracle needs a single-generator alphabet")
        if order < 1:
            raise ValueError("order must be >= 1")
        self.alphabet = alphabet
        self.order = order

    def _exponent(self, w):
        return sum(lt.sign for lt in w.letters) % self.order

    def decide(self, u, v):
        if self._exponent(u) == self._exponent(v):
            return Answer.EQUAL
        return Answer.NOT_EQUAL

    def canonical_key(self, w):
        return self._exponent(w)

    def normalize(self, w):
        from .words import Letter

        k = self._exponent(w)
        return Word(self.alphabet, tuple(Letter(0, 1) for _ in range(k)))


def free_group_oracle(alphabet: Alphabet) -> FreeGroupOracle:
    return FreeGroupOracle(alphabet)


def cyclic_group_oracle(alphabet: Alphabet, order: int) -> CyclicGroupOracle:
    return CyclicGroupOracle(alphabet, order)


@dataclass(frozen=True)
class FreeProductNF:
    """Alternating syllable list; adjacent syllables lie in distinct factors."""

    syllables: tuple  # of (factor index, Word over the combined alphabet)

    def __len__(self):
        return len(self.syllables)

    def flatten(self, alphabet: Alphabet) -> Word:
        w = empty_word(alphabet)
        for _, s in self.syllables:
            w = w * s
        return w


class FreeProductOracle(GroupOracle):
    """Free product of factor oracles; letters are assigned by factor alphabets."""

    def __init__(self, factors: list[GroupOracle], alphabet: Optional[Alphabet] = None):
        self.factors = list(factors)
        if alphabet is None:
            names = []
            for f in self.factors:
                names.extend(f.alphabet.names)
            alphabet = Alphabet(tuple(names))
        self.alphabet = alphabet
        self.assignment = {}
        for i, name in enumerate(alphabet.names):
            owners = [k for k, f in enumerate(self.factors) if name in f.alphabet]
            if len(owners) != 1:
                raise ValueError(f"letter {name!r} must belong to exactly one factor")
            self.assignment[i] = owners[0]

    def _syllable_trivial(self, fid, syll):
        factor = self.factors[fid]
        return factor.is_trivial(translate(syll, factor.alphabet))

    def normal_form(self, w: Word) -> FreeProductNF:
        sylls = [
            (self.assignment[lt.index], Word(self.alphabet, (lt,)))
            for lt in w.letters
        ]
        changed = True
        while changed:
            changed = False
            merged = []
            for fid, s in sylls:
                if merged and merged[-1][0] == fid:
                    merged[-1] = (fid, merged[-1][1] * s)
                    changed = True
                else:
                    merged.append((fid, s))
            kept = []
            for fid, s in merged:
                verdict = self._syllable_trivial(fid, s)
                if verdict is Answer.UNKNOWN:
                    raise OracleUndecided("factor oracle undecided on a syllable")
                if verdict is Answer.EQUAL:
                    changed = True
                else:
                    kept.append((fid, s))
            sylls = kept
        return FreeProductNF(tuple(sylls))

    def decide(self, u, v):
        try:
            nu, nv = self.normal_form(u), self.normal_form(v)
        except OracleUndecided:
            return Answer.UNKNOWN
        if len(nu) != len(nv):
            return Answer.NOT_EQUAL
        saw_unknown = False
        for (fi, si), (fj, sj) in zip(nu.syllables, nv.syllables):
            if fi != fj:
                return Answer.NOT_EQUAL
            factor = self.factors[fi]
            verdict = factor.decide(
                translate(si, factor.alphabet), translate(sj, factor.alphabet)
            )
            if verdict is Answer.NOT_EQUAL:
                return Answer.NOT_EQUAL
            if verdict is Answer.UNKNOWN:
                saw_unknown = True
        return Answer.UNKNOWN if saw_unknown else Answer.EQUAL

    def canonical_key(self, w):
        nf = self.normal_form(w)
        key = []
        for fid, s in nf.syllables:
            factor = self.factors[fid]
            sub = factor.canonical_key(translate(s, factor.alphabet))
            if sub is None:
                return None
            key.append((fid, sub))
        return tuple(key)

    def normalize(self, w):
        try:
            nf = self.normal_form(w)
        except OracleUndecided:
            return w
        out = empty_word(self.alphabet)
        for fid, s in nf.syllables:
            factor = self.factors[fid]
            out = out * translate(factor.normalize(translate(s, factor.alphabet)), self.alphabet)
        return out


def free_product(factors, alphabet=None) -> FreeProductOracle:
    return FreeProductOracle(factors, alphabet)


def fp_normal_form(w: Word, fp: FreeProductOracle) -> FreeProductNF:
    return fp.normal_form(w)


def fp_equal(u: Word, v: Word, fp: FreeProductOracle) -> Answer:
    return fp.decide(u, v)


@dataclass(frozen=True)
class HnnWord:
    """g_0 t^{e_1} g_1 ... t^{e_n} g_n with base words over the base alphabet."""

    base_words: tuple  # n+1 Words
    signs: tuple  # n entries, each +1 or -1
    reduced: bool = False

    def t_length(self):
        return len(self.signs)


class HnnOracle(GroupOracle):
    """HNN extension of a base group with one stable letter.

    ``membership`` decides whether a base word lies in the associated subgroup;
    ``iso`` maps it across the stable letter (identity by default, matching a
    stable letter that conjugates the subgroup elementwise to itself).
    """

    def __init__(
        self,
        base: GroupOracle,
        stable_name: str,
        membership: Callable[[Word], Answer],
        iso: Callable[[Word], Word] = None,
        iso_inv: Callable[[Word], Word] = None,
        membership_image: Callable[[Word], Answer] = None,
    ):
        self.base = base
        self.stable_name = stable_name
        self.alphabet = Alphabet(base.alphabet.names + (stable_name,))
        self.stable_index = len(base.alphabet.names)
        self.membership = membership
        self.membership_image = membership_image or membership
        self.iso = iso or (lambda w: w)
        self.iso_inv = iso_inv or (lambda w: w)

    def split(self, w: Word) -> HnnWord:
        """Partition a word over the extended alphabet at stable-letter occurrences."""
        base_words = []
        signs = []
        current = []
        for lt in w.letters:
            if lt.index == self.stable_index:
                base_words.append(Word(self.base.alphabet, tuple(current)))
                signs.append(lt.sign)
                current = []
            else:
                current.append(lt)
        base_words.append(Word(self.base.alphabet, tuple(current)))
        return HnnWord(tuple(base_words), tuple(signs))

    def join(self, hw: HnnWord) -> Word:
        from .words import Letter

        letters = list(translate(hw.base_words[0], self.alphabet).letters)
        for sign, g in zip(hw.signs, hw.base_words[1:]):
            letters.append(Letter(self.stable_index, sign))
            letters.extend(translate(g, self.alphabet).letters)
        return Word(self.alphabet, tuple(letters))

    def reduce(self, hw: HnnWord) -> HnnWord:
        """Britton reduction: remove pinches t^-1 g t (g in the associated
        subgroup) and t g t^-1 (g in its image) until none remain."""
        base_words = list(hw.base_words)
        signs = list(hw.signs)
        while True:
            pinch = None
            for i in range(len(signs) - 1):
                g = base_words[i + 1]
                if signs[i] == -1 and signs[i + 1] == 1:
                    verdict = self.membership(g)
                    if verdict is Answer.UNKNOWN:
                        return HnnWord(tuple(base_words), tuple(signs), reduced=False)
                    if verdict is Answer.EQUAL:
                        pinch = (i, self.iso(g))
                        break
                elif signs[i] == 1 and signs[i + 1] == -1:
                    verdict = self.membership_image(g)
                    if verdict is Answer.UNKNOWN:
                        return HnnWord(tuple(base_words), tuple(signs), reduced=False)
                    if verdict is Answer.EQUAL:
                        pinch = (i, self.iso_inv(g))
                        break
            if pinch is None:
                return HnnWord(tuple(base_words), tuple(signs), reduced=True)
            i, image = pinch
            merged = free_reduce(base_words[i] * image * base_words[i + 2])
            base_words[i : i + 3] = [merged]
            del signs[i : i + 2]

    def is_trivial(self, w: Word) -> Answer:
        hw = self.reduce(self.split(w))
        if not hw.reduced:
            return Answer.UNKNOWN
        if hw.signs:
            return Answer.NOT_EQUAL
        return self.base.is_trivial(hw.base_words[0])

    def decide(self, u, v):
        return self.is_trivial(u * invert(v))


def hnn_reduce(w: Word, h: HnnOracle) -> HnnWord:
    return h.reduce(h.split(w))


def hnn_is_trivial(w: Word, h: HnnOracle) -> Answer:
    return h.is_trivial(w)
