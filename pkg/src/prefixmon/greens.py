"""Green's relations and Schutzenberger groups for finitely generated
submonoids of groups with decisive oracles.

Right-invertibility is only semidecided (ball search, no negative
certificates).  When the ambient group is free the Schutzenberger group of an
H-class is computed exactly as a Stallings intersection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import stallings
from .normal_forms import Answer, GroupOracle
from .stallings import SubgroupAutomaton
from .words import Word, empty_word

DEFAULT_RADIUS = 6


@dataclass
class AmbientSubmonoid:
    oracle: GroupOracle
    generators: list
    unit_subgroup: Optional[SubgroupAutomaton] = None

    def __post_init__(self):
        for g in self.generators:
            if g.alphabet != self.oracle.alphabet:
                raise ValueError("generator word not over the ambient alphabet")


@dataclass
class Ball:
    """Oracle-deduplicated representatives of short generator products."""

    elements: list
    expressions: dict = field(default_factory=dict)  # rep letters -> gen indices
    complete: bool = True


class _Deduper:
    """Canonical-representative bookkeeping, keyed by oracle canonical keys
    when available, falling back to pairwise oracle comparison."""

    def __init__(self, oracle):
        self.oracle = oracle
        self.by_key = {}
        self.reps = []

    def _word_sort_key(self, w):
        return (len(w.letters), tuple((lt.index, -lt.sign) for lt in w.letters))

    def lookup(self, w):
        key = self.oracle.canonical_key(w)
        if key is not None:
            return self.by_key.get(key)
        for rep in self.reps:
            if self.oracle.decide(rep, w) is Answer.EQUAL:
                return rep
        return None

    def insert(self, w):
        key = self.oracle.canonical_key(w)
        if key is not None:
            self.by_key[key] = w
        self.reps.append(w)


def compute_ball(m: AmbientSubmonoid, radius: int, max_len: Optional[int] = None) -> Ball:
    """All products of at most ``radius`` generators, deduplicated by the
    ambient oracle; representatives are oracle-normalized, discovered shortest
    first.  ``max_len`` prunes representatives longer than the bound (the
    result is then a truncation, flagged incomplete)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    dedupe = _Deduper(m.oracle)
    one = m.oracle.normalize(empty_word(m.oracle.alphabet))
    dedupe.insert(one)
    elements = [one]
    expressions = {one.letters: ()}
    frontier = [(one, ())]
    complete = True
    for _ in range(radius):
        new_frontier = []
        for w, expr in frontier:
            for gi, g in enumerate(m.generators):
                rep = m.oracle.normalize(w * g)
                if dedupe.lookup(rep) is not None:
                    continue
                if max_len is not None and len(rep.letters) > max_len:
                    complete = False
                    continue
                dedupe.insert(rep)
                elements.append(rep)
                expressions[rep.letters] = expr + (gi,)
                new_frontier.append((rep, expr + (gi,)))
        frontier = new_frontier
    return Ball(elements, expressions, complete)


def ball(m: AmbientSubmonoid, radius: int, max_len: Optional[int] = None) -> list:
    return compute_ball(m, radius, max_len).elements


def is_right_unit_in_ball(m: AmbientSubmonoid, w: Word, radius: int = DEFAULT_RADIUS):
    """Equal with a witness if some ball element is a right inverse of w;
    Unknown otherwise (never NotEqual)."""
    for x in ball(m, radius):
        if m.oracle.is_trivial(w * x) is Answer.EQUAL:
            return Answer.EQUAL, x
    return Answer.UNKNOWN, None


def unit_generators_in_ball(m: AmbientSubmonoid, radius: int = DEFAULT_RADIUS) -> list:
    """Generators certified invertible within the ball.  For submonoids of
    groups a right inverse inside the monoid is automatically two-sided."""
    elements = ball(m, radius)
    out = []
    for g in m.generators:
        if any(m.oracle.is_trivial(g * x) is Answer.EQUAL for x in elements):
            out.append(g)
    return out


def schutz_free_ambient(m: AmbientSubmonoid, x: Word) -> SubgroupAutomaton:
    """Schutzenberger group of H_x in a free ambient: U meet x^-1 U x."""
    if m.unit_subgroup is None:
        raise ValueError("schutz_free_ambient requires the unit subgroup automaton")
    conj = stallings.conjugate(m.unit_subgroup, x)
    return stallings.intersect(m.unit_subgroup, conj)


def _certified_units(m, elements):
    units = []
    for w in elements:
        if any(m.oracle.is_trivial(w * x) is Answer.EQUAL for x in elements):
            units.append(w)
    return units


def _equal_to_some(m, w, pool):
    return any(m.oracle.decide(w, h) is Answer.EQUAL for h in pool)


@dataclass
class GreensReport:
    x: Word
    l_class: list
    r_class: list
    h_class: list
    units: list
    violations: list
    ok: bool


def greens_class_check(m: AmbientSubmonoid, x: Word, radius: int = DEFAULT_RADIUS) -> GreensReport:
    """Verify L_x = Ux and R_x = xU over the ball; report counterexamples."""
    elements = ball(m, radius)
    units = _certified_units(m, elements)
    l_class, r_class, violations = [], [], []
    for y in elements:
        left_div = any(m.oracle.decide(y, u * x) is Answer.EQUAL for u in elements)
        back = any(m.oracle.decide(x, v * y) is Answer.EQUAL for v in elements)
        if left_div and back:
            l_class.append(y)
            if not any(m.oracle.decide(y, u * x) is Answer.EQUAL for u in units):
                violations.append(f"L-class element {y} not in Ux")
        right_div = any(m.oracle.decide(y, x * u) is Answer.EQUAL for u in elements)
        back_r = any(m.oracle.decide(x, y * v) is Answer.EQUAL for v in elements)
        if right_div and back_r:
            r_class.append(y)
            if not any(m.oracle.decide(y, x * u) is Answer.EQUAL for u in units):
                violations.append(f"R-class element {y} not in xU")
    r_letters = {w.letters for w in r_class}
    h_class = [w for w in l_class if w.letters in r_letters]
    return GreensReport(x, l_class, r_class, h_class, units, violations, not violations)


def h_class_in_ball(m: AmbientSubmonoid, x: Word, radius: int = DEFAULT_RADIUS) -> list:
    """Ball elements certified to lie in Ux meet xU."""
    elements = ball(m, radius)
    units = _certified_units(m, elements)
    out = []
    for h in elements:
        in_ux = any(m.oracle.decide(h, u * x) is Answer.EQUAL for u in units)
        in_xu = any(m.oracle.decide(h, x * u) is Answer.EQUAL for u in units)
        if in_ux and in_xu:
            out.append(h)
    return out


def right_stabilizer_in_ball(m: AmbientSubmonoid, x: Word, radius: int = DEFAULT_RADIUS) -> list:
    """Ball elements s with H_x s inside H_x (computed over the ball)."""
    h_class = h_class_in_ball(m, x, radius)
    if not h_class:
        return []
    elements = ball(m, radius)
    out = []
    for s in elements:
        if all(_equal_to_some(m, h * s, h_class) for h in h_class):
            out.append(s)
    return out
