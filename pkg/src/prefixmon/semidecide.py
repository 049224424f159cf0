"""Bounded semidecision procedures and a fair dovetailing scheduler.

Tasks expose a resumable ``step`` returning Running / Accepted / Rejected;
the scheduler interleaves them round-robin so every live task gets a fair
share of a step budget.  Acceptances carry replayable derivations.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .presentations import Presentation, PresentationKind
from .words import Letter, Word


class Outcome(Enum):
    RUNNING = "running"
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    UNKNOWN = "unknown"


class SemidecisionTask:
    """Deterministic resumable unit of work."""

    id: str

    def step(self) -> Outcome:
        raise NotImplementedError


@dataclass
class DovetailResult:
    outcomes: dict
    steps: dict = field(default_factory=dict)


def dovetail_run(tasks: list, budget: int) -> DovetailResult:
    """Round-robin staircase over the tasks; tasks still running at budget
    exhaustion are reported Unknown."""
    if budget < 0:
        raise ValueError("budget must be >= 0")
    outcomes = {t.id: Outcome.UNKNOWN for t in tasks}
    steps = {t.id: 0 for t in tasks}
    live = list(tasks)
    remaining = budget
    while remaining > 0 and live:
        for task in list(live):
            if remaining == 0:
                break
            out = task.step()
            steps[task.id] += 1
            remaining -= 1
            if out is not Outcome.RUNNING:
                outcomes[task.id] = out
                live.remove(task)
    return DovetailResult(outcomes, steps)


def _as_tuple(w: Word):
    return tuple((lt.index, lt.sign) for lt in w.letters)


def _inv(t):
    return tuple((i, -s) for i, s in reversed(t))


def _to_word(alphabet, t):
    return Word(alphabet, tuple(Letter(i, s) for i, s in t))


def _replacements(word, lhs, rhs, maxlen):
    """All single-occurrence replacements of lhs by rhs inside word."""
    n, k = len(word), len(lhs)
    if n - k + len(rhs) > maxlen:
        return
    for i in range(n - k + 1):
        if word[i : i + k] == lhs:
            yield word[:i] + rhs + word[i + k :]


class RewriteTask(SemidecisionTask):
    """Breadth-first rewriting from u towards v under the congruence of a
    presentation.  Group kind adds free insertion/cancellation moves; inverse
    kind adds Wagner moves; never rejects.

    Each step consumes at most CHUNK neighbour words, so a step is a bounded
    unit of work regardless of how large the current frontier word is."""

    GROW = 2
    CHUNK = 32

    def __init__(self, p: Presentation, u: Word, v: Word, id: str = None):
        self.presentation = p
        self.alphabet = p.alphabet
        self.kind = p.kind
        self.start = _as_tuple(u)
        self.target = _as_tuple(v)
        self.id = id or f"eq({u},{v})"
        self.rules = []
        for lhs, rhs in p.relations:
            lt, rt = _as_tuple(lhs), _as_tuple(rhs)
            self.rules.append((lt, rt))
            if rt != lt:
                self.rules.append((rt, lt))
        self.maxlen = max(len(self.start), len(self.target)) + 2
        self.visited = {self.start: None}
        self.queue = deque([self.start])
        self.accepted = self.start == self.target
        self.steps_at_level = 0
        self.pending = None  # partially consumed neighbour iterator

    def _record(self, word, parent):
        if word not in self.visited:
            self.visited[word] = parent
            self.queue.append(word)
            if word == self.target:
                self.accepted = True

    def _neighbors(self, word):
        for lhs, rhs in self.rules:
            yield from _replacements(word, lhs, rhs, self.maxlen)
        if self.kind is PresentationKind.GROUP:
            yield from self._free_moves(word)
        elif self.kind is PresentationKind.INVERSE:
            yield from self._wagner_moves(word)

    def _free_moves(self, word):
        n = len(word)
        for i in range(n - 1):
            a, b = word[i], word[i + 1]
            if a[0] == b[0] and a[1] == -b[1]:
                yield word[:i] + word[i + 2 :]
        if n + 2 <= self.maxlen:
            for i in range(n + 1):
                for idx in range(len(self.alphabet)):
                    for sign in (1, -1):
                        pair = ((idx, sign), (idx, -sign))
                        yield word[:i] + pair + word[i:]

    def _idempotent_blocks(self, word):
        """Positions (i, L) where word[i : i+2L] reads u u^-1."""
        n = len(word)
        blocks = []
        for i in range(n - 1):
            # grow the pinch outwards from its centre
            L = 0
            while i - L >= 0 and i + 1 + L < n:
                a, b = word[i - L], word[i + 1 + L]
                if a[0] != b[0] or a[1] != -b[1]:
                    break
                L += 1
                blocks.append((i - L + 1, L))
        return blocks

    def _wagner_moves(self, word):
        n = len(word)
        blocks = self._idempotent_blocks(word)
        # contraction u u^-1 u -> u
        for i, L in blocks:
            if word[i + 2 * L : i + 3 * L] == word[i : i + L]:
                yield word[:i] + word[i : i + L] + word[i + 3 * L :]
        # expansion u -> u u^-1 u, bounded by the current length cap
        for L in range(1, (self.maxlen - n) // 2 + 1):
            for i in range(n - L + 1):
                u = word[i : i + L]
                yield word[:i] + u + _inv(u) + u + word[i + L :]
        # swap u u^-1 v v^-1 <-> v v^-1 u u^-1 on adjacent idempotent blocks
        for i, L1 in blocks:
            for j, L2 in blocks:
                if j == i + 2 * L1:
                    left, right = word[i : i + 2 * L1], word[j : j + 2 * L2]
                    yield word[:i] + right + left + word[j + 2 * L2 :]

    def step(self):
        if self.accepted:
            return Outcome.ACCEPTED
        self.steps_at_level += 1
        if self.pending is None:
            if not self.queue:
                # Frontier exhausted at this bound.  Widening is throttled so
                # the length cap cannot race ahead when a congruence class is
                # small; idle steps are spent until the level has earned its
                # keep.
                if self.steps_at_level < self.maxlen * self.maxlen:
                    return Outcome.RUNNING
                self.maxlen += self.GROW
                self.steps_at_level = 0
                for word in sorted(self.visited):
                    self.queue.append(word)
            word = self.queue.popleft()
            self.pending = (word, self._neighbors(word))
        word, it = self.pending
        for _ in range(self.CHUNK):
            nbr = next(it, None)
            if nbr is None:
                self.pending = None
                break
            self._record(nbr, word)
            if self.accepted:
                return Outcome.ACCEPTED
        return Outcome.RUNNING

    def derivation(self):
        """Chain of words from start to target (after acceptance)."""
        if not self.accepted:
            return None
        chain = [self.target]
        while self.visited.get(chain[-1]) is not None:
            chain.append(self.visited[chain[-1]])
        chain.reverse()
        return [_to_word(self.alphabet, t) for t in chain]

    def is_one_step(self, w1: Word, w2: Word) -> bool:
        """Replay check: w2 is reachable from w1 (or vice versa) in one move."""
        a, b = _as_tuple(w1), _as_tuple(w2)
        save = self.maxlen
        self.maxlen = max(save, len(a) + 2, len(b) + 2)
        try:
            return b in set(self._neighbors(a)) or a in set(self._neighbors(b))
        finally:
            self.maxlen = save


def brute_force_equal(p: Presentation, u: Word, v: Word) -> RewriteTask:
    return RewriteTask(p, u, v)


class RcCloseTask(SemidecisionTask):
    """Rewriting closure augmented with right cancellation: whenever two words
    proved equal share a suffix, their prefixes are identified too."""

    GROW = 2

    def __init__(self, p: Presentation, u: Word, v: Word, id: str = None):
        if p.kind is not PresentationKind.MONOID:
            raise ValueError("rc_close requires a monoid presentation")
        self.presentation = p
        self.alphabet = p.alphabet
        self.id = id or f"rc({u},{v})"
        self.rules = []
        for lhs, rhs in p.relations:
            lt = tuple(lt.index for lt in lhs.letters)
            rt = tuple(lt.index for lt in rhs.letters)
            self.rules.append((lt, rt))
            if rt != lt:
                self.rules.append((rt, lt))
        self.u = tuple(lt.index for lt in u.letters)
        self.v = tuple(lt.index for lt in v.letters)
        self.parent = {}
        self.members = {}
        self.queue = deque()
        self.seen = set()
        self.maxlen = max((len(w) for w in
                           [self.u, self.v] + [w for r in self.rules for w in r]),
                          default=0) + 2
        for w in [self.u, self.v]:
            self._add(w)
        for lt, rt in self.rules:
            self._add(lt)
            self._add(rt)
            self._union(lt, rt)

    def _find(self, w):
        root = w
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[w] != root:
            self.parent[w], w = root, self.parent[w]
        return root

    def _add(self, w):
        if w not in self.parent:
            self.parent[w] = w
            self.members[w] = [w]
        if w not in self.seen:
            self.seen.add(w)
            self.queue.append(w)

    def _union(self, a, b):
        ra, rb = self._find(a), self._find(b)
        if ra == rb:
            return
        if len(self.members[rb]) > len(self.members[ra]):
            ra, rb = rb, ra
        group_b = self.members.pop(rb)
        self.parent[rb] = ra
        # right cancellation across the newly joined classes
        pairs = [(x, y) for x in self.members[ra] for y in group_b]
        self.members[ra].extend(group_b)
        for x, y in pairs:
            self._cancel(x, y)

    def _cancel(self, x, y):
        k = 0
        while k < len(x) and k < len(y) and x[len(x) - 1 - k] == y[len(y) - 1 - k]:
            k += 1
        if k == 0:
            return
        x2, y2 = x[: len(x) - k], y[: len(y) - k]
        if x2 == y2:
            return
        self._add(x2)
        self._add(y2)
        self._union(x2, y2)

    def _neighbors(self, word):
        for lhs, rhs in self.rules:
            yield from _replacements(word, lhs, rhs, self.maxlen)

    def step(self):
        if self._find(self.u) == self._find(self.v):
            return Outcome.ACCEPTED
        if not self.queue:
            self.maxlen += self.GROW
            for w in sorted(self.seen):
                self.queue.append(w)
        word = self.queue.popleft()
        for nbr in self._neighbors(word):
            self._add(nbr)
            self._union(word, nbr)
        if self._find(self.u) == self._find(self.v):
            return Outcome.ACCEPTED
        return Outcome.RUNNING


def rc_close(p: Presentation, u: Word, v: Word) -> RcCloseTask:
    return RcCloseTask(p, u, v)


def _enumerate_triples(alphabet):
    """All triples of positive words ordered by total length, then lex."""
    n = len(alphabet)

    def words_of_length(k):
        for combo in itertools.product(range(n), repeat=k):
            yield combo

    total = 0
    while True:
        for l1 in range(total + 1):
            for l2 in range(total - l1 + 1):
                l3 = total - l1 - l2
                for v in words_of_length(l1):
                    for p in words_of_length(l2):
                        for q in words_of_length(l3):
                            yield v, p, q
        total += 1


class SchutzMembershipTask(SemidecisionTask):
    """Semidecides membership of [u] in the Schutzenberger group of the
    H-class of [w]: dovetails, over enumerated triples (v, p, q), proofs of
    u v = 1, v u = 1, u w = w p and w p q = w."""

    SPAWN_EVERY = 8

    def __init__(self, p: Presentation, u: Word, w: Word, id: str = None):
        self.presentation = p
        self.alphabet = p.alphabet
        self.u = u
        self.w = w
        self.id = id or f"schutz({u},{w})"
        self.triples = _enumerate_triples(p.alphabet)
        self.groups = []  # (triple, [4 tasks], [4 outcomes])
        self.slots = deque()  # fair round-robin of (group index, subtask index)
        self.counter = 0
        self.witness = None

    def _spawn(self):
        vt, pt, qt = next(self.triples)
        mk = lambda t: Word(self.alphabet, tuple(Letter(i, 1) for i in t))
        v, pw, qw = mk(vt), mk(pt), mk(qt)
        one = Word(self.alphabet, ())
        tasks = [
            brute_force_equal(self.presentation, self.u * v, one),
            brute_force_equal(self.presentation, v * self.u, one),
            brute_force_equal(self.presentation, self.u * self.w, self.w * pw),
            brute_force_equal(self.presentation, self.w * pw * qw, self.w),
        ]
        gi = len(self.groups)
        self.groups.append(((v, pw, qw), tasks, [Outcome.RUNNING] * 4))
        self.slots.extend((gi, ti) for ti in range(4))

    def step(self):
        if self.witness is not None:
            return Outcome.ACCEPTED
        if not self.groups or self.counter % self.SPAWN_EVERY == 0:
            self._spawn()
        self.counter += 1
        # one sub-step for the next unfinished subtask, round-robin
        while self.slots:
            gi, ti = self.slots.popleft()
            triple, tasks, outs = self.groups[gi]
            if outs[ti] is not Outcome.RUNNING:
                continue
            outs[ti] = tasks[ti].step()
            if outs[ti] is Outcome.RUNNING:
                self.slots.append((gi, ti))
            elif outs[ti] is Outcome.ACCEPTED and all(
                o is Outcome.ACCEPTED for o in outs
            ):
                self.witness = triple
                return Outcome.ACCEPTED
            break
        return Outcome.RUNNING


def schutz_membership_semidecide(p: Presentation, u: Word, w: Word) -> SchutzMembershipTask:
    return SchutzMembershipTask(p, u, w)
