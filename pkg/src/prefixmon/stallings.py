"""Folded subgroup automata for finitely generated subgroups of free groups.

Edges are stored positively; traversing an edge backwards reads the inverse
letter.  After folding and pruning the automaton is the core graph of the
subgroup: reduced words in the subgroup are exactly the basepoint loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import Alphabet, Letter, Word, free_reduce, invert


@dataclass(frozen=True)
class SubgroupAutomaton:
    alphabet: Alphabet
    num_states: int
    basepoint: int
    # (state, letter index) -> state, positive direction only
    edges: dict = field(default_factory=dict)

    def out_map(self):
        return self.edges

    def in_map(self):
        rev = {}
        for (s, a), t in self.edges.items():
            rev[(t, a)] = s
        return rev


class _Folder:
    """Edge accumulator folded to a deterministic core graph at the end."""

    def __init__(self, alphabet):
        self.alphabet = alphabet
        self.n = 1
        self.edge_list = []

    def new_state(self):
        s = self.n
        self.n += 1
        return s

    def add_edge(self, s, a, t):
        self.edge_list.append((s, a, t))

    def finish(self, basepoint=0):
        parent = list(range(self.n))

        def find(s):
            while parent[s] != s:
                parent[s] = parent[parent[s]]
                s = parent[s]
            return s

        # fold: merge targets of equal-label edges out of (or into) a state
        changed = True
        while changed:
            changed = False
            out, inc = {}, {}
            for s, a, t in self.edge_list:
                s, t = find(s), find(t)
                for table, key, other in ((out, (s, a), t), (inc, (t, a), s)):
                    prior = table.get(key)
                    if prior is None:
                        table[key] = other
                    elif prior != other:
                        parent[find(prior)] = find(other)
                        changed = True
        edges = {}
        for s, a, t in self.edge_list:
            edges[(find(s), a)] = find(t)
        bp = find(basepoint)
        # reachable component of the basepoint
        adj = {}
        for (s, a), t in edges.items():
            adj.setdefault(s, []).append(t)
            adj.setdefault(t, []).append(s)
        seen = {bp}
        stack = [bp]
        while stack:
            s = stack.pop()
            for t in adj.get(s, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        edges = {(s, a): t for (s, a), t in edges.items() if s in seen and t in seen}
        seen, edges = _prune(bp, seen, edges)
        return _renumber(self.alphabet, bp, seen, edges)


def _prune(bp, states, edges):
    """Iteratively drop degree-1 non-basepoint states (core graph)."""
    states = set(states)
    changed = True
    while changed:
        changed = False
        degree = {}
        for (s, a), t in edges.items():
            degree[s] = degree.get(s, 0) + 1
            degree[t] = degree.get(t, 0) + 1
        for s in list(states):
            if s != bp and degree.get(s, 0) <= 1:
                states.discard(s)
                edges = {
                    (u, a): v for (u, a), v in edges.items() if u != s and v != s
                }
                changed = True
    return states, edges


def _renumber(alphabet, bp, states, edges):
    out = {}
    inc = {}
    for (s, a), t in edges.items():
        out.setdefault(s, {})[a] = t
        inc.setdefault(t, {})[a] = s
    order = {bp: 0}
    queue = [bp]
    while queue:
        s = queue.pop(0)
        for a in range(len(alphabet)):
            for nbr in (out.get(s, {}).get(a), inc.get(s, {}).get(a)):
                if nbr is not None and nbr not in order:
                    order[nbr] = len(order)
                    queue.append(nbr)
    new_edges = {(order[s], a): order[t] for (s, a), t in edges.items()}
    return SubgroupAutomaton(alphabet, len(order), 0, new_edges)


def build_subgroup(alphabet: Alphabet, generators: list[Word]) -> SubgroupAutomaton:
    """Fold a wedge of loops labelled by the generators into the core automaton."""
    f = _Folder(alphabet)
    for g in generators:
        cur = 0
        letters = g.letters
        for i, lt in enumerate(letters):
            nxt = 0 if i == len(letters) - 1 else f.new_state()
            if lt.sign == 1:
                f.add_edge(cur, lt.index, nxt)
            else:
                f.add_edge(nxt, lt.index, cur)
            cur = nxt
    return f.finish()


def contains(g: SubgroupAutomaton, w: Word) -> bool:
    """Membership: the reduced form of w labels a basepoint loop."""
    rev = g.in_map()
    state = g.basepoint
    for lt in free_reduce(w).letters:
        if lt.sign == 1:
            state = g.edges.get((state, lt.index))
        else:
            state = rev.get((state, lt.index))
        if state is None:
            return False
    return state == g.basepoint


def intersect(g1: SubgroupAutomaton, g2: SubgroupAutomaton) -> SubgroupAutomaton:
    """Fiber product restricted to the component of the paired basepoints."""
    if g1.alphabet != g2.alphabet:
        raise ValueError("automata must share an alphabet")
    rev1, rev2 = g1.in_map(), g2.in_map()
    start = (g1.basepoint, g2.basepoint)
    index = {start: 0}
    queue = [start]
    edges = {}
    while queue:
        s1, s2 = pair = queue.pop(0)
        for a in range(len(g1.alphabet)):
            t1, t2 = g1.edges.get((s1, a)), g2.edges.get((s2, a))
            if t1 is not None and t2 is not None:
                tp = (t1, t2)
                if tp not in index:
                    index[tp] = len(index)
                    queue.append(tp)
                edges[(index[pair], a)] = index[tp]
            r1, r2 = rev1.get((s1, a)), rev2.get((s2, a))
            if r1 is not None and r2 is not None:
                rp = (r1, r2)
                if rp not in index:
                    index[rp] = len(index)
                    queue.append(rp)
                edges[(index[rp], a)] = index[pair]
    states, edges = _prune(0, set(range(len(index))), edges)
    return _renumber(g1.alphabet, 0, states, edges)


def basis(g: SubgroupAutomaton) -> list[Word]:
    """A free basis: one generator per edge outside a spanning tree."""
    # BFS spanning tree; path[s] is a reduced word reading basepoint -> s
    alphabet = g.alphabet
    rev = g.in_map()
    path = {g.basepoint: ()}
    tree = set()
    queue = [g.basepoint]
    while queue:
        s = queue.pop(0)
        for a in range(len(alphabet)):
            t = g.edges.get((s, a))
            if t is not None and t not in path:
                path[t] = path[s] + (Letter(a, 1),)
                tree.add((s, a, t))
                queue.append(t)
            r = rev.get((s, a))
            if r is not None and r not in path:
                path[r] = path[s] + (Letter(a, -1),)
                tree.add((r, a, s))
                queue.append(r)
    out = []
    for (s, a), t in sorted(g.edges.items()):
        if (s, a, t) in tree:
            continue
        letters = path[s] + (Letter(a, 1),) + tuple(
            lt.inverse() for lt in reversed(path[t])
        )
        w = free_reduce(Word(alphabet, letters))
        if w.letters:
            out.append(w)
    return out


def conjugate(g: SubgroupAutomaton, x: Word) -> SubgroupAutomaton:
    """Automaton for x^-1 <g> x, folded from the conjugated basis."""
    xi = invert(x)
    gens = [free_reduce(xi * b * x) for b in basis(g)]
    return build_subgroup(g.alphabet, gens)


def rank(g: SubgroupAutomaton) -> int:
    return len(g.edges) - g.num_states + 1


def canonical_form(g: SubgroupAutomaton):
    """Hashable canonical key; isomorphic folded automata compare equal."""
    return (g.num_states, tuple(sorted((s, a, t) for (s, a), t in g.edges.items())))


def dump(g: SubgroupAutomaton) -> str:
    """Adjacency list, one (state, letter, state) triple per line."""
    lines = [
        f"{s} {g.alphabet.name(a)} {t}"
        for (s, a), t in sorted(g.edges.items())
    ]
    return "\n".join(lines)
