"""Munn trees and the word problem for free inverse monoids.

A Munn tree is the prefix-closed set of reduced words visited while reading a
word in the Cayley graph of the free group, together with the terminal vertex.
Two words are equal in the free inverse monoid iff their trees and terminals
coincide.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, free_reduce, prefixes


@dataclass(frozen=True)
class MunnTree:
    vertices: frozenset  # of letter tuples (reduced words); contains ()
    terminal: tuple  # reduced letter tuple

    def __post_init__(self):
        if self.terminal not in self.vertices:
            raise ValueError("terminal vertex not in tree")


def munn_tree(w: Word) -> MunnTree:
    """Vertices are the reduced forms of all prefixes; terminal is red(w)."""
    verts = frozenset(free_reduce(p).letters for p in prefixes(w))
    return MunnTree(verts, free_reduce(w).letters)


def fim_equal(u: Word, v: Word) -> bool:
    """Word problem for the free inverse monoid (Wagner congruence)."""
    return munn_tree(u) == munn_tree(v)


def fim_is_idempotent(w: Word) -> bool:
    """True iff the walk of w returns to the origin (terminal is empty)."""
    return free_reduce(w).is_empty()
