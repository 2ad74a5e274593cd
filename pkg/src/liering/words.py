"""Words over the two-letter alphabet and the Lyndon-Shirshov bracketing.

Words are plain strings over ``{"a", "b"}`` with the fixed order a < b.
Lyndon words (nonempty words strictly smaller than every proper rotation)
index the basis of the free Lie ring used throughout the package; the
bracketing of a Lyndon word follows its standard factorization.

All functions here are pure and cache only immutable values, so concurrent
read-only use is safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

LETTERS = ("a", "b")


@dataclass(frozen=True, slots=True)
class Leaf:
    """A single letter."""

    letter: str


@dataclass(frozen=True, slots=True)
class Node:
    """The bracket [left, right] of two subtrees."""

    left: "BracketTree"
    right: "BracketTree"


BracketTree = Leaf | Node


def _check_word(word: str) -> None:
    if not word:
        raise ValueError("word must be nonempty")
    bad = set(word) - set(LETTERS)
    if bad:
        raise ValueError(f"word may only use letters 'a' and 'b', got {sorted(bad)!r}")


def bidegree(word: str) -> tuple[int, int]:
    """(number of a's, number of b's) in the word."""
    return word.count("a"), word.count("b")


def is_lyndon(word: str) -> bool:
    """True iff the word is strictly smaller than all of its proper rotations.

    The comparison is strict, so periodic words such as ``abab`` are
    rejected.  Single letters are Lyndon.
    """
    _check_word(word)
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


@lru_cache(maxsize=None)
def all_words(k: int, l: int) -> tuple[str, ...]:
    """Every word with exactly k a's and l b's, in lexicographic order."""
    if k < 0 or l < 0:
        raise ValueError(f"bidegree components must be nonnegative, got ({k}, {l})")
    if (k, l) == (0, 0):
        raise ValueError("bidegree (0, 0) has no words")
    n = k + l
    words = []
    for positions in itertools.combinations(range(n), k):
        marks = set(positions)
        words.append("".join("a" if i in marks else "b" for i in range(n)))
    return tuple(sorted(words))


@lru_cache(maxsize=None)
def lyndon_words(k: int, l: int) -> tuple[str, ...]:
    """All Lyndon words of bidegree (k, l), in lexicographic order.

    This ordering is the canonical basis ordering used by every other
    module, so matrices and certificates are reproducible across runs.
    """
    return tuple(w for w in all_words(k, l) if is_lyndon(w))


def standard_factorization(word: str) -> tuple[str, str]:
    """Split a Lyndon word w = uv with v its longest proper Lyndon suffix."""
    if not is_lyndon(word):
        raise ValueError(f"{word!r} is not a Lyndon word")
    if len(word) < 2:
        raise ValueError("a single letter has no factorization")
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            u, v = word[:i], word[i:]
            # The left part of a standard factorization is Lyndon as well.
            if not is_lyndon(u):
                raise AssertionError(f"standard factorization broke on {word!r}")
            return u, v
    raise AssertionError(f"no Lyndon suffix found in {word!r}")


@lru_cache(maxsize=None)
def lyndon_bracket(word: str) -> BracketTree:
    """The recursive bracketing [w] = [[u], [v]] over the standard factorization."""
    if not is_lyndon(word):
        raise ValueError(f"{word!r} is not a Lyndon word")
    if len(word) == 1:
        return Leaf(word)
    u, v = standard_factorization(word)
    return Node(lyndon_bracket(u), lyndon_bracket(v))


def tree_bidegree(tree: BracketTree) -> tuple[int, int]:
    """Bidegree of a bracket tree, counted over its leaves."""
    if isinstance(tree, Leaf):
        return (1, 0) if tree.letter == "a" else (0, 1)
    lk, ll = tree_bidegree(tree.left)
    rk, rl = tree_bidegree(tree.right)
    return lk + rk, ll + rl


def tree_weight(tree: BracketTree) -> int:
    """Number of leaves of a bracket tree."""
    if isinstance(tree, Leaf):
        return 1
    return tree_weight(tree.left) + tree_weight(tree.right)


def bracket_string(tree: BracketTree) -> str:
    """Render a tree as nested brackets, e.g. ``[a,[[a,b],b]]``."""
    if isinstance(tree, Leaf):
        return tree.letter
    return f"[{bracket_string(tree.left)},{bracket_string(tree.right)}]"
