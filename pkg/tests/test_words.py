"""Lyndon word recognition, enumeration, factorization and bracketing."""

import itertools

import pytest
from hypothesis import given, strategies as st

from helpers import brute_lyndon
from liering.dims import lie_dim_bigraded
from liering.words import (
    Leaf,
    Node,
    all_words,
    bidegree,
    bracket_string,
    is_lyndon,
    lyndon_bracket,
    lyndon_words,
    standard_factorization,
    tree_bidegree,
    tree_weight,
)


def test_is_lyndon_examples():
    assert is_lyndon("ab")
    assert not is_lyndon("abab")  # periodic
    assert is_lyndon("aabab")
    assert is_lyndon("a") and is_lyndon("b")
    assert not is_lyndon("ba")


def test_is_lyndon_rejects_bad_input():
    with pytest.raises(ValueError):
        is_lyndon("")
    with pytest.raises(ValueError):
        is_lyndon("abc")


def test_is_lyndon_exhaustive_up_to_length_10():
    for n in range(1, 11):
        for letters in itertools.product("ab", repeat=n):
            word = "".join(letters)
            assert is_lyndon(word) == brute_lyndon(word)


@given(st.text(alphabet="ab", min_size=1, max_size=14))
def test_is_lyndon_matches_brute_force(word):
    assert is_lyndon(word) == brute_lyndon(word)


def test_standard_factorization_examples():
    assert standard_factorization("ab") == ("a", "b")
    for n in range(1, 7):
        assert standard_factorization("a" + "b" * n) == ("a" + "b" * (n - 1), "b")
    assert standard_factorization("aabb") == ("a", "abb")


def test_standard_factorization_errors():
    with pytest.raises(ValueError):
        standard_factorization("a")
    with pytest.raises(ValueError):
        standard_factorization("ba")


def test_standard_factorization_recomposes():
    for k in range(0, 7):
        for l in range(0, 7):
            if (k, l) == (0, 0):
                continue
            for word in lyndon_words(k, l):
                if len(word) < 2:
                    continue
                u, v = standard_factorization(word)
                assert u + v == word
                assert u < v
                assert is_lyndon(u) and is_lyndon(v)


def test_lyndon_bracket_examples():
    assert lyndon_bracket("a") == Leaf("a")
    assert lyndon_bracket("abb") == Node(Node(Leaf("a"), Leaf("b")), Leaf("b"))
    assert lyndon_bracket("aabb") == Node(Leaf("a"), Node(Node(Leaf("a"), Leaf("b")), Leaf("b")))


def test_lyndon_bracket_rejects_non_lyndon():
    with pytest.raises(ValueError):
        lyndon_bracket("abab")


def test_lyndon_words_examples():
    for m in range(0, 7):
        assert lyndon_words(1, m) == ("a" + "b" * m,)
    assert lyndon_words(2, 3) == ("aabbb", "ababb")
    assert lyndon_words(3, 3) == ("aaabbb", "aababb", "aabbab")


def test_lyndon_words_errors():
    with pytest.raises(ValueError):
        lyndon_words(0, 0)
    with pytest.raises(ValueError):
        lyndon_words(-1, 2)


def test_lyndon_words_are_sorted_and_lyndon():
    for k in range(0, 7):
        for l in range(0, 7):
            if (k, l) == (0, 0):
                continue
            words = lyndon_words(k, l)
            assert list(words) == sorted(words)
            assert all(is_lyndon(w) for w in words)
            assert all(bidegree(w) == (k, l) for w in words)


def test_lyndon_counts_match_witt_up_to_weight_14():
    for n in range(1, 15):
        for k in range(n + 1):
            assert len(lyndon_words(k, n - k)) == lie_dim_bigraded(k, n - k)


def test_three_a_lyndon_criterion():
    # ab^i ab^j ab^t is Lyndon iff i <= j and i < t.
    for i in range(0, 13):
        for j in range(0, 13 - i):
            for t in range(0, 13 - i - j):
                word = "a" + "b" * i + "a" + "b" * j + "a" + "b" * t
                assert is_lyndon(word) == (i <= j and i < t), (i, j, t)


def test_all_words_basics():
    assert all_words(1, 1) == ("ab", "ba")
    assert len(all_words(3, 2)) == 10
    assert list(all_words(2, 2)) == sorted(all_words(2, 2))


def test_tree_helpers():
    tree = lyndon_bracket("aabb")
    assert tree_bidegree(tree) == (2, 2)
    assert tree_weight(tree) == 4
    assert bracket_string(tree) == "[a,[[a,b],b]]"
