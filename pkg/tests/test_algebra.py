"""Bracket expressions, associative expansion, and basis normalization."""

import random

import pytest

from helpers import brute_expand_expr, random_bidegree, random_expr
from liering.algebra import (
    AssocPoly,
    BidegreeError,
    BracketExpr,
    LieElement,
    assoc_expand,
    basis_expansion,
    bracket,
    bracket_with_letter,
    engel,
    engel_expr,
    left_normed,
    normalize,
    parse_expr,
)
from liering.words import Leaf, Node, lyndon_bracket, lyndon_words


def test_assoc_expand_examples():
    assert assoc_expand(left_normed("a", "b")).coeffs == {"ab": 1, "ba": -1}
    assert assoc_expand(left_normed("a", "b", "b")).coeffs == {"abb": 1, "bab": -2, "bba": 1}
    assert assoc_expand(BracketExpr()).is_zero()


def test_assoc_poly_arithmetic():
    p = AssocPoly({"ab": 2, "ba": -1})
    q = AssocPoly({"ab": -2})
    assert (p + q).coeffs == {"ba": -1}
    assert (3 * p).coeffs == {"ab": 6, "ba": -3}
    assert (p - p).is_zero()
    assert (AssocPoly.word("a") * AssocPoly.word("b")).coeffs == {"ab": 1}
    assert AssocPoly.word("a").commutator(AssocPoly.word("b")).coeffs == {"ab": 1, "ba": -1}


def test_normalize_examples():
    assert normalize(left_normed("a", "b", "b", "a")).coeffs == {"aabb": -1}
    assert normalize(left_normed("a", "b", "a", "b")).coeffs == {"aabb": -1}
    square = normalize(left_normed("a", "a"))
    assert square.is_zero() and square.bidegree == (2, 0)


def test_normalize_zero_and_mixing():
    assert normalize(BracketExpr()).is_zero()
    mixed = left_normed("a", "b") + BracketExpr.letter("a")
    with pytest.raises(BidegreeError):
        normalize(mixed)


def test_reduce_aborts_on_non_lie_input():
    # The single word "ab" is not a Lie element, so back-substitution must
    # leave a residual and abort instead of truncating.
    from liering.algebra import InconsistencyError, _reduce

    with pytest.raises(InconsistencyError):
        _reduce({"ab": 1}, (1, 1))


def test_bracket_examples():
    x = engel(2)
    assert bracket(x, x).is_zero()
    assert bracket(x, x).bidegree == (2, 4)
    assert bracket(engel(1), engel(0)).coeffs == {"aab": -1}


def test_bracket_zero_handling():
    zero = LieElement.zero()
    assert bracket(zero, engel(2)).is_zero()
    assert bracket(zero, engel(2)).bidegree is None
    typed = LieElement.zero((2, 1))
    out = bracket(typed, engel(0))
    assert out.is_zero() and out.bidegree == (3, 1)


def test_bracket_with_letter():
    assert bracket_with_letter(engel(2), "b") == engel(3)
    assert bracket_with_letter(engel(2), "a").coeffs == {"aabb": -1}
    assert bracket_with_letter(LieElement.zero((1, 2)), "a").bidegree == (2, 2)
    with pytest.raises(ValueError):
        bracket_with_letter(engel(1), "c")


def test_engel_examples():
    assert engel(0) == normalize(BracketExpr.letter("a"))
    assert engel(3) == normalize(left_normed("a", "b", "b", "b"))
    for n in range(0, 9):
        assert engel(n).terms() == [(1, "a" + "b" * n)]
    with pytest.raises(ValueError):
        engel(-1)


def test_left_normed_shapes():
    assert left_normed("a") == BracketExpr.letter("a")
    assert left_normed("a", "b", "b") == BracketExpr.from_tree(
        Node(Node(Leaf("a"), Leaf("b")), Leaf("b"))
    )
    e1, e2, e3 = engel_expr(1), engel_expr(2), engel_expr(3)
    assert left_normed(e1, e2, e3) == e1.bracket(e2).bracket(e3)
    with pytest.raises(ValueError):
        left_normed()


def test_lie_element_validation():
    with pytest.raises(ValueError):
        LieElement((1, 1), {"ba": 1})  # not Lyndon
    with pytest.raises(BidegreeError):
        LieElement((1, 1), {"abb": 1})  # wrong bidegree
    with pytest.raises(BidegreeError):
        LieElement((0, 0))
    with pytest.raises(BidegreeError):
        LieElement(None, {"ab": 1})


def test_lie_element_mixing_rules():
    untyped = LieElement.zero()
    typed_zero = LieElement.zero((2, 2))
    x = engel(2)
    assert (untyped + x) == x
    assert (x + untyped) == x
    assert typed_zero == untyped  # both are zero
    with pytest.raises(BidegreeError):
        typed_zero + x  # (2, 2) against (1, 2)


def test_lie_element_scalar_and_str():
    x = 3 * engel(1) - 2 * engel(1)
    assert x == engel(1)
    assert (0 * x).is_zero()
    assert str(engel(2)) == "[abb]"
    assert str(-2 * engel(2)) == "-2[abb]"


def test_triangularity_up_to_weight_10():
    for n in range(1, 11):
        for k in range(n + 1):
            for word in lyndon_words(k, n - k):
                poly = assoc_expand(BracketExpr.from_tree(lyndon_bracket(word))).coeffs
                assert poly[word] == 1
                assert all(other >= word for other in poly)


def test_normalize_round_trip_against_independent_expansion():
    rng = random.Random(20240811)
    for _ in range(300):
        k, l = random_bidegree(rng, 10)
        expr = random_expr(rng, k, l)
        element = normalize(expr)
        regenerated = assoc_expand(basis_expansion(element))
        assert regenerated.coeffs == brute_expand_expr(expr)


def test_jacobi_and_antisymmetry_on_random_elements():
    rng = random.Random(987654)
    for _ in range(150):
        weights = [rng.randint(1, 3) for _ in range(3)]
        while sum(weights) > 9:
            weights[rng.randrange(3)] = 1
        elems = []
        for w in weights:
            k = rng.randint(0, w)
            elems.append(normalize(random_expr(rng, k, w - k)))
        x, y, z = elems
        jacobi = (
            bracket(bracket(x, y), z)
            + bracket(bracket(y, z), x)
            + bracket(bracket(z, x), y)
        )
        assert jacobi.is_zero()
        assert (bracket(x, y) + bracket(y, x)).is_zero()
        assert bracket(x, x).is_zero()


def test_proof_rewrite_rule():
    # [[ab^n ab^m], b] = [[ab^{n+1}], [ab^m]] + [ab^n ab^{m+1}] for n < m.
    for m in range(1, 7):
        for n in range(0, m):
            w = "a" + "b" * n + "a" + "b" * m
            lhs = normalize(BracketExpr.from_tree(lyndon_bracket(w)).bracket("b"))
            rhs = normalize(
                engel_expr(n + 1).bracket(engel_expr(m))
                + BracketExpr.from_tree(lyndon_bracket("a" + "b" * n + "a" + "b" * (m + 1)))
            )
            assert lhs == rhs, (n, m)


def test_parse_expr_grammar():
    assert parse_expr("a") == BracketExpr.letter("a")
    assert parse_expr("[a,b]") == left_normed("a", "b")
    assert parse_expr("[a,b,b]") == left_normed("a", "b", "b")
    assert parse_expr("3*[a,b] + -1*[b,a]") == 3 * left_normed("a", "b") - left_normed("b", "a")
    assert parse_expr(" [ a , [ a , b ] ] ") == left_normed("a", left_normed("a", "b"))
    assert parse_expr("a - b + 2*a") == 3 * BracketExpr.letter("a") - BracketExpr.letter("b")
    assert parse_expr("-[a,b]") == -left_normed("a", "b")
    assert parse_expr("[a+b,b]") == left_normed("a", "b") + left_normed("b", "b")
    assert normalize(parse_expr("3*[a,b] + -1*[b,a]")).coeffs == {"ab": 4}


@pytest.mark.parametrize("bad", ["", "c", "[a]", "[a,b", "3*", "a b", "2**a", "3"])
def test_parse_expr_rejects(bad):
    with pytest.raises(ValueError):
        parse_expr(bad)
