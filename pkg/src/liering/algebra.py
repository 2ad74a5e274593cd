"""Free Lie ring arithmetic over the integers.

Two element representations are kept honest against each other:

* :class:`BracketExpr`, a formal integer combination of binary bracket
  trees, is the user-facing input shape;
* :class:`LieElement`, integer coordinates on the Lyndon-Shirshov basis of
  one bidegree, is the canonical output shape.

``normalize`` maps the first onto the second through the free associative
ring: every bracket node expands as [x, y] = xy - yx, and the resulting
word polynomial is back-substituted against the expansions of the Lyndon
basis brackets.  Those expansions form a unit triangular system, because
the expansion of [w] has coefficient 1 on w and is otherwise supported on
lexicographically larger rearrangements of w.  A nonzero residual after
back-substitution can only mean a bug, so it raises instead of truncating.

Coefficients are plain Python integers throughout; nothing here ever
rounds or overflows.  All public functions are pure, and the internal
caches hold immutable data only.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from typing import Mapping, Union

from .words import (
    LETTERS,
    BracketTree,
    Leaf,
    Node,
    all_words,
    bracket_string,
    is_lyndon,
    lyndon_bracket,
    lyndon_words,
    tree_bidegree,
)
from .words import bidegree as word_bidegree


class BidegreeError(ValueError):
    """An operation would mix distinct bidegrees."""


class InconsistencyError(RuntimeError):
    """An internal exactness invariant broke; results cannot be trusted."""


# ---------------------------------------------------------------------------
# free associative ring


class AssocPoly:
    """An integer combination of plain words in the free associative ring."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[str, int] | None = None):
        data: dict[str, int] = {}
        if coeffs:
            for word, c in coeffs.items():
                if c:
                    data[word] = c
        self.coeffs = data

    @classmethod
    def _wrap(cls, data: dict[str, int]) -> "AssocPoly":
        # Fast path for internal callers that already hold a clean dict.
        poly = object.__new__(cls)
        poly.coeffs = data
        return poly

    @classmethod
    def word(cls, word: str) -> "AssocPoly":
        return cls({word: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AssocPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "AssocPoly") -> "AssocPoly":
        out = dict(self.coeffs)
        for word, c in other.coeffs.items():
            r = out.get(word, 0) + c
            if r:
                out[word] = r
            elif word in out:
                del out[word]
        return AssocPoly._wrap(out)

    def __neg__(self) -> "AssocPoly":
        return AssocPoly._wrap({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "AssocPoly") -> "AssocPoly":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "AssocPoly":
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return AssocPoly._wrap({})
        return AssocPoly._wrap({w: scalar * c for w, c in self.coeffs.items()})

    def __mul__(self, other: "AssocPoly") -> "AssocPoly":
        """Concatenation product."""
        if not isinstance(other, AssocPoly):
            return NotImplemented
        out: dict[str, int] = {}
        for u, cu in self.coeffs.items():
            for v, cv in other.coeffs.items():
                word = u + v
                r = out.get(word, 0) + cu * cv
                if r:
                    out[word] = r
                elif word in out:
                    del out[word]
        return AssocPoly._wrap(out)

    def commutator(self, other: "AssocPoly") -> "AssocPoly":
        return self * other - other * self

    def __repr__(self) -> str:
        if not self.coeffs:
            return "AssocPoly(0)"
        terms = " + ".join(f"{c}*{w}" for w, c in sorted(self.coeffs.items()))
        return f"AssocPoly({terms})"


@lru_cache(maxsize=None)
def _tree_poly(tree: BracketTree) -> dict[str, int]:
    # Shared, never mutated.  Callers copy before editing.
    if isinstance(tree, Leaf):
        return {tree.letter: 1}
    left = _tree_poly(tree.left)
    right = _tree_poly(tree.right)
    out: dict[str, int] = {}
    for u, cu in left.items():
        for v, cv in right.items():
            c = cu * cv
            uv = u + v
            r = out.get(uv, 0) + c
            if r:
                out[uv] = r
            elif uv in out:
                del out[uv]
            vu = v + u
            r = out.get(vu, 0) - c
            if r:
                out[vu] = r
            elif vu in out:
                del out[vu]
    return out


# ---------------------------------------------------------------------------
# bracket expressions


ExprLike = Union["BracketExpr", BracketTree, str]


class BracketExpr:
    """A formal integer combination of bracket trees over the letters a, b."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[BracketTree, int] | None = None):
        data: dict[BracketTree, int] = {}
        if terms:
            for tree, c in terms.items():
                if not isinstance(tree, (Leaf, Node)):
                    raise TypeError(f"expected a bracket tree, got {tree!r}")
                if c:
                    data[tree] = c
        self.terms = data

    @classmethod
    def letter(cls, letter: str) -> "BracketExpr":
        if letter not in LETTERS:
            raise ValueError(f"letter must be one of {LETTERS}, got {letter!r}")
        return cls({Leaf(letter): 1})

    @classmethod
    def from_tree(cls, tree: BracketTree) -> "BracketExpr":
        return cls({tree: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BracketExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BracketExpr") -> "BracketExpr":
        if not isinstance(other, BracketExpr):
            return NotImplemented
        out = dict(self.terms)
        for tree, c in other.terms.items():
            r = out.get(tree, 0) + c
            if r:
                out[tree] = r
            elif tree in out:
                del out[tree]
        return BracketExpr(out)

    def __neg__(self) -> "BracketExpr":
        return BracketExpr({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "BracketExpr") -> "BracketExpr":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "BracketExpr":
        if not isinstance(scalar, int):
            return NotImplemented
        return BracketExpr({t: scalar * c for t, c in self.terms.items()})

    __mul__ = __rmul__

    def bracket(self, other: ExprLike) -> "BracketExpr":
        """Bilinear bracket, term by term."""
        other = as_expr(other)
        out: dict[BracketTree, int] = {}
        for s, cs in self.terms.items():
            for t, ct in other.terms.items():
                node = Node(s, t)
                r = out.get(node, 0) + cs * ct
                if r:
                    out[node] = r
                elif node in out:
                    del out[node]
        return BracketExpr(out)

    def bidegree(self) -> tuple[int, int] | None:
        """Common bidegree of all terms, None for the zero expression."""
        found: tuple[int, int] | None = None
        for tree in self.terms:
            bd = tree_bidegree(tree)
            if found is None:
                found = bd
            elif bd != found:
                raise BidegreeError(f"expression mixes bidegrees {found} and {bd}")
        return found

    def __repr__(self) -> str:
        if not self.terms:
            return "BracketExpr(0)"
        parts = " + ".join(f"{c}*{bracket_string(t)}" for t, c in self.terms.items())
        return f"BracketExpr({parts})"


def as_expr(value: ExprLike) -> BracketExpr:
    """Coerce a letter or a bracket tree into a one-term expression."""
    if isinstance(value, BracketExpr):
        return value
    if isinstance(value, (Leaf, Node)):
        return BracketExpr.from_tree(value)
    if isinstance(value, str):
        return BracketExpr.letter(value)
    raise TypeError(f"cannot interpret {value!r} as a bracket expression")


def left_normed(*items: ExprLike) -> BracketExpr:
    """The left-normed nesting [x1, ..., xn] = [[x1, ..., x_{n-1}], xn]."""
    if not items:
        raise ValueError("left_normed needs at least one argument")
    exprs = [as_expr(item) for item in items]
    return reduce(lambda acc, x: acc.bracket(x), exprs)


def assoc_expand(expr: ExprLike) -> AssocPoly:
    """Expand every bracket as [x, y] = xy - yx in the free associative ring."""
    expr = as_expr(expr)
    out: dict[str, int] = {}
    for tree, c in expr.terms.items():
        for word, e in _tree_poly(tree).items():
            r = out.get(word, 0) + c * e
            if r:
                out[word] = r
            elif word in out:
                del out[word]
    return AssocPoly._wrap(out)


# ---------------------------------------------------------------------------
# Lyndon-basis coordinates


class LieElement:
    """Integer coordinates on the Lyndon basis of one bidegree.

    ``bidegree`` is None only for the distinguished untyped zero, which
    combines with elements of any bidegree.  Typed elements (including
    typed zeros) refuse to mix across bidegrees.  Instances are treated as
    immutable everywhere in the package.
    """

    __slots__ = ("bidegree", "coeffs")

    def __init__(self, bidegree: tuple[int, int] | None, coeffs: Mapping[str, int] | None = None):
        data: dict[str, int] = {}
        if coeffs:
            if bidegree is None:
                raise BidegreeError("an element with coefficients needs a bidegree")
            for word, c in coeffs.items():
                if word_bidegree(word) != tuple(bidegree):
                    raise BidegreeError(f"word {word!r} is not of bidegree {bidegree}")
                if not is_lyndon(word):
                    raise ValueError(f"{word!r} is not a Lyndon word")
                if c:
                    data[word] = c
        if bidegree is not None:
            k, l = bidegree
            if k < 0 or l < 0 or (k, l) == (0, 0):
                raise BidegreeError(f"invalid bidegree ({k}, {l})")
            bidegree = (k, l)
        self.bidegree = bidegree
        self.coeffs = data

    @classmethod
    def _make(cls, bidegree: tuple[int, int] | None, coeffs: dict[str, int]) -> "LieElement":
        # Internal fast path: trusts the caller's dict.
        elem = object.__new__(cls)
        elem.bidegree = bidegree
        elem.coeffs = coeffs
        return elem

    @classmethod
    def zero(cls, bidegree: tuple[int, int] | None = None) -> "LieElement":
        return cls(bidegree, None)

    def is_zero(self) -> bool:
        return not self.coeffs

    def weight(self) -> int | None:
        return None if self.bidegree is None else sum(self.bidegree)

    def terms(self) -> list[tuple[int, str]]:
        """(coefficient, word) pairs in canonical word order."""
        return [(self.coeffs[w], w) for w in sorted(self.coeffs)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.bidegree == other.bidegree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self.is_zero():
            return hash(())
        return hash((self.bidegree, frozenset(self.coeffs.items())))

    def _combined_bidegree(self, other: "LieElement") -> tuple[int, int] | None:
        if self.bidegree is None:
            return other.bidegree
        if other.bidegree is None:
            return self.bidegree
        if self.bidegree != other.bidegree:
            raise BidegreeError(f"cannot mix bidegrees {self.bidegree} and {other.bidegree}")
        return self.bidegree

    def __add__(self, other: "LieElement") -> "LieElement":
        if not isinstance(other, LieElement):
            return NotImplemented
        bd = self._combined_bidegree(other)
        out = dict(self.coeffs)
        for word, c in other.coeffs.items():
            r = out.get(word, 0) + c
            if r:
                out[word] = r
            elif word in out:
                del out[word]
        return LieElement._make(bd, out)

    def __neg__(self) -> "LieElement":
        return LieElement._make(self.bidegree, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        if not isinstance(other, LieElement):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar: int) -> "LieElement":
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return LieElement._make(self.bidegree, {})
        return LieElement._make(self.bidegree, {w: scalar * c for w, c in self.coeffs.items()})

    __mul__ = __rmul__

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for c, w in [(self.coeffs[w], w) for w in sorted(self.coeffs)]:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"[{w}]" if mag == 1 else f"{mag}[{w}]"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LieElement({self.bidegree}, {self})"


# ---------------------------------------------------------------------------
# normalization


@lru_cache(maxsize=None)
def _context(k: int, l: int):
    """Reduction context for one bidegree.

    Returns (vocabulary, word index, rows) where each row is
    (lyndon word, its index, expansion pairs sorted by word index).  The
    leading pair of every row must be (own index, 1); anything else means
    the triangular structure is broken and nothing can be trusted.
    """
    vocab = all_words(k, l)
    index = {w: i for i, w in enumerate(vocab)}
    rows = []
    for w in lyndon_words(k, l):
        poly = _tree_poly(lyndon_bracket(w))
        pairs = sorted((index[u], c) for u, c in poly.items())
        widx = index[w]
        if pairs[0] != (widx, 1):
            raise InconsistencyError(f"basis expansion is not unit triangular at {w!r}")
        rows.append((w, widx, tuple(pairs)))
    return vocab, index, tuple(rows)


def _reduce(poly_coeffs: Mapping[str, int], bd: tuple[int, int]) -> LieElement:
    """Back-substitute a homogeneous word polynomial onto the Lyndon basis."""
    k, l = bd
    vocab, index, rows = _context(k, l)
    residual = [0] * len(vocab)
    for word, c in poly_coeffs.items():
        residual[index[word]] = c
    out: dict[str, int] = {}
    for word, widx, pairs in rows:
        c = residual[widx]
        if c:
            out[word] = c
            for i, e in pairs:
                residual[i] -= c * e
    if any(residual):
        raise InconsistencyError(
            f"nonzero residual after back-substitution in bidegree {bd}; "
            "the input polynomial does not lie in the free Lie ring"
        )
    return LieElement._make((k, l), out)


def normalize(expr: ExprLike) -> LieElement:
    """The unique Lyndon-basis representation of a homogeneous expression.

    Raises :class:`BidegreeError` when the expression mixes bidegrees and
    :class:`InconsistencyError` if back-substitution leaves a residual.
    """
    expr = as_expr(expr)
    bd = expr.bidegree()
    if bd is None:
        return LieElement.zero()
    return _reduce(assoc_expand(expr).coeffs, bd)


def _element_poly(x: LieElement) -> dict[str, int]:
    out: dict[str, int] = {}
    for word, c in x.coeffs.items():
        for u, e in _tree_poly(lyndon_bracket(word)).items():
            r = out.get(u, 0) + c * e
            if r:
                out[u] = r
            elif u in out:
                del out[u]
    return out


def basis_expansion(x: LieElement) -> BracketExpr:
    """The element as a combination of standard-bracketed Lyndon words."""
    return BracketExpr({lyndon_bracket(w): c for w, c in x.coeffs.items()})


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Normalized bracket of two basis-coordinate elements."""
    if x.is_zero() or y.is_zero():
        if x.bidegree is not None and y.bidegree is not None:
            return LieElement.zero((x.bidegree[0] + y.bidegree[0], x.bidegree[1] + y.bidegree[1]))
        return LieElement.zero()
    px = _element_poly(x)
    py = _element_poly(y)
    out: dict[str, int] = {}
    for u, cu in px.items():
        for v, cv in py.items():
            c = cu * cv
            for word, sign in ((u + v, 1), (v + u, -1)):
                r = out.get(word, 0) + sign * c
                if r:
                    out[word] = r
                elif word in out:
                    del out[word]
    bd = (x.bidegree[0] + y.bidegree[0], x.bidegree[1] + y.bidegree[1])
    return _reduce(out, bd)


def bracket_with_letter(x: LieElement, letter: str) -> LieElement:
    """Normalized [x, letter]; the building block of the pair map."""
    if letter not in LETTERS:
        raise ValueError(f"letter must be one of {LETTERS}, got {letter!r}")
    if x.is_zero():
        if x.bidegree is None:
            return LieElement.zero()
        k, l = x.bidegree
        return LieElement.zero((k + 1, l) if letter == "a" else (k, l + 1))
    out: dict[str, int] = {}
    for u, c in _element_poly(x).items():
        for word, sign in ((u + letter, 1), (letter + u, -1)):
            r = out.get(word, 0) + sign * c
            if r:
                out[word] = r
            elif word in out:
                del out[word]
    k, l = x.bidegree
    bd = (k + 1, l) if letter == "a" else (k, l + 1)
    return _reduce(out, bd)


def engel_tree(n: int) -> BracketTree:
    """The left-normed tree [a, b, b, ..., b] with n trailing b's."""
    if n < 0:
        raise ValueError(f"engel index must be nonnegative, got {n}")
    return lyndon_bracket("a" + "b" * n)


def engel_expr(n: int) -> BracketExpr:
    return BracketExpr.from_tree(engel_tree(n))


def engel(n: int) -> LieElement:
    """The engel bracket C_n = [a, b, ..., b] in basis coordinates: 1*[ab^n]."""
    if n < 0:
        raise ValueError(f"engel index must be nonnegative, got {n}")
    return LieElement._make((1, n), {"a" + "b" * n: 1})


# ---------------------------------------------------------------------------
# expression grammar

# expr := ["+"|"-"] term { ("+"|"-") term }
# term := ["-"] [INT "*"] atom
# atom := "a" | "b" | "[" expr { "," expr }+ "]"


def parse_expr(text: str) -> BracketExpr:
    """Parse the bracket-expression grammar, e.g. ``3*[a,b] + -1*[b,a]``.

    Brackets with more than two slots are left-normed sugar:
    ``[x,y,z]`` means ``[[x,y],z]``.
    """
    parser = _Parser(text)
    expr = parser.parse_sum()
    parser.expect_end()
    return expr


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ValueError(f"parse error at position {self.pos}: {message}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.peek()
        if ch is None:
            self.error("unexpected end of input")
        self.pos += 1
        return ch

    def expect(self, ch: str) -> None:
        got = self.take()
        if got != ch:
            self.error(f"expected {ch!r}, got {got!r}")

    def expect_end(self) -> None:
        if self.peek() is not None:
            self.error(f"unexpected trailing input {self.text[self.pos:]!r}")

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse_sum(self) -> BracketExpr:
        sign = 1
        ch = self.peek()
        if ch in ("+", "-"):
            self.take()
            sign = -1 if ch == "-" else 1
        expr = sign * self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            term = self.parse_term()
            expr = expr + term if op == "+" else expr - term
        return expr

    def parse_term(self) -> BracketExpr:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        ch = self.peek()
        if ch is not None and ch.isdigit():
            coeff = self.parse_int()
            self.expect("*")
            return (sign * coeff) * self.parse_atom()
        return sign * self.parse_atom()

    def parse_atom(self) -> BracketExpr:
        ch = self.peek()
        if ch in LETTERS:
            self.take()
            return BracketExpr.letter(ch)
        if ch == "[":
            self.take()
            slots = [self.parse_sum()]
            while self.peek() == ",":
                self.take()
                slots.append(self.parse_sum())
            self.expect("]")
            if len(slots) < 2:
                self.error("a bracket needs at least two slots")
            return left_normed(*slots)
        self.error(f"expected a letter or '[', got {ch!r}")
