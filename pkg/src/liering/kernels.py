"""Kernel lattices of the pair map and machine-checkable identity certificates.

The pair map sends (A, B) in L_{k-1,l} (+) L_{k,l-1} to [A,a] + [B,b] in
L_{k,l}.  A kernel vector is exactly a bracket identity [A,a] = [-B,b]
valid in every Lie ring, so kernels are computed as honest integer
lattices and shipped as certificates that can be re-verified from scratch.

Basis conventions: the domain lists the Lyndon basis of L_{k-1,l} first
(each bracketed with the letter a), then L_{k,l-1} (bracketed with b),
both in lexicographic word order; the codomain is the Lyndon basis of
L_{k,l}.  A summand with a negative index is the zero module, which makes
boundary bidegrees like (2, 0) come out right rather than erroring.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .algebra import InconsistencyError, LieElement, bracket_with_letter
from .words import bidegree as word_bidegree
from .words import is_lyndon, lyndon_words
from .zlinalg import (
    IntMatrix,
    KernelLattice,
    kernel,
    lattice_coordinates,
    rank,
    smith_invariants,
)


@dataclass(frozen=True)
class PairMatrix:
    """The pair map on one bidegree, in canonical bases."""

    k: int
    l: int
    domain: tuple[tuple[str, str], ...]  # (basis word, letter it gets bracketed with)
    codomain: tuple[str, ...]
    matrix: IntMatrix


@dataclass
class IdentityCertificate:
    """A pair (A, B) claimed to satisfy [A,a] + [B,b] = 0.

    ``source`` records provenance ("computed", "family:<name>" or "user");
    ``verified`` is only set by :func:`verify_certificate`.
    """

    k: int
    l: int
    A: LieElement
    B: LieElement
    source: str = "user"
    verified: bool = False

    def copy(self) -> "IdentityCertificate":
        return replace(self)


@dataclass(frozen=True)
class SurjectivityReport:
    """Rank and cokernel data for the pair map on one bidegree."""

    k: int
    l: int
    codomain_dim: int
    rank: int
    invariant_factors: tuple[int, ...]

    @property
    def surjective(self) -> bool:
        # Full rank with unit invariant factors means the cokernel is
        # trivial over the integers, not merely over the rationals.
        return self.rank == self.codomain_dim and all(f == 1 for f in self.invariant_factors)

    def __bool__(self) -> bool:
        return self.surjective


@dataclass(frozen=True)
class MembershipReport:
    """Where a certificate vector sits inside the computed kernel lattice."""

    member: bool
    kernel_rank: int
    index: int | None = None
    generator: bool | None = None


def _slice_basis(k: int, l: int) -> tuple[str, ...]:
    if k < 0 or l < 0 or (k, l) == (0, 0):
        return ()
    return lyndon_words(k, l)


def _check_bidegree(k: int, l: int) -> None:
    if k < 0 or l < 0:
        raise ValueError(f"bidegree components must be nonnegative, got ({k}, {l})")
    if (k, l) == (0, 0):
        raise ValueError("bidegree (0, 0) is empty")


@lru_cache(maxsize=None)
def pair_matrix(k: int, l: int) -> PairMatrix:
    """Matrix of (A, B) -> [A,a] + [B,b] on the bidegree-(k, l) slice."""
    _check_bidegree(k, l)
    dom_a = _slice_basis(k - 1, l)
    dom_b = _slice_basis(k, l - 1)
    codomain = _slice_basis(k, l)
    position = {w: i for i, w in enumerate(codomain)}
    columns = []
    for words, letter, bd in ((dom_a, "a", (k - 1, l)), (dom_b, "b", (k, l - 1))):
        for w in words:
            image = bracket_with_letter(LieElement(bd, {w: 1}), letter)
            column = [0] * len(codomain)
            for word, c in image.coeffs.items():
                column[position[word]] = c
            columns.append(column)
    entries = [[col[i] for col in columns] for i in range(len(codomain))]
    matrix = IntMatrix(entries, cols=len(columns))
    domain = tuple((w, "a") for w in dom_a) + tuple((w, "b") for w in dom_b)
    return PairMatrix(k, l, domain, codomain, matrix)


@lru_cache(maxsize=None)
def pair_rank(k: int, l: int) -> int:
    return rank(pair_matrix(k, l).matrix)


@lru_cache(maxsize=None)
def kernel_lattice(k: int, l: int) -> KernelLattice:
    """Canonical integer kernel of the pair map on one bidegree."""
    return kernel(pair_matrix(k, l).matrix)


def pair_image(a_part: LieElement, b_part: LieElement) -> LieElement:
    """[A, a] + [B, b], normalized."""
    return bracket_with_letter(a_part, "a") + bracket_with_letter(b_part, "b")


def _check_certificate_shape(cert: IdentityCertificate) -> None:
    _check_bidegree(cert.k, cert.l)
    expected_a = (cert.k - 1, cert.l)
    expected_b = (cert.k, cert.l - 1)
    if cert.A.bidegree is not None and cert.A.bidegree != expected_a:
        raise ValueError(f"A has bidegree {cert.A.bidegree}, expected {expected_a}")
    if cert.B.bidegree is not None and cert.B.bidegree != expected_b:
        raise ValueError(f"B has bidegree {cert.B.bidegree}, expected {expected_b}")
    if not cert.A.is_zero() and min(expected_a) < 0:
        raise ValueError(f"A must vanish because L{expected_a} is the zero module")
    if not cert.B.is_zero() and min(expected_b) < 0:
        raise ValueError(f"B must vanish because L{expected_b} is the zero module")


def verify_certificate(cert: IdentityCertificate) -> bool:
    """Re-check [A,a] + [B,b] = 0 by normalization and update the flag."""
    _check_certificate_shape(cert)
    cert.verified = pair_image(cert.A, cert.B).is_zero()
    return cert.verified


def certificate_vector(cert: IdentityCertificate) -> tuple[int, ...]:
    """Coordinates of (A, B) in the canonical domain basis of the bidegree."""
    _check_certificate_shape(cert)
    dom_a = _slice_basis(cert.k - 1, cert.l)
    dom_b = _slice_basis(cert.k, cert.l - 1)
    return tuple(cert.A.coeffs.get(w, 0) for w in dom_a) + tuple(
        cert.B.coeffs.get(w, 0) for w in dom_b
    )


def _element_from_slice(bd: tuple[int, int], words: tuple[str, ...], coords) -> LieElement:
    if not words:
        return LieElement.zero()
    return LieElement(bd, {w: c for w, c in zip(words, coords) if c})


@lru_cache(maxsize=None)
def _kernel_certificates(k: int, l: int) -> tuple[IdentityCertificate, ...]:
    lattice = kernel_lattice(k, l)
    dom_a = _slice_basis(k - 1, l)
    dom_b = _slice_basis(k, l - 1)
    split = len(dom_a)
    certificates = []
    for vector in lattice.basis:
        cert = IdentityCertificate(
            k,
            l,
            _element_from_slice((k - 1, l), dom_a, vector[:split]),
            _element_from_slice((k, l - 1), dom_b, vector[split:]),
            source="computed",
        )
        if not verify_certificate(cert):
            raise InconsistencyError(
                f"kernel vector of bidegree ({k}, {l}) failed re-verification"
            )
        certificates.append(cert)
    return tuple(certificates)


def kernel_certificates(k: int, l: int) -> tuple[IdentityCertificate, ...]:
    """One verified certificate per canonical kernel basis vector."""
    return tuple(cert.copy() for cert in _kernel_certificates(k, l))


def check_surjective(k: int, l: int) -> SurjectivityReport:
    """Rank and integral cokernel check for the pair map (weight >= 2 only)."""
    if k + l < 2:
        raise ValueError(f"surjectivity check needs weight >= 2, got ({k}, {l})")
    pm = pair_matrix(k, l)
    return SurjectivityReport(
        k,
        l,
        codomain_dim=pm.matrix.rows,
        rank=pair_rank(k, l),
        invariant_factors=smith_invariants(pm.matrix),
    )


def lattice_membership(cert: IdentityCertificate) -> MembershipReport:
    """Locate a verified certificate inside the computed kernel lattice.

    For rank-1 kernels the index of the vector against the generator is
    reported, so "generates" claims become exact index-1 statements.
    """
    if not cert.verified:
        raise ValueError("certificate must be verified before membership checks")
    lattice = kernel_lattice(cert.k, cert.l)
    coords = lattice_coordinates(lattice, certificate_vector(cert))
    member = coords is not None
    index = generator = None
    if member and lattice.rank == 1:
        index = abs(coords[0])
        generator = index == 1
    return MembershipReport(member, lattice.rank, index, generator)


# ---------------------------------------------------------------------------
# serialization


def element_pairs(x: LieElement) -> list[list[str]]:
    """JSON shape of an element: [[decimal coefficient, word], ...]."""
    return [[str(c), w] for c, w in x.terms()]


def _element_from_pairs(pairs, expected_bd: tuple[int, int]) -> LieElement:
    coeffs: dict[str, int] = {}
    for item in pairs:
        if len(item) != 2:
            raise ValueError(f"expected [coefficient, word] pairs, got {item!r}")
        raw_c, word = item
        c = int(raw_c)
        if not isinstance(word, str) or not is_lyndon(word):
            raise ValueError(f"{word!r} is not a Lyndon word")
        if word_bidegree(word) != expected_bd:
            raise ValueError(f"word {word!r} is not of bidegree {expected_bd}")
        if word in coeffs:
            raise ValueError(f"duplicate word {word!r}")
        if c:
            coeffs[word] = c
    if not coeffs:
        return LieElement.zero()
    return LieElement(expected_bd, coeffs)


def certificate_to_dict(cert: IdentityCertificate) -> dict:
    return {
        "k": cert.k,
        "l": cert.l,
        "A": element_pairs(cert.A),
        "B": element_pairs(cert.B),
        "source": cert.source,
        "verified": cert.verified,
    }


def certificate_from_dict(data: dict) -> IdentityCertificate:
    try:
        k = int(data["k"])
        l = int(data["l"])
        pairs_a = data["A"]
        pairs_b = data["B"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed certificate record: {exc}") from exc
    _check_bidegree(k, l)
    cert = IdentityCertificate(
        k,
        l,
        _element_from_pairs(pairs_a, (k - 1, l)) if k - 1 >= 0 else _require_empty(pairs_a),
        _element_from_pairs(pairs_b, (k, l - 1)) if l - 1 >= 0 else _require_empty(pairs_b),
        source=str(data.get("source", "user")),
        verified=bool(data.get("verified", False)),
    )
    _check_certificate_shape(cert)
    return cert


def _require_empty(pairs) -> LieElement:
    if pairs:
        raise ValueError("a zero-module component must serialize as an empty list")
    return LieElement.zero()


def _element_latex(x: LieElement) -> str:
    if x.is_zero():
        return "0"
    chunks = []
    for c, w in x.terms():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = f"[{w}]" if mag == 1 else f"{mag}[{w}]"
        chunks.append((sign, body))
    text = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text


def certificate_latex(cert: IdentityCertificate) -> str:
    """Render the certificate as the identity [A, a] = [-B, b]."""
    lhs = _element_latex(cert.A)
    rhs = _element_latex(-cert.B)
    return rf"\left[{lhs},\, a\right] = \left[{rhs},\, b\right]"
