"""Matrix-evaluation oracle for identity certificates.

Substituting concrete integer matrices for the letters turns any bracket
expression into an exact matrix (brackets become XY - YX).  A correct
certificate must evaluate to the zero matrix under every assignment, so a
single nonzero evaluation disproves it; passing trials are supporting
evidence only, never a proof, and the reports say so.

All randomness is drawn from explicit seeds and every assignment records
the seed that produced it, so counterexamples replay exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import LieElement, as_expr
from .kernels import IdentityCertificate
from .words import BracketTree, Leaf, lyndon_bracket

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MatrixAssignment:
    """Concrete d x d integer matrices for the letters a and b."""

    dim: int
    a_matrix: Matrix
    b_matrix: Matrix
    seed: int | None = None


def random_assignment(dim: int, seed: int, low: int = -3, high: int = 3) -> MatrixAssignment:
    """Deterministic assignment with entries uniform in [low, high]."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    rng = random.Random(seed)

    def draw() -> Matrix:
        return tuple(tuple(rng.randint(low, high) for _ in range(dim)) for _ in range(dim))

    return MatrixAssignment(dim, draw(), draw(), seed=seed)


def _zero(dim: int) -> list[list[int]]:
    return [[0] * dim for _ in range(dim)]


def _mul(x, y, dim: int, modulus: int | None):
    out = _zero(dim)
    for i in range(dim):
        xi = x[i]
        oi = out[i]
        for k in range(dim):
            c = xi[k]
            if c:
                yk = y[k]
                for j in range(dim):
                    oi[j] += c * yk[j]
        if modulus:
            out[i] = [v % modulus for v in oi]
    return out


def _commutator(x, y, dim: int, modulus: int | None):
    xy = _mul(x, y, dim, modulus)
    yx = _mul(y, x, dim, modulus)
    out = [[xy[i][j] - yx[i][j] for j in range(dim)] for i in range(dim)]
    if modulus:
        out = [[v % modulus for v in row] for row in out]
    return out


def _add_scaled(acc, mat, c: int, dim: int) -> None:
    for i in range(dim):
        ai = acc[i]
        mi = mat[i]
        for j in range(dim):
            ai[j] += c * mi[j]


def _eval_tree(tree: BracketTree, assignment: MatrixAssignment, modulus, cache):
    cached = cache.get(tree)
    if cached is not None:
        return cached
    if isinstance(tree, Leaf):
        value = assignment.a_matrix if tree.letter == "a" else assignment.b_matrix
        value = [list(row) for row in value]
        if modulus:
            value = [[v % modulus for v in row] for row in value]
    else:
        left = _eval_tree(tree.left, assignment, modulus, cache)
        right = _eval_tree(tree.right, assignment, modulus, cache)
        value = _commutator(left, right, assignment.dim, modulus)
    cache[tree] = value
    return value


def evaluate_expr(expr, assignment: MatrixAssignment, modulus: int | None = None) -> Matrix:
    """Evaluate a bracket expression to an exact integer matrix."""
    expr = as_expr(expr)
    dim = assignment.dim
    acc = _zero(dim)
    cache: dict = {}
    for tree, c in expr.terms.items():
        _add_scaled(acc, _eval_tree(tree, assignment, modulus, cache), c, dim)
    if modulus:
        acc = [[v % modulus for v in row] for row in acc]
    return tuple(tuple(row) for row in acc)


def evaluate_element(x: LieElement, assignment: MatrixAssignment, modulus: int | None = None,
                     _cache: dict | None = None) -> Matrix:
    """Evaluate basis coordinates through the standard bracketing."""
    dim = assignment.dim
    acc = _zero(dim)
    cache = {} if _cache is None else _cache
    for word, c in x.coeffs.items():
        _add_scaled(acc, _eval_tree(lyndon_bracket(word), assignment, modulus, cache), c, dim)
    if modulus:
        acc = [[v % modulus for v in row] for row in acc]
    return tuple(tuple(row) for row in acc)


def evaluate_certificate(cert: IdentityCertificate, assignment: MatrixAssignment,
                         modulus: int | None = None) -> Matrix:
    """The matrix value of [A, a] + [B, b] under the assignment."""
    dim = assignment.dim
    cache: dict = {}
    value_a = evaluate_element(cert.A, assignment, modulus, cache)
    value_b = evaluate_element(cert.B, assignment, modulus, cache)
    comm_a = _commutator(value_a, [list(r) for r in assignment.a_matrix], dim, modulus)
    comm_b = _commutator(value_b, [list(r) for r in assignment.b_matrix], dim, modulus)
    out = [[comm_a[i][j] + comm_b[i][j] for j in range(dim)] for i in range(dim)]
    if modulus:
        out = [[v % modulus for v in row] for row in out]
    return tuple(tuple(row) for row in out)


def _is_zero_matrix(mat: Matrix) -> bool:
    return all(v == 0 for row in mat for v in row)


@dataclass(frozen=True)
class OracleReport:
    """Outcome of a batch of evaluation trials for one certificate."""

    certificate: str
    dim: int
    trials: int
    seed: int
    modulus: int | None
    verdict: str  # "pass" or "fail"
    failed_trial: int | None
    counterexample: MatrixAssignment | None
    note: str

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        data = {
            "certificate": self.certificate,
            "dim": self.dim,
            "trials": self.trials,
            "seed": self.seed,
            "modulus": self.modulus,
            "verdict": self.verdict,
            "failed_trial": self.failed_trial,
            "note": self.note,
        }
        if self.counterexample is not None:
            data["counterexample"] = {
                "seed": self.counterexample.seed,
                "a_matrix": [list(r) for r in self.counterexample.a_matrix],
                "b_matrix": [list(r) for r in self.counterexample.b_matrix],
            }
        else:
            data["counterexample"] = None
        return data


def _trial_seed(seed: int, trial: int) -> int:
    return (seed << 20) ^ trial


def _certificate_label(cert: IdentityCertificate) -> str:
    return f"({cert.k},{cert.l}):{cert.source}"


def oracle_check(cert: IdentityCertificate, trials: int = 50, dim: int = 4,
                 seed: int = 0, modulus: int | None = None) -> OracleReport:
    """Run evaluation trials in order and report the first counterexample.

    A "fail" verdict is a sound disproof of the certificate; a "pass"
    verdict only says no counterexample appeared among the trials.
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    note = "passing trials are evidence, not proof"
    if modulus:
        note += f"; evaluated modulo {modulus}, which can mask nonzero integer values"
    failed_trial = None
    counterexample = None
    for trial in range(trials):
        assignment = random_assignment(dim, _trial_seed(seed, trial))
        value = evaluate_certificate(cert, assignment, modulus)
        if not _is_zero_matrix(value):
            failed_trial = trial
            counterexample = assignment
            break
    return OracleReport(
        certificate=_certificate_label(cert),
        dim=dim,
        trials=trials,
        seed=seed,
        modulus=modulus,
        verdict="pass" if failed_trial is None else "fail",
        failed_trial=failed_trial,
        counterexample=counterexample,
        note=note,
    )
