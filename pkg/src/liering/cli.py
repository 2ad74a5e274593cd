"""Command-line front end.

Exit codes: 0 success, 1 a certificate that should verify does not,
2 usage or input errors.  JSON goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dims
from .algebra import normalize, parse_expr
from .families import FAMILY_BUILDERS
from .kernels import (
    certificate_from_dict,
    certificate_latex,
    certificate_to_dict,
    element_pairs,
    kernel_certificates,
    kernel_lattice,
    pair_matrix,
    verify_certificate,
)
from .oracle import oracle_check
from .words import bracket_string, lyndon_bracket, lyndon_words


def _emit_json(data, out=None) -> None:
    text = json.dumps(data, indent=2)
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _cmd_dims(args) -> int:
    if args.format == "json":
        data = {
            "total": [
                {"n": n, "dim_L": lie, "dim_kernel": ker}
                for n, lie, ker in dims.total_records(args.max_weight)
            ]
        }
        if args.bigraded:
            data["bigraded"] = [
                {"n": n, "k": k, "l": l, "dim_L": lie, "dim_kernel": ker}
                for n, k, l, lie, ker in dims.bigraded_records(args.max_weight)
            ]
        _emit_json(data)
    else:
        print(dims.format_tables(args.max_weight, bigraded=args.bigraded))
    return 0


def _cmd_basis(args) -> int:
    words = lyndon_words(args.k, args.l)
    if args.format == "json":
        _emit_json({"k": args.k, "l": args.l, "dim": len(words), "words": list(words)})
    elif args.format == "latex":
        for word in words:
            print(bracket_string(lyndon_bracket(word)))
    else:
        for word in words:
            print(word)
    return 0


def _cmd_theta(args) -> int:
    pm = pair_matrix(args.k, args.l)
    data = {
        "k": pm.k,
        "l": pm.l,
        "domain": [[word, letter] for word, letter in pm.domain],
        "codomain": list(pm.codomain),
        "matrix": pm.matrix.to_record(),
    }
    _emit_json(data, out=args.out)
    return 0


def _family_comparison(k: int, l: int):
    from .families import i2_certificate, i33_certificate
    from .kernels import certificate_vector
    from .zlinalg import canonical_lattice, lattice_equal

    if k == 2 and l >= 2 and l % 2 == 0:
        name, cert = "i2", i2_certificate(l)
    elif k == 3 and l in (3, 6):
        name, cert = "i33", i33_certificate(l // 3)
    else:
        return None
    lattice = kernel_lattice(k, l)
    family = canonical_lattice(lattice.ambient, [certificate_vector(cert)])
    return {"family": name, "lattice_equal": lattice_equal(lattice, family)}


def _cmd_kernel(args) -> int:
    lattice = kernel_lattice(args.k, args.l)
    data = {
        "k": args.k,
        "l": args.l,
        "ambient": lattice.ambient,
        "rank": lattice.rank,
        "basis": [[str(v) for v in vector] for vector in lattice.basis],
    }
    if args.certify:
        data["certificates"] = [certificate_to_dict(c) for c in kernel_certificates(args.k, args.l)]
        data["family_comparison"] = _family_comparison(args.k, args.l)
    _emit_json(data)
    return 0


def _cmd_family(args) -> int:
    builder = FAMILY_BUILDERS[args.name]
    if args.name == "i2":
        if args.m is None:
            raise ValueError("family i2 needs --m")
        cert = builder(args.m)
    else:
        if args.n is None:
            raise ValueError(f"family {args.name} needs --n")
        cert = builder(args.n)
    if args.format == "latex":
        print(certificate_latex(cert))
    else:
        _emit_json(certificate_to_dict(cert))
    return 0


def _cmd_verify(args) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        cert = certificate_from_dict(json.load(handle))
    verified = verify_certificate(cert)
    report = {"certificate": certificate_to_dict(cert), "verified": verified}
    if args.oracle:
        oracle = oracle_check(cert, trials=args.trials, dim=args.dim,
                              seed=args.seed, modulus=args.modulus)
        report["oracle"] = oracle.to_dict()
        if verified and not oracle.passed:
            verified = False
    _emit_json(report)
    return 0 if verified else 1


def _cmd_normalize(args) -> int:
    element = normalize(parse_expr(args.expr))
    _emit_json({
        "bidegree": list(element.bidegree) if element.bidegree else None,
        "terms": element_pairs(element),
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liering",
        description="Exact computations in the free Lie ring on two letters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="rank tables by weight and bidegree")
    p.add_argument("--max-weight", type=int, default=13)
    p.add_argument("--bigraded", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("basis", help="Lyndon basis words of a bidegree")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("theta", help="matrix of (A,B) -> [A,a]+[B,b] on a bidegree")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("kernel", help="kernel lattice of a bidegree")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--certify", action="store_true")
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("family", help="closed-form identity certificates")
    p.add_argument("name", choices=sorted(FAMILY_BUILDERS))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--format", choices=("json", "latex"), default="json")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("verify", help="re-verify a certificate JSON file")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--modulus", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("normalize", help="Lyndon-basis form of a bracket expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_normalize)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
