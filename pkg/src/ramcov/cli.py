"""Command line front end.

Subcommands::

    hj N Q                 resolution data of the cyclic quotient A_{N,Q}
    local X1 Y1 X2 Y2      classify the lattice subgroup with these generators
    invariants FILE        validate a cover document and run the invariant chain
    verify                 exhaustive property sweeps of the arithmetic core
    bs-bound D NB [H]      plane-model height bound on the natural log scale

Exit status: 0 on success, 1 on semantic failure (validation violations or
a property counterexample), 2 on usage, parse, or precondition errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import __version__
from .errors import EnumerationLimitError, InputFormatError, InvalidInputError
from .hj import SingularityType, resolve
from .invariants import (
    FibrationInputs,
    degree_linear_certificate,
    height_log_decimal,
    HEIGHT_LOG_PRECISION,
    invariant_report,
)
from .loader import canonical_document, load_cover_path
from .local_cover import LatticeSubgroup, canonical_basis, local_type
from .model import derived_euler_data, validate
from .report import ReportDocument, fmt_rational, parse_rational
from .verify import hj_sweep, lattice_sweep


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramcov",
        description="Exact invariants and degree bounds for branched covers of fibred surfaces.",
    )
    parser.add_argument("--version", action="version", version=f"ramcov {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_hj = sub.add_parser("hj", help="resolve a cyclic quotient singularity A_{n,q}")
    p_hj.add_argument("n", type=int)
    p_hj.add_argument("q", type=int)

    p_local = sub.add_parser("local", help="classify a finite-index subgroup of Z^2")
    p_local.add_argument("coords", type=int, nargs=4, metavar="COORD")

    p_inv = sub.add_parser("invariants", help="validate a cover document and compute invariants")
    p_inv.add_argument("file")
    p_inv.add_argument("--strict", action="store_true", help="also check per-sheet incidence (V4)")
    p_inv.add_argument(
        "--ev",
        nargs=5,
        type=int,
        metavar=("GF", "DHOR_F", "GC", "NDC", "NS"),
        help="fibration bound inputs: fibre genus, horizontal fibre degree, "
        "base genus, vertical base point count, singular fibre count "
        "(supplying them asserts the bound's hypotheses)",
    )
    p_inv.add_argument("--json", action="store_true", help="emit the machine-readable report")

    p_verify = sub.add_parser("verify", help="run the exhaustive property sweeps")
    p_verify.add_argument("--max-n", type=int, default=100, help="sweep quotient types up to this order")
    p_verify.add_argument("--max-index", type=int, default=30, help="sweep subgroups up to this index")

    p_bs = sub.add_parser("bs-bound", help="plane-model height bound, natural log scale")
    p_bs.add_argument("d", type=int, help="cover degree (>= 2)")
    p_bs.add_argument("nB", type=int, help="number of branch points (>= 1)")
    p_bs.add_argument("h", nargs="?", default="0", help="affine log height, as p/q (default 0)")

    return parser


def cmd_hj(args: argparse.Namespace) -> int:
    data = resolve(SingularityType(args.n, args.q))
    print(data.sing.label)
    print(f"chain: {list(data.chain.b)} (length {data.chain.length})")
    print("discrepancies: [" + ", ".join(fmt_rational(a) for a in data.a) + "]")
    print(f"correction: {fmt_rational(data.correction)}")
    print(f"du Val: {'yes' if data.sing.is_du_val else 'no'}")
    return 0


def cmd_local(args: argparse.Namespace) -> int:
    x1, y1, x2, y2 = args.coords
    gamma = LatticeSubgroup((x1, y1), (x2, y2))
    n_prime, q_prime, m2 = canonical_basis(gamma)
    lt = local_type(gamma)
    print(f"subgroup generated by ({x1}, {y1}) and ({x2}, {y2}): index {gamma.index}")
    print(f"canonical basis: ({n_prime}, 0), ({q_prime}, {m2})")
    print(f"n = {lt.n}  q = {lt.q}  m1 = {lt.m1}  m2 = {lt.m2}")
    print(f"d_y = {lt.d_y}  e1 = {lt.e1}  e2 = {lt.e2}")
    sing = lt.singularity()
    print(f"type: {'singular ' + sing.label if sing else 'smooth'}")
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    base, cover = load_cover_path(args.file)
    violations = tuple(validate(base, cover, strict=args.strict))
    fibration = None
    if args.ev is not None:
        gf, dhor, gc, ndc, ns = args.ev
        fibration = FibrationInputs(gF=gf, Dhor_dot_F=dhor, gC=gc, nDC=ndc, nS=ns)

    invariants = certificate = None
    error: Optional[str] = None
    try:
        invariants = invariant_report(base, cover)
        certificate = degree_linear_certificate(base, cover, fibration)
    except InvalidInputError as exc:
        error = str(exc)

    doc = ReportDocument(
        tool_version=__version__,
        strict=args.strict,
        input_echo=canonical_document(base, cover),
        violations=violations,
        derived_base=derived_euler_data(base),
        invariants=invariants,
        certificate=certificate,
        error=error,
    )
    sys.stdout.write(doc.to_json() if args.json else doc.to_text())
    return 0 if not violations else 1


def cmd_verify(args: argparse.Namespace) -> int:
    cap = None
    env_cap = os.environ.get("RAMCOV_MAX_ENUM")
    if env_cap is not None:
        try:
            cap = int(env_cap, 10)
        except ValueError:
            raise InvalidInputError(
                f"RAMCOV_MAX_ENUM must be an integer (got {env_cap!r})"
            ) from None

    results = [
        hj_sweep(args.max_n),
        lattice_sweep(args.max_index, cap=cap),
    ]
    status = 0
    for result in results:
        scope = (
            f"types up to n = {args.max_n}"
            if result.suite == "hj"
            else f"subgroups up to index {args.max_index}"
        )
        verdict = "ok" if result.ok else f"{len(result.failures)} failure(s)"
        print(f"{result.suite} sweep: checked {result.checked} {scope}: {verdict}")
        for failure in result.failures:
            status = 1
            print(f"  property {failure.prop} failed at {failure.witness}: {failure.message}")
    print("all properties hold" if status == 0 else "PROPERTY VIOLATIONS FOUND")
    return status


def cmd_bs_bound(args: argparse.Namespace) -> int:
    h = parse_rational(args.h)
    value = height_log_decimal(args.d, args.nB, h)
    coeff = 5 * args.d * args.d * args.nB + 12 * args.d
    base = args.d ** 3 * args.nB
    print("plane-model height bound (natural log scale)")
    print(f"  d = {args.d}  branch points = {args.nB}  height h = {fmt_rational(h)}")
    print(f"  exact form: log(h + 1) + {coeff} * log({base})")
    print(
        f"  value ~= {value} "
        f"[approximate: logarithms evaluated at {HEIGHT_LOG_PRECISION} significant digits]"
    )
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)

    handlers = {
        "hj": cmd_hj,
        "local": cmd_local,
        "invariants": cmd_invariants,
        "verify": cmd_verify,
        "bs-bound": cmd_bs_bound,
    }
    try:
        return handlers[args.command](args)
    except (InvalidInputError, InputFormatError, EnumerationLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
