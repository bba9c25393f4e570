"""Command-line interface.

Every subcommand reads and writes integers as decimal strings of
unbounded size.  Exit codes separate four outcomes: 0 success or
confirmed, 1 refuted or invalid certificate, 2 usage error, 3
inconclusive (a bounded search or budget ran out, which is reported,
never dressed up as an answer).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .bruteforce import PackingVerdict, verify_sector_packing
from .classifier import (
    CantorMatch,
    Certificate,
    Collision,
    Gap,
    ModularGap,
    StructuralFail,
    classify,
    refute_linear,
    search_quadratics,
)
from .errors import (
    BudgetExhausted,
    FrontierNotClosed,
    PackpolyError,
    SearchExhausted,
)
from .numtheory import nonresidue_prime
from .pairing import (
    cantor1,
    cantor1_inverse,
    cantor2,
    cantor2_inverse,
    pack_m,
    unpack_m,
)
from .quadratic import QuadPoly2, region_counts
from .sector import SectorSpec, sector_evaluate, sector_unpack
from .serialize import document_to_json, document_from_json, make_document, verify_document

_INCONCLUSIVE = (BudgetExhausted, SearchExhausted, FrontierNotClosed)


def _human_certificate(cert: Certificate) -> str:
    """Render a certificate; the first line is always the variant token."""
    if isinstance(cert, CantorMatch):
        return f"IsCantor{cert.variant}"
    if isinstance(cert, Collision):
        return (
            "Collision\n"
            f"  points {tuple(cert.p1)} and {tuple(cert.p2)} "
            f"share the value {cert.value}"
        )
    if isinstance(cert, Gap):
        return (
            "Gap\n"
            f"  value {cert.value} is attained nowhere: the box "
            f"[0, {cert.box_bound}]^2 misses it and growth beyond the box "
            "provably exceeds it"
        )
    if isinstance(cert, ModularGap):
        w = cert.witness
        return (
            "ModularGap\n"
            f"  no value is congruent to {cert.s} + {w.p} modulo {w.p}^2\n"
            f"  (p = {w.p} is a non-residue witness for D = {w.D}, "
            f"found above {abs(w.ell)})"
        )
    if isinstance(cert, StructuralFail):
        lines = ["StructuralFail"]
        for chk in cert.failures:
            lines.append(f"  {chk.name}: {chk.identity}")
        return "\n".join(lines)
    raise TypeError(f"unsupported certificate type {type(cert).__name__}")


# ---------------------------------------------------------------------------
# handlers


def _cmd_pack(args: argparse.Namespace) -> int:
    coords = [int(tok) for tok in args.coords]
    if len(coords) != args.dim:
        print(
            f"error: expected {args.dim} coordinates, got {len(coords)}",
            file=sys.stderr,
        )
        return 2
    print(pack_m(coords))
    return 0


def _cmd_unpack(args: argparse.Namespace) -> int:
    coords = unpack_m(int(args.n), args.dim)
    print(" ".join(str(v) for v in coords))
    return 0


def _cmd_pack2(args: argparse.Namespace) -> int:
    fn = cantor1 if args.variant == "c1" else cantor2
    print(fn(int(args.x), int(args.y)))
    return 0


def _cmd_unpack2(args: argparse.Namespace) -> int:
    fn = cantor1_inverse if args.variant == "c1" else cantor2_inverse
    x, y = fn(int(args.n))
    print(f"{x} {y}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    F = QuadPoly2(*(int(tok) for tok in args.coefficients))
    cert = classify(F)
    if args.json:
        print(document_to_json(F, cert))
    else:
        print(_human_certificate(cert))
    return 0 if isinstance(cert, CantorMatch) else 1


def _cmd_verify_cert(args: argparse.Namespace) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
            return 2
    try:
        subject, cert = document_from_json(text)
    except ValueError as exc:
        print(f"invalid: {exc}")
        return 1
    if verify_document(subject, cert):
        print("valid")
        return 0
    print("invalid: certificate does not hold for its subject")
    return 1


def _cmd_refute_linear(args: argparse.Namespace) -> int:
    numbers = [int(tok) for tok in args.numbers]
    if len(numbers) < 3:
        print(
            "error: need at least two coefficients and a constant",
            file=sys.stderr,
        )
        return 2
    coeffs, constant = numbers[:-1], numbers[-1]
    cert = refute_linear(coeffs, constant, ell=args.ell)
    if args.json:
        from .classifier import LinearSubject

        subject = LinearSubject(
            coeffs=tuple(coeffs), constant=constant, ell=args.ell
        )
        print(document_to_json(subject, cert))
    else:
        print(_human_certificate(cert))
    return 1


def _cmd_sector_pack(args: argparse.Namespace) -> int:
    spec = SectorSpec(args.r, args.s)
    which = "F" if args.variant == "f" else "G"
    print(sector_evaluate(spec, which, int(args.x), int(args.y)))
    return 0


def _cmd_sector_unpack(args: argparse.Namespace) -> int:
    spec = SectorSpec(args.r, args.s)
    which = "F" if args.variant == "f" else "G"
    x, y = sector_unpack(spec, which, int(args.n))
    print(f"{x} {y}")
    return 0


def _describe_verdict(label: str, verdict: PackingVerdict) -> tuple[str, int]:
    if verdict.collision is not None:
        c = verdict.collision
        return (
            f"{label}: COLLISION {tuple(c.p1)} and {tuple(c.p2)} -> {c.value}",
            1,
        )
    if verdict.gaps:
        shown = ", ".join(str(g) for g in verdict.gaps[:10])
        return f"{label}: GAPS at {shown}", 1
    return (
        f"{label}: injective, every value in [0, {verdict.covered_upto}] "
        f"attained exactly once (frontier bound {verdict.frontier_bound_used})",
        0,
    )


def _cmd_sector_verify(args: argparse.Namespace) -> int:
    spec = SectorSpec(args.r, args.s)
    variants = {"f": ["F"], "g": ["G"], None: ["F", "G"]}[args.variant]
    worst = 0
    for which in variants:
        verdict = verify_sector_packing(spec, which, min_points=args.points)
        line, code = _describe_verdict(which, verdict)
        print(line)
        worst = max(worst, code)
    return worst


def _cmd_search_quadratics(args: argparse.Namespace) -> int:
    results = search_quadratics(args.coeff_bound, args.box, args.values)
    if args.json:
        import json

        documents = [make_document(F, cert) for F, cert in results]
        print(json.dumps(documents, indent=2, sort_keys=True))
    else:
        for F, cert in results:
            coeffs = " ".join(str(v) for v in F.as_tuple())
            print(f"{coeffs}  IsCantor{cert.variant}")
    return 0


def _cmd_nonresidue_prime(args: argparse.Namespace) -> int:
    cert = nonresidue_prime(int(args.D), int(args.L))
    print(cert.p)
    return 0


def _cmd_region_counts(args: argparse.Namespace) -> int:
    counts = region_counts(args.m)
    for index, value in enumerate(counts.as_tuple(), start=1):
        print(f"N{index} {value}")
    print(f"total {counts.total}")
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="packpoly",
        description="Exact packing polynomials over lattice domains, "
        "with certificate-producing classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pack", help="pack m coordinates into one integer")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("coords", nargs="+")
    p.set_defaults(handler=_cmd_pack)

    p = sub.add_parser("unpack", help="invert pack for the given dimension")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("n")
    p.set_defaults(handler=_cmd_unpack)

    p = sub.add_parser("pack2", help="two-variable packing value")
    p.add_argument("--variant", choices=("c1", "c2"), default="c1")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(handler=_cmd_pack2)

    p = sub.add_parser("unpack2", help="invert the two-variable packing")
    p.add_argument("--variant", choices=("c1", "c2"), default="c1")
    p.add_argument("n")
    p.set_defaults(handler=_cmd_unpack2)

    p = sub.add_parser(
        "classify",
        help="decide a standard-form quadratic, emitting a certificate",
    )
    p.add_argument("coefficients", nargs=6, metavar=("N"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("verify-cert", help="re-check a certificate document")
    p.add_argument("file", help="path to a JSON document, or - for stdin")
    p.set_defaults(handler=_cmd_verify_cert)

    p = sub.add_parser(
        "refute-linear",
        help="collision certificate for a linear polynomial (a1 ... am c)",
    )
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("numbers", nargs="+")
    p.set_defaults(handler=_cmd_refute_linear)

    p = sub.add_parser("sector", help="rational-sector packing operations")
    sector_sub = p.add_subparsers(dest="sector_command", required=True)

    sp = sector_sub.add_parser("pack", help="evaluate a sector polynomial")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--variant", choices=("f", "g"), default="f")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.set_defaults(handler=_cmd_sector_pack)

    sp = sector_sub.add_parser("unpack", help="invert a sector polynomial")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--variant", choices=("f", "g"), default="f")
    sp.add_argument("n")
    sp.set_defaults(handler=_cmd_sector_unpack)

    sp = sector_sub.add_parser(
        "verify", help="brute-force packing check on an enumeration prefix"
    )
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--variant", choices=("f", "g"), default=None)
    sp.add_argument("--points", type=int, default=3000)
    sp.set_defaults(handler=_cmd_sector_verify)

    p = sub.add_parser(
        "search-quadratics",
        help="all packing quadratics within a coefficient bound",
    )
    p.add_argument("--coeff-bound", type=int, required=True)
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--values", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_search_quadratics)

    p = sub.add_parser(
        "nonresidue-prime",
        help="prime p above |L| with D a quadratic non-residue mod p",
    )
    p.add_argument("D")
    p.add_argument("L")
    p.set_defaults(handler=_cmd_nonresidue_prime)

    p = sub.add_parser("region-counts", help="lattice counts for the five regions")
    p.add_argument("m", type=int)
    p.set_defaults(handler=_cmd_region_counts)

    return parser


def cli_dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Run one CLI invocation and return its exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _INCONCLUSIVE as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 3
    except (PackpolyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    # Very large packed integers exceed the default conversion guard.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000)
    sys.exit(cli_dispatch(sys.argv[1:]))
