"""``foliatlas`` command line.

Exit codes: 0 success, 1 input error, 2 undocumented mismatch against the
published values (``verify-paper`` only).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import classify_q3, moduli
from .errors import FoliatlasError
from .foliations import (
    SOLVE,
    FoliationSpec,
    conormal_chern,
    conormal_chern_whitney,
    curve_from_conormal,
    mu_invariant,
    normal_chern,
    singular_points_count,
    verify_c3_identity,
)
from .report import ReportDocument
from .reproduce import golden_document, run_golden, sweep_max
from .stability import bogomolov_max_curve_degree, check_conormal_stability, check_generic_normal_stability
from .varieties import resolve_variety

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_curve(text: str) -> tuple[int, object]:
    try:
        deg_text, chi_text = (part.strip() for part in text.split(","))
        deg = int(deg_text)
        chi = SOLVE if chi_text == "?" else int(chi_text)
    except ValueError:
        raise InputError(f"curve must look like DEG,CHI or DEG,?, got {text!r}") from None
    return deg, chi


def parse_k_range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..")
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise InputError(f"k range must look like A..B, got {text!r}") from None
    if lo > hi:
        raise InputError(f"empty k range {text!r}")
    return range(lo, hi + 1)


def _sheaf(F) -> dict:
    a1, a2, a3 = F.chern_numbers
    return {"rank": F.rank, "c1_H": a1, "c2_l": a2, "c3_p": a3}


def _load_spec(args) -> FoliationSpec:
    if args.spec:
        with open(args.spec, encoding="utf-8") as fh:
            doc = json.load(fh)
        return FoliationSpec.from_dict(doc, check=False)
    if args.variety is None or args.degree is None:
        raise InputError("--variety and --degree are required (or give --spec)")
    X = resolve_variety(args.variety)
    curves = [parse_curve(c) for c in args.curve or []]
    if args.points is None:
        points = SOLVE if not curves else 0
    else:
        points = SOLVE if args.points == "?" else _int(args.points, "--points")
    return FoliationSpec.build(X, args.degree, points, curves, check=False)


def _int(text: str, flag: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{flag} expects an integer or ?, got {text!r}") from None


def cmd_invariants(args) -> ReportDocument:
    spec = _load_spec(args)
    X, r = spec.X, spec.r
    identity = verify_c3_identity(spec)
    results = {
        "singular_length": singular_points_count(X, r),
        "normal": _sheaf(normal_chern(X, r)),
        "conormal": _sheaf(conormal_chern(spec)),
        "conormal_whitney": _sheaf(conormal_chern_whitney(spec)),
        "mu": [mu_invariant(X, r, c) for c in spec.curves],
        "c3_identity": {"lhs": identity.lhs, "rhs": identity.rhs, "holds": identity.holds},
        "lci": spec.is_lci,
    }
    if spec.is_lci and spec.curves:
        back = curve_from_conormal(X, r, conormal_chern(spec).c2)
        results["curve_from_conormal"] = {"deg": back.deg, "chi": back.chi, "genus": back.genus}
    inputs = {
        "variety": X.name,
        "degree": r,
        "isolated_length": spec.h0U,
        "curves": [{"deg": c.deg, "chi": c.chi} for c in spec.curves],
    }
    return ReportDocument("invariants", inputs, results)


def cmd_stability(args) -> ReportDocument:
    X = resolve_variety(args.variety)
    if args.degree is None:
        raise InputError("--degree is required")
    which = [name for name, on in (("generic", args.generic), ("conormal", args.conormal)) if on]
    which = which or ["generic", "conormal"]
    results = {}
    if "generic" in which:
        results["generic_normal"] = check_generic_normal_stability(X, args.degree).as_dict()
    if "conormal" in which:
        results["conormal"] = check_conormal_stability(X, args.degree).as_dict()
        results["bogomolov_max_curve_degree"] = bogomolov_max_curve_degree(X, args.degree)
    return ReportDocument("stability", {"variety": X.name, "degree": args.degree}, results)


def cmd_moduli(args) -> str:
    X = resolve_variety(args.variety)
    if not X.is_builtin:
        raise InputError("moduli tables exist only for the built-in threefolds p3 and q3")
    parity = moduli.Parity(args.parity)
    if args.k:
        ks = parse_k_range(args.k)
    else:
        k_min = 1 if (X.builtin_key, parity) == ("P3", moduli.Parity.ODD) else 0
        ks = range(k_min, sweep_max() + 1)
    records = moduli.families(X.builtin_key, parity, ks)
    fmt = "json" if args.json else args.format
    return moduli.RENDERERS[fmt](records)


def cmd_classify(args) -> str:
    fmt = "json" if args.json else args.format
    if fmt == "json":
        return classify_q3.report_json()
    if fmt == "md":
        return classify_q3.report_markdown()
    raise InputError("classify supports --format json or md")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="foliatlas", description="Invariants of foliations by curves on P3 and Q3.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def formats(p, choices=("json", "md"), default="md"):
        p.add_argument("--format", choices=choices, default=default)
        p.add_argument("--json", action="store_true", help="shorthand for --format json")

    p = sub.add_parser("invariants", help="Chern classes and the singular-scheme balance")
    p.add_argument("--variety", help="p3, q3 or a JSON model file")
    p.add_argument("--degree", type=int)
    p.add_argument("--curve", action="append", metavar="DEG,CHI",
                   help="a connected component of the singular curve; CHI may be ? once")
    p.add_argument("--points", metavar="N",
                   help="length of the isolated part; ? to solve (default: solved when no curves, else 0)")
    p.add_argument("--spec", metavar="FILE", help="JSON foliation document instead of the flags above")
    formats(p)

    p = sub.add_parser("stability", help="sufficient stability criteria")
    p.add_argument("--variety", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--generic", action="store_true", help="normal sheaf of a generic foliation")
    p.add_argument("--conormal", action="store_true", help="conormal sheaf")
    formats(p)

    p = sub.add_parser("moduli", help="moduli component tables")
    p.add_argument("--variety", required=True)
    p.add_argument("--parity", choices=("odd", "even"), required=True)
    p.add_argument("--k", metavar="A..B", help="k range (default from FOLIATLAS_SWEEP_MAX)")
    formats(p, ("csv", "json", "md"), "csv")

    p = sub.add_parser("classify", help="LCI foliations of degree 0 and 1 on Q3")
    formats(p)

    p = sub.add_parser("verify-paper", help="recompute every published value")
    formats(p)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "verify-paper":
            result = run_golden()
            out = golden_document(result)
            code = result.exit_code
        else:
            handler = {
                "invariants": cmd_invariants,
                "stability": cmd_stability,
                "moduli": cmd_moduli,
                "classify": cmd_classify,
            }[args.command]
            out = handler(args)
    except (InputError, FoliatlasError, ValueError, OSError, KeyError) as exc:
        print(f"foliatlas {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(out, ReportDocument):
        out = out.to_json() if args.json or args.format == "json" else out.to_markdown()
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
