"""Command-line surface.

Subcommands: build, certify, verify, h0, validate, stabilize.  Exit codes
are a stable contract: 0 success, 1 verification failure, 2 input or kind
error, 3 inconclusive search.  The certify search can only certify
positive instances; when it stops it reports the bound it reached and
says "inconclusive" -- it never claims non-triviality.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from .certify import (AlgebraTrivialityCertificate, TrivialityCertificate,
                      certify_trivial_algebra, certify_trivial_group)
from .constructions import algebra_to_dgas, group_to_dgas
from .errors import DgaError, KindMismatch
from .files import load_dga, load_json, save_dga, save_json
from .parsing import parse_presentation
from .presentations import AlgebraPresentation, GroupPresentation
from .rings import ring_from_string

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INCONCLUSIVE = 3


def _color_enabled() -> bool:
    return os.environ.get("DGA_COLOR", "0") == "1"


def _read_presentation(path, ring):
    text = Path(path).read_text(encoding="utf-8")
    return parse_presentation(text, ring)


def cmd_build(args) -> int:
    ring = ring_from_string(args.ring)
    pres = _read_presentation(args.input, ring)
    if args.construction == "algebra":
        if not isinstance(pres, AlgebraPresentation):
            raise KindMismatch("the algebra construction needs an algebra presentation")
        dga_a, dga_b = algebra_to_dgas(pres)
    else:
        if not isinstance(pres, GroupPresentation):
            raise KindMismatch("the group construction needs a group presentation")
        dga_a, dga_b = group_to_dgas(pres, ring)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    color = _color_enabled()
    code = EXIT_OK
    for tag, dga in (("A", dga_a), ("B", dga_b)):
        report = dga.validate()
        print(f"validate {pres.name}_{tag}:")
        print(report.format(color=color))
        if not report.ok:
            code = EXIT_INPUT_ERROR
        path = out_dir / f"{pres.name}_{tag}.dga.json"
        save_dga(path, dga)
        print(f"wrote {path}")
    return code


def cmd_certify(args) -> int:
    ring = ring_from_string(args.ring)
    pres = _read_presentation(args.input, ring)
    deadline = time.monotonic() + args.time_budget
    is_group = isinstance(pres, GroupPresentation)
    budget_hit = False
    for bound in range(args.max_bound + 1):
        if time.monotonic() > deadline:
            budget_hit = True
            reached = bound - 1
            break
        if is_group:
            cert = certify_trivial_group(pres, ring, bound, jobs=args.jobs)
        else:
            cert = certify_trivial_algebra(pres, bound)
        if cert is not None:
            out = args.out or f"{pres.name}.cert.json"
            save_json(out, cert.to_data())
            print(f"certificate found at cofactor bound {bound}; wrote {out}")
            return EXIT_OK
        reached = bound
    if budget_hit:
        print(f"inconclusive: time budget exhausted after completing cofactor "
              f"bounds 0..{reached} (cap {args.max_bound}); "
              "no certificate found so far. This does not show non-triviality.")
    else:
        print(f"inconclusive: exhausted cofactor word-length bounds 0..{reached} "
              "without finding a certificate. This does not show non-triviality.")
    return EXIT_INCONCLUSIVE


def cmd_verify(args) -> int:
    from .certify import verify_algebra_certificate, verify_group_certificate
    data = load_json(args.certificate)
    dga_a = load_dga(args.dga_a)
    dga_b = load_dga(args.dga_b)
    kind = data.get("kind") if isinstance(data, dict) else None
    if kind == "group_triviality_certificate":
        cert = TrivialityCertificate.from_data(data)
        report = verify_group_certificate(cert, dga_a, dga_b)
    elif kind == "algebra_triviality_certificate":
        cert = AlgebraTrivialityCertificate.from_data(data)
        report = verify_algebra_certificate(cert, dga_a, dga_b)
    else:
        from .errors import MalformedCertificate
        raise MalformedCertificate(f"{args.certificate}: unknown certificate kind {kind!r}")
    print(report.format(color=_color_enabled()))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_h0(args) -> int:
    dga = load_dga(args.input)
    pres = dga.h0_presentation()
    print(pres.to_text())
    return EXIT_OK


def cmd_validate(args) -> int:
    dga = load_dga(args.input)
    report = dga.validate()
    print(report.format(color=_color_enabled()))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_stabilize(args) -> int:
    dga = load_dga(args.input)
    stabilized = dga.stabilize(args.degree)
    out = args.out or args.input
    save_dga(out, stabilized)
    added = stabilized.sig.names()[-2:]
    print(f"added generators {added[0]} (degree {args.degree + 1}) and "
          f"{added[1]} (degree {args.degree}); wrote {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dgalab",
        description="Exact workbench for semifree noncommutative DGAs: "
                    "compile presentations into DGA pairs, search for "
                    "triviality certificates, verify them independently.")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="compile a presentation into a DGA pair")
    build.add_argument("input", help="presentation file")
    build.add_argument("--construction", choices=("algebra", "group"), required=True,
                       help="which construction to run; must match the presentation kind")
    build.add_argument("--ring", default="zmod:2", help="int | rat | zmod:<n> (default zmod:2)")
    build.add_argument("--out", default=".", help="output directory")
    build.set_defaults(func=cmd_build)

    certify = sub.add_parser("certify", help="search for a triviality certificate")
    certify.add_argument("input", help="presentation file")
    certify.add_argument("--ring", default="zmod:2", help="int | rat | zmod:<n> (default zmod:2)")
    certify.add_argument("--max-bound", type=int, default=4,
                         help="cap on the cofactor word length (default 4)")
    certify.add_argument("--time-budget", type=float, default=60.0,
                         help="wall-clock budget in seconds (default 60)")
    certify.add_argument("--jobs", type=int, default=1,
                         help="parallel membership searches (deterministic merge)")
    certify.add_argument("--out", default=None, help="certificate output path")
    certify.set_defaults(func=cmd_certify)

    verify = sub.add_parser("verify", help="re-verify a certificate against DGA files")
    verify.add_argument("certificate")
    verify.add_argument("dga_a")
    verify.add_argument("dga_b")
    verify.set_defaults(func=cmd_verify)

    h0 = sub.add_parser("h0", help="print the degree-0 homology presentation")
    h0.add_argument("input", help="DGA file")
    h0.set_defaults(func=cmd_h0)

    validate = sub.add_parser("validate", help="check degree -1 homogeneity and d^2 = 0")
    validate.add_argument("input", help="DGA file")
    validate.set_defaults(func=cmd_validate)

    stabilize = sub.add_parser("stabilize", help="adjoin a cancelling generator pair")
    stabilize.add_argument("input", help="DGA file")
    stabilize.add_argument("-k", "--degree", type=int, default=0,
                           help="degree of the new cycle generator (default 0)")
    stabilize.add_argument("--out", default=None, help="output path (default: rewrite in place)")
    stabilize.set_defaults(func=cmd_stabilize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KindMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except DgaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
