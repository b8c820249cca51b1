"""Command line interface: check algebra files, compute homology, list the catalog.

Exit codes: 0 all checks pass (expected failures count as pass), 1 a
verification check failed, 2 input error (unreadable file, parse or
axiom failure, inapplicable request).
"""

from __future__ import annotations

import argparse
import sys

from .algfile import AlgebraFileError, load
from .bv import GeneratorD
from .catalog import CATALOG_NAMES, catalog_path, resolve
from .homology import homology_dims, rinehart_complex
from .suites import SUITE_NAMES, render_machine, render_text, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--trials", type=int, default=32,
                        help="trials per randomized identity")
    parser.add_argument("--degree-bound", type=int, default=3,
                        help="degree bound for random polynomial coefficients")
    parser.add_argument("--format", choices=("text", "machine"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bvcalc",
        description="Exact verification of Lie-Rinehart / Gerstenhaber / "
                    "generator correspondences over Q.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run verification suites on an algebra file")
    check.add_argument("file", help="algebra file path or catalog name")
    check.add_argument("--suite", action="append", choices=SUITE_NAMES,
                       help="run only this suite (repeatable)")
    _add_common(check)

    hom = sub.add_parser("homology", help="Betti numbers for a ground-field algebra")
    hom.add_argument("file", help="algebra file path or catalog name")
    _add_common(hom)

    cat = sub.add_parser("catalog", help="list the bundled algebras")
    cat.add_argument("--format", choices=("text", "machine"), default="text")
    return parser


def _load(arg: str):
    try:
        return load(resolve(arg))
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)
    except AlgebraFileError as exc:
        print(f"error: {arg}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _cmd_check(args) -> int:
    loaded = _load(args.file)
    suites = tuple(args.suite) if args.suite else None
    try:
        report = run_suite(loaded, suites=suites, seed=args.seed, trials=args.trials,
                           degree_bound=args.degree_bound)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    render = render_machine if args.format == "machine" else render_text
    sys.stdout.write(render(report))
    return EXIT_PASS if report.passed else EXIT_FAIL

def _cmd_homology(args) -> int:
    loaded = _load(args.file)
    alg = loaded.algebra
    gen = GeneratorD(alg, loaded.right_connection())
    try:
        complex_ = rinehart_complex(alg, gen, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    betti = homology_dims(complex_)
    if args.format == "machine":
        print(f"algebra={alg.name}")
        print("betti=" + ",".join(str(b) for b in betti))
    else:
        print(f"algebra {alg.name}: betti numbers " + " ".join(str(b) for b in betti))
    return EXIT_PASS


def _cmd_catalog(args) -> int:
    for name in CATALOG_NAMES:
        if args.format == "machine":
            print(f"name={name} path={catalog_path(name)}")
        else:
            print(f"{name:26s} {catalog_path(name)}")
    return EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"check": _cmd_check, "homology": _cmd_homology, "catalog": _cmd_catalog}
    return handlers[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
