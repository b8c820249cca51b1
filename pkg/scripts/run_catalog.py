#!/usr/bin/env python3
"""Run every verification suite over the whole bundled catalog.

CI-style driver: prints one report per algebra and exits nonzero if any
check fails (expected failures count as pass).
"""

import argparse
import sys

from bvcalc.catalog import CATALOG_NAMES, load_catalog
from bvcalc.suites import render_machine, render_text, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=32)
    parser.add_argument("--degree-bound", type=int, default=3)
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    args = parser.parse_args()

    render = render_machine if args.format == "machine" else render_text
    all_passed = True
    for name in CATALOG_NAMES:
        report = run_suite(load_catalog(name), seed=args.seed, trials=args.trials,
                           degree_bound=args.degree_bound)
        sys.stdout.write(render(report))
        sys.stdout.write("\n")
        all_passed = all_passed and report.passed
    print("catalog:", "all suites pass" if all_passed else "FAILURES above")
    return 0 if all_passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
