#!/usr/bin/env python3
"""Scan flat top connections on the ground-field catalog algebras.

For m = 0 the flat connections on the top power are exactly the Lie
algebra characters (linear maps vanishing on brackets).  Each one gives
an exact generator and hence a twisted homology; this script enumerates
small integer characters and prints how the Betti numbers move.  On the
solvable dim-2 algebra, for instance, the homology drops to zero away
from the two special characters.
"""

import argparse
from itertools import product

from bvcalc.bv import GeneratorD
from bvcalc.catalog import CATALOG_NAMES, load_catalog
from bvcalc.connections import TopConnection, is_flat
from bvcalc.correspond import right_from_top
from bvcalc.homology import homology_dims, rinehart_complex
from bvcalc.poly import PolyElement


def scan(alg, bound):
    seen = {}
    for values in product(range(-bound, bound + 1), repeat=alg.n):
        gamma = TopConnection(tuple(PolyElement.const(0, v) for v in values))
        if not is_flat(alg, gamma):
            continue
        gen = GeneratorD(alg, right_from_top(alg, gamma))
        betti = homology_dims(rinehart_complex(alg, gen))
        seen.setdefault(betti, []).append(values)
    return seen


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=2,
                        help="scan integer characters with entries in [-bound, bound]")
    args = parser.parse_args()

    for name in CATALOG_NAMES:
        loaded = load_catalog(name)
        alg = loaded.algebra
        if alg.m != 0 or loaded.expect_nonflat:
            continue
        print(f"{name} (rank {alg.n}):")
        for betti, characters in sorted(scan(alg, args.bound).items()):
            label = ", ".join(str(c) for c in characters[:4])
            more = f" and {len(characters) - 4} more" if len(characters) > 4 else ""
            print(f"  betti {betti}: gamma in {{{label}}}{more}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
