#!/usr/bin/env python3
"""Print the Betti table of every ground-field catalog algebra."""

from bvcalc.bv import GeneratorD, generator_square
from bvcalc.catalog import CATALOG_NAMES, load_catalog
from bvcalc.homology import homology_dims, rinehart_complex


def main() -> int:
    print(f"{'algebra':26s} {'dims':16s} betti")
    for name in CATALOG_NAMES:
        loaded = load_catalog(name)
        alg = loaded.algebra
        if alg.m != 0:
            print(f"{name:26s} (polynomial base: skipped)")
            continue
        gen = GeneratorD(alg, loaded.right_connection())
        if not generator_square(alg, gen, trials=4).is_exact:
            print(f"{name:26s} (generator not exact: skipped)")
            continue
        complex_ = rinehart_complex(alg, gen)
        dims = " ".join(str(d) for d in complex_.dims)
        betti = " ".join(str(b) for b in homology_dims(complex_))
        print(f"{name:26s} {dims:16s} {betti}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
