#!/usr/bin/env python3
"""Cross-check the cycle-index isotypic computation against the n! projector.

Runs both routes for a range of tensor powers and a few input gradings, and
prints an agreement matrix.  The projector route enumerates all permutations,
so keep --n-max at desk scale.

Usage: python scripts/oracle_crosscheck.py [--n-max 6]
"""

import argparse
import sys
import time

from equitwist import (
    GradedDims,
    SubsetAlgebra,
    brute_force_isotypic,
    brute_force_tensor_isotypic,
    invariant_subalgebra,
    isotypic_dims,
)

INPUTS = {
    "sphere": GradedDims({0: 1, 2: 1}),
    "fat": GradedDims({0: 1, 2: 2}),
    "spread": GradedDims({0: 1, 2: 1, 4: 1}),
}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6)
    args = parser.parse_args(argv)

    failures = 0
    print(f"{'input':8} {'n':>2} {'character':9} {'cycle index':28} {'projector':28} verdict")
    for name, dims in INPUTS.items():
        for n in range(1, args.n_max + 1):
            for character in ("trivial", "sign"):
                start = time.monotonic()
                fast = isotypic_dims(dims, n, character)
                brute = brute_force_tensor_isotypic(dims, n, character)
                verdict = "ok" if fast == brute else "MISMATCH"
                failures += verdict != "ok"
                elapsed = time.monotonic() - start
                print(f"{name:8} {n:>2} {character:9} {str(fast):28} {str(brute):28} "
                      f"{verdict} ({elapsed:.2f}s)")

    print("\nsubset-algebra route (third, transposition-kernel based):")
    for n in range(1, args.n_max + 1):
        alg = SubsetAlgebra(n)
        piece_triv = invariant_subalgebra(alg, "trivial").dims
        piece_sign = invariant_subalgebra(alg, "sign").dims
        proj_triv = brute_force_isotypic(alg, "trivial")
        proj_sign = brute_force_isotypic(alg, "sign")
        ok = piece_triv == proj_triv and piece_sign == proj_sign
        failures += not ok
        print(f"  n={n}: trivial {piece_triv} sign {piece_sign} "
              f"{'ok' if ok else 'MISMATCH'}")

    print(f"\n{failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
