#!/usr/bin/env python3
"""Hunt for counterexamples to the p >= 5 vanishing conjectures.

Scans every symmetric group up to the bound: brute-force classifies the
p-vanishing cycle types, then checks them against the conjectured p-adic-type
characterization and the small-part sum bound.  Prints one summary line per
prime and exits nonzero if anything was found.  A clean run certifies the
scanned range only; it proves nothing beyond it.
"""

from __future__ import annotations

import argparse
import sys

from pvanish.vanishing import conjecture_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", default="5,7", help='comma list of primes >= 5, e.g. "5,7,11"')
    parser.add_argument("--max-n", type=int, default=14, help="inclusive size bound")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    primes = [int(tok) for tok in args.p.split(",") if tok.strip()]
    if any(p < 5 for p in primes):
        parser.error("conjecture scans apply to p >= 5")

    found = 0
    for p in primes:
        sweep = conjecture_sweep(
            p, range(args.max_n + 1), limit=args.max_n, workers=args.workers
        )
        print(sweep.summary())
        for item in sweep.counterexamples:
            found += 1
            print(f"  {item}")
        if not sweep.equivalence_consistent:
            found += 1
            print("  inconsistent: sum bound held but type classification failed")
    return 1 if found else 0


if __name__ == "__main__":
    sys.exit(main())
