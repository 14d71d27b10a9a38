#!/usr/bin/env python3
"""Sweep strong-Skolem existence over a range of admissible moduli.

For every odd n = 1, 3 (mod 8) in the range, run the exhaustive
backtracking search with a per-modulus wall-clock budget and report
found / nonexistent / timed-out, so the three outcomes are never
conflated.

Usage: python3 scripts/strong_skolem_sweep.py --start 11 --stop 57 --timeout 60
"""

import argparse
import time

from skolem_starters import classify, exhaustive_skolem_search, SearchTimeout


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--start", type=int, default=11)
    parser.add_argument("--stop", type=int, default=57)
    parser.add_argument("--timeout", type=float, default=60.0)
    args = parser.parse_args()

    for n in range(args.start, args.stop + 1):
        if n % 2 == 0 or n % 8 not in (1, 3):
            continue
        begin = time.perf_counter()
        try:
            found = exhaustive_skolem_search(n, require_strong=True, timeout=args.timeout)
        except SearchTimeout:
            print(f"n={n:3d}  TIMEOUT after {args.timeout} s (existence unresolved)")
            continue
        elapsed = time.perf_counter() - begin
        if not found:
            print(f"n={n:3d}  nonexistent (search exhausted in {elapsed:.2f} s)")
            continue
        s = found[0]
        cls = classify(s)
        verified = cls.is_starter and cls.is_strong and cls.is_skolem
        pairs = " ".join(f"({p.lo},{p.hi})" for p in sorted(s.pairs, key=lambda p: p.hi - p.lo))
        print(f"n={n:3d}  found in {elapsed:6.2f} s  re-verified={verified}  {pairs}")


if __name__ == "__main__":
    main()
