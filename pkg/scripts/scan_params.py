#!/usr/bin/env python3
"""Scan for primes and prime pairs admissible for the doubling recipes.

Prints the admissible single primes (both congruence families) and the
admissible pairs up to a limit, with their certificates, then builds
each starter and reports its classification as a live cross-check.

Usage: python3 scripts/scan_params.py --limit 700 --k 3
"""

import argparse

from skolem_starters import (
    cyclotomic_starter,
    pq_starter,
    qr_starter,
    scan_cyclotomic_primes,
    scan_pq_pairs,
    scan_qr_primes,
)
from skolem_starters.constructions import CoverageFailure


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=300)
    parser.add_argument("--k", type=int, default=3)
    args = parser.parse_args()

    print(f"== primes p = 3 (mod 8) up to {args.limit} ==")
    for hit in scan_qr_primes(args.limit).hits:
        p = hit.params["p"]
        s = qr_starter(p, 2)
        print(f"  p={p:5d} ord2={hit.certificates['ord2']:5d} "
              f"pairs={len(s.pairs):5d} all_four={s.classification.all_four}")

    print(f"== primes p = 2^{args.k} t + 1 with 2 in the half-shift class ==")
    for hit in scan_cyclotomic_primes(args.k, args.limit).hits:
        p = hit.params["p"]
        s = cyclotomic_starter(p, args.k)
        print(f"  p={p:5d} t={hit.certificates['t']:4d} root={hit.certificates['root']:2d} "
              f"ord2={hit.certificates['ord2']:5d} pairs={len(s.pairs):5d} "
              f"all_four={s.classification.all_four}")

    print(f"== prime pairs (both = 3 mod 8) up to {args.limit} ==")
    for hit in scan_pq_pairs(args.limit, mode="qr").hits:
        p, q = hit.params["p"], hit.params["q"]
        certs = hit.certificates
        try:
            s = pq_starter(p, q, 2)
            status = f"pairs={len(s.pairs)} all_four={s.classification.all_four}"
        except CoverageFailure:
            status = f"uncoverable (gcd(p-1, q-1) = {certs['gcd_p1_q1']})"
        print(f"  ({p}, {q}) root={certs['common_root']} {status}")


if __name__ == "__main__":
    main()
