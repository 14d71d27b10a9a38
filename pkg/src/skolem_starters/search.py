"""Parameter scans and exhaustive brute-force oracles at small moduli.

The scanners find primes / prime pairs admissible for the doubling
constructions; the exhaustive searcher settles Skolem and strong
Skolem existence for a single small modulus by complete backtracking,
and enumerate_starters lists every starter outright as an independent
cross-check of both the verifiers and the searcher.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Any

from .modnt import (
    cyclotomic_index,
    CyclotomicStructure,
    InvalidModulus,
    is_prime,
    is_primitive_root,
    multiplicative_order,
)
from .starters import Starter, verify_starter


class NoCommonRoot(RuntimeError):
    """No shared primitive root found within the search bound."""


class SearchTimeout(TimeoutError):
    """Wall-clock budget exhausted before the search space was."""


class BoundExceeded(ValueError):
    """Requested modulus is beyond the exhaustive-enumeration guard."""


@dataclass(frozen=True)
class ScanHit:
    params: dict[str, int]
    certificates: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {"params": dict(self.params), "certificates": dict(self.certificates)}


@dataclass(frozen=True)
class ScanReport:
    kind: str
    bound: int
    hits: tuple[ScanHit, ...] = field(default=())

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "bound": self.bound,
            "hits": [h.to_dict() for h in self.hits],
        }


def _primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, limit + 1) if sieve[i]]


def scan_qr_primes(limit: int) -> ScanReport:
    """Primes p <= limit with p = 3 (mod 8), p != 3.

    Each hit is annotated with ord(2) mod p; for these primes 2 is a
    non-residue, which forces ord(2) = 2 (mod 4).
    """
    hits = []
    for p in _primes_upto(limit):
        if p % 8 != 3 or p == 3:
            continue
        ord2 = multiplicative_order(2, p)
        hits.append(ScanHit(params={"p": p}, certificates={"p_mod_8": 3, "ord2": ord2}))
    return ScanReport(kind="qr-primes", bound=limit, hits=tuple(hits))


def scan_cyclotomic_primes(k: int, limit: int) -> ScanReport:
    """Primes p = 2^k * t + 1 <= limit (t odd > 1) whose class index of 2
    is exactly 2^(k-1)."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    delta = 1 << k
    half = delta >> 1
    hits = []
    for p in _primes_upto(limit):
        if (p - 1) % delta != 0:
            continue
        t = (p - 1) // delta
        if t % 2 == 0 or t <= 1:
            continue
        cs = CyclotomicStructure.for_prime(p, k)
        index2 = cyclotomic_index(2, cs)
        if index2 != half:
            continue
        hits.append(
            ScanHit(
                params={"p": p, "k": k},
                certificates={
                    "t": t,
                    "root": cs.root,
                    "index2": index2,
                    "ord2": multiplicative_order(2, p),
                },
            )
        )
    return ScanReport(kind="cyclotomic-primes", bound=limit, hits=tuple(hits))


def find_common_primitive_root(p: int, q: int) -> int:
    """Smallest r >= 2 primitive mod both p and q; bounded by p*q tries."""
    if p == q or not is_prime(p) or not is_prime(q) or p == 2 or q == 2:
        raise InvalidModulus(f"({p}, {q}) must be distinct odd primes")
    for r in range(2, p * q + 1):
        if r % p == 0 or r % q == 0:
            continue
        if is_primitive_root(r, p) and is_primitive_root(r, q):
            return r
    raise NoCommonRoot(f"no common primitive root of {p} and {q} below {p * q}")


def scan_pq_pairs(limit: int, mode: str = "qr", k: int | None = None) -> ScanReport:
    """Prime pairs p < q <= limit admissible for the two-prime recipes.

    qr mode: both = 3 (mod 8) and != 3.  cyclotomic mode: both primes
    accepted by scan_cyclotomic_primes(k, limit).  Both modes require
    (p-1) to not divide (q-1); hits carry the smallest common
    primitive root (or None when the bounded search fails) and
    gcd(p-1, q-1), which the plain two-prime recipe needs to be 2.
    """
    if mode == "qr":
        base = [h.params["p"] for h in scan_qr_primes(limit).hits]
        kind = "pq-pairs"
    elif mode == "cyclotomic":
        if k is None:
            raise ValueError("cyclotomic mode needs k")
        base = [h.params["p"] for h in scan_cyclotomic_primes(k, limit).hits]
        kind = f"pq-pairs-cyclotomic-{k}"
    else:
        raise ValueError(f"unknown mode {mode!r}")
    hits = []
    for i, p in enumerate(base):
        for q in base[i + 1 :]:
            if (q - 1) % (p - 1) == 0:
                continue
            try:
                root: int | None = find_common_primitive_root(p, q)
            except NoCommonRoot:
                root = None
            params = {"p": p, "q": q}
            if mode == "cyclotomic":
                params["k"] = k
            hits.append(
                ScanHit(
                    params=params,
                    certificates={
                        "common_root": root,
                        "gcd_p1_q1": math.gcd(p - 1, q - 1),
                    },
                )
            )
    return ScanReport(kind=kind, bound=limit, hits=tuple(hits))


def exhaustive_skolem_search(
    n: int,
    *,
    require_strong: bool = False,
    find_all: bool = False,
    timeout: float | None = 60.0,
) -> list[Starter]:
    """Complete backtracking search for Skolem starters of Z_n.

    Differences are assigned largest-first (most constrained), the pair
    for difference i tried in ascending lower endpoint, so the result
    order is deterministic.  Pruning: endpoint reuse, plus sum
    collision / zero sum when require_strong.  An empty result means
    proven nonexistence; running out of wall clock raises
    SearchTimeout instead, so the two can never be confused.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got {n}")
    k = (n - 1) // 2
    deadline = None if timeout is None else time.monotonic() + timeout
    used = bytearray(n)
    sums_seen: set[int] = set()
    chosen: list[tuple[int, int]] = []
    solutions: list[Starter] = []
    nodes = 0

    def place(i: int) -> bool:
        nonlocal nodes
        if i == 0:
            solutions.append(Starter.from_pairs(n, chosen))
            return not find_all
        for a in range(1, n - i):
            b = a + i
            nodes += 1
            if nodes % 4096 == 0 and deadline is not None and time.monotonic() > deadline:
                raise SearchTimeout(f"search at modulus {n} exceeded {timeout} s")
            if used[a] or used[b]:
                continue
            if require_strong:
                t = (a + b) % n
                if t == 0 or t in sums_seen:
                    continue
                sums_seen.add(t)
            used[a] = used[b] = 1
            chosen.append((a, b))
            if place(i - 1):
                return True
            chosen.pop()
            used[a] = used[b] = 0
            if require_strong:
                sums_seen.discard((a + b) % n)
        return False

    place(k)
    return solutions


_ENUMERATION_BOUND = 15


def enumerate_starters(n: int) -> list[Starter]:
    """Every starter for Z_n by exhaustive pairing, n <= 15.

    Pairs off the smallest unused element against every partner whose
    difference class is still free; a completed pairing is a starter
    by construction, and each one is re-checked with verify_starter
    anyway so this stays an independent oracle.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got {n}")
    if n > _ENUMERATION_BOUND:
        raise BoundExceeded(f"enumeration is capped at n <= {_ENUMERATION_BOUND}, got {n}")
    k = (n - 1) // 2
    used = bytearray(n)
    class_used = bytearray(k + 1)
    current: list[tuple[int, int]] = []
    found: list[Starter] = []

    def rec(placed: int) -> None:
        if placed == k:
            cand = Starter.from_pairs(n, current)
            ok, _ = verify_starter(cand)
            if ok:
                found.append(cand)
            return
        a = 1
        while used[a]:
            a += 1
        used[a] = 1
        for b in range(a + 1, n):
            if used[b]:
                continue
            d = b - a
            cls = min(d, n - d)
            if class_used[cls]:
                continue
            class_used[cls] = 1
            used[b] = 1
            current.append((a, b))
            rec(placed + 1)
            current.pop()
            used[b] = 0
            class_used[cls] = 0
        used[a] = 0

    rec(0)
    return found
