"""Exact modular arithmetic on odd moduli.

Primality, multiplicative orders, primitive roots and their lift to
prime powers, Euler-criterion residue classes, cyclotomic class
indexing, cyclic cosets, the unit-group splitting of Z_{p^n} and
Z_{pq}, and a baby-step/giant-step discrete log.

Residues are canonical representatives in 1..m-1 (0 is never a unit).
Everything is computed on plain Python ints, so intermediate products
cannot overflow; moduli up to 2^63 - 1 are accepted, although the
scan-style callers stay far below that.  All functions are pure and
safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class NotAUnit(ValueError):
    """Argument is not invertible modulo the given modulus."""


class InvalidModulus(ValueError):
    """Modulus violates a precondition (parity, primality, shape)."""


class NotPrimitiveRoot(ValueError):
    """Claimed generator does not generate the unit group."""


class NotInSubgroup(ValueError):
    """Element lies outside the cyclic subgroup being searched."""


class InverseUndefined(ValueError):
    """Residue reconstruction requested for non-coprime moduli."""


def mod_pow(base: int, exp: int, m: int) -> int:
    """Return base**exp reduced into 0..m-1."""
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")
    if exp < 0:
        raise ValueError(f"exponent must be non-negative, got {exp}")
    return pow(base, exp, m)


# Deterministic Miller-Rabin witnesses, valid for all n < 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_LIMIT_64 = 1 << 64


def is_prime(m: int) -> bool:
    """Deterministic primality test, exact for the full 64-bit range."""
    if m >= _LIMIT_64:
        raise ValueError(f"primality is only guaranteed below 2^64, got {m}")
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division, {prime: exponent}."""
    if m < 1:
        raise ValueError(f"cannot factor {m}")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    d = 5
    while d * d <= m:
        for p in (d, d + 2):
            while m % p == 0:
                factors[p] = factors.get(p, 0) + 1
                m //= p
        d += 6
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def euler_phi(m: int) -> int:
    """Count of units modulo m."""
    phi = 1
    for p, e in factorize(m).items():
        phi *= p ** (e - 1) * (p - 1)
    return phi


def multiplicative_order(x: int, m: int) -> int:
    """Least e >= 1 with x^e = 1 (mod m).

    The group order is factored and the exponent is descended through
    its divisors, so this stays cheap even when the order is large.
    """
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")
    x %= m
    if math.gcd(x, m) != 1:
        raise NotAUnit(f"{x} is not a unit mod {m}")
    order = euler_phi(m)
    for p in factorize(order):
        while order % p == 0 and pow(x, order // p, m) == 1:
            order //= p
    return order


def is_primitive_root(r: int, p: int) -> bool:
    """Whether r generates the full unit group of the odd prime p."""
    if not is_prime(p) or p == 2:
        raise InvalidModulus(f"{p} is not an odd prime")
    r %= p
    if r == 0:
        return False
    return all(pow(r, (p - 1) // f, p) != 1 for f in factorize(p - 1))


def find_primitive_root(p: int) -> int:
    """Smallest generator of Z_p^*, deterministic."""
    if not is_prime(p) or p == 2:
        raise InvalidModulus(f"{p} is not an odd prime")
    exponents = [(p - 1) // f for f in factorize(p - 1)]
    for r in range(2, p):
        if all(pow(r, e, p) != 1 for e in exponents):
            return r
    raise InvalidModulus(f"no primitive root found for {p}")  # pragma: no cover


def lift_primitive_root(r: int, p: int, n: int) -> int:
    """Adjust a primitive root of Z_p^* so it generates the units mod p^n.

    A root of Z_p^* already generates the unit group of every p^n
    unless r^(p-1) = 1 (mod p^2); in that single bad case r + p does.
    For n = 1 the root is returned unchanged.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    if not is_primitive_root(r, p):
        raise NotPrimitiveRoot(f"{r} does not generate the units mod {p}")
    if n == 1:
        return r
    if pow(r, p - 1, p * p) != 1:
        return r
    return r + p


class ResidueClass(Enum):
    QR = "QR"
    NQR = "NQR"


def euler_class(x: int, p: int) -> ResidueClass:
    """Quadratic residue class of x mod p by Euler's criterion."""
    if not is_prime(p) or p == 2:
        raise InvalidModulus(f"{p} is not an odd prime")
    x %= p
    if x == 0:
        raise NotAUnit(f"0 is not a unit mod {p}")
    if pow(x, (p - 1) // 2, p) == 1:
        return ResidueClass.QR
    return ResidueClass.NQR


def quadratic_residues(p: int) -> frozenset[int]:
    """The (p-1)/2 quadratic residues mod the odd prime p."""
    if not is_prime(p) or p == 2:
        raise InvalidModulus(f"{p} is not an odd prime")
    return frozenset(pow(i, 2, p) for i in range(1, (p - 1) // 2 + 1))


def discrete_log(x: int, r: int, m: int, order: int) -> int:
    """Exponent e in 0..order-1 with r^e = x (mod m).

    Baby-step/giant-step in O(sqrt(order)) time and memory; `order`
    must be the multiplicative order of r mod m and x must lie in the
    subgroup generated by r.
    """
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")
    x %= m
    r %= m
    if math.gcd(r, m) != 1:
        raise NotAUnit(f"{r} is not a unit mod {m}")
    if math.gcd(x, m) != 1:
        raise NotInSubgroup(f"{x} is not a unit mod {m}")
    step = math.isqrt(order - 1) + 1
    baby: dict[int, int] = {}
    v = 1
    for j in range(step):
        baby.setdefault(v, j)
        v = v * r % m
    giant = pow(r, -step, m)
    g = x
    for i in range(step):
        if g in baby:
            return (i * step + baby[g]) % order
        g = g * giant % m
    raise NotInSubgroup(f"{x} is not a power of {r} mod {m}")


@dataclass(frozen=True)
class CyclotomicStructure:
    """A prime p = 2^k * t + 1 (t odd > 1) with a chosen primitive root.

    The delta = 2^k cosets r^j * <r^delta> partition Z_p^*; the class
    index of a unit is its discrete log mod delta.
    """

    p: int
    k: int
    delta: int
    t: int
    root: int

    @classmethod
    def for_prime(cls, p: int, k: int, root: int | None = None) -> "CyclotomicStructure":
        if not is_prime(p) or p == 2:
            raise InvalidModulus(f"{p} is not an odd prime")
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        delta = 1 << k
        if (p - 1) % delta != 0:
            raise InvalidModulus(f"{delta} does not divide {p} - 1")
        t = (p - 1) // delta
        if t % 2 == 0:
            raise InvalidModulus(f"(p-1)/2^k = {t} is even; k is not the exact 2-adic valuation")
        if t <= 1:
            raise InvalidModulus(f"(p-1)/2^k must exceed 1, got {t}")
        if root is None:
            root = find_primitive_root(p)
        elif not is_primitive_root(root, p):
            raise NotPrimitiveRoot(f"{root} does not generate the units mod {p}")
        return cls(p=p, k=k, delta=delta, t=t, root=root)


def cyclotomic_index(x: int, cs: CyclotomicStructure) -> int:
    """Index j of the class r^j * <r^delta> containing x."""
    x %= cs.p
    if x == 0:
        raise NotAUnit(f"0 is not a unit mod {cs.p}")
    return discrete_log(x, cs.root, cs.p, cs.p - 1) % cs.delta


def cyclotomic_class(cs: CyclotomicStructure, j: int) -> frozenset[int]:
    """The j-th class r^j * <r^delta>, materialized."""
    if not 0 <= j < cs.delta:
        raise ValueError(f"class index must be in 0..{cs.delta - 1}, got {j}")
    return cyclic_coset(pow(cs.root, cs.delta, cs.p), pow(cs.root, j, cs.p), cs.p)


def cyclic_coset(g: int, shift: int, m: int) -> frozenset[int]:
    """The set {shift * g^e mod m : e >= 0}, without duplicates."""
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")
    g %= m
    shift %= m
    if math.gcd(g, m) != 1:
        raise NotAUnit(f"{g} is not a unit mod {m}")
    if math.gcd(shift, m) != 1:
        raise NotAUnit(f"{shift} is not a unit mod {m}")
    out = set()
    v = shift
    while v not in out:
        out.add(v)
        v = v * g % m
    return frozenset(out)


def _check_pq(p: int, q: int) -> None:
    if not is_prime(p) or p == 2 or not is_prime(q) or q == 2:
        raise InvalidModulus(f"({p}, {q}) are not odd primes")
    if p == q:
        raise InvalidModulus(f"primes must be distinct, got {p} twice")


def crt_map(x: int, p: int, q: int) -> tuple[int, int]:
    """Componentwise reduction of a residue mod pq to (mod p, mod q)."""
    _check_pq(p, q)
    return x % p, x % q


def crt_inverse(a: int, b: int, p: int, q: int) -> int:
    """The unique x mod pq with x = a (mod p) and x = b (mod q)."""
    _check_pq(p, q)
    if math.gcd(p, q) != 1:
        raise InverseUndefined(f"moduli {p} and {q} are not coprime")
    n = p * q
    return (a * q * pow(q, -1, p) + b * p * pow(p, -1, q)) % n


def crt_solve(a: int, m1: int, b: int, m2: int) -> tuple[int, int] | None:
    """Solve x = a (mod m1), x = b (mod m2) for arbitrary moduli.

    Returns (x, lcm(m1, m2)) or None when the congruences conflict.
    Unlike crt_inverse this tolerates non-coprime moduli; it is used
    to combine discrete-log exponents whose moduli share a factor.
    """
    g = math.gcd(m1, m2)
    if (b - a) % g != 0:
        return None
    l = m1 // g * m2
    step = (b - a) // g * pow(m1 // g, -1, m2 // g) % (m2 // g)
    return (a + m1 * step) % l, l


@dataclass(frozen=True)
class UnitStratum:
    """Residues mod p^n whose gcd with p^n is exactly p^level."""

    level: int
    elements: frozenset[int]


def unit_partition_ppow(p: int, n: int) -> list[UnitStratum]:
    """Split {1, .., p^n - 1} into the n strata p^i * (units mod p^(n-i))."""
    if not is_prime(p) or p == 2:
        raise InvalidModulus(f"{p} is not an odd prime")
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    strata = []
    for i in range(n):
        scale = p**i
        members = frozenset(scale * u for u in range(1, p ** (n - i)) if u % p)
        strata.append(UnitStratum(level=i, elements=members))
    return strata


def unit_partition_pq(p: int, q: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Split Z_pq^* into p*Z_q^*, q*Z_p^* and the units mod pq."""
    _check_pq(p, q)
    if p >= q:
        raise InvalidModulus(f"expected p < q, got ({p}, {q})")
    n = p * q
    p_mult = frozenset(p * x for x in range(1, q))
    q_mult = frozenset(q * x for x in range(1, p))
    units = frozenset(x for x in range(1, n) if x % p and x % q)
    return p_mult, q_mult, units


@dataclass(frozen=True)
class GroupContext:
    """Modulus together with its factor shape and a chosen generator.

    shape is one of "prime", "prime_power", "product"; factor_data is
    (p, n) for the first two and (p, q) for the product case.  The
    stored root generates Z_p^* / the units mod p^n / both Z_p^* and
    Z_q^* respectively.
    """

    modulus: int
    shape: str
    primitive_root: int
    factor_data: tuple[int, int]

    @classmethod
    def for_prime(cls, p: int) -> "GroupContext":
        return cls(p, "prime", find_primitive_root(p), (p, 1))

    @classmethod
    def for_prime_power(cls, p: int, n: int) -> "GroupContext":
        root = lift_primitive_root(find_primitive_root(p), p, n)
        return cls(p**n, "prime_power", root, (p, n))

    @classmethod
    def for_product(cls, p: int, q: int, root: int) -> "GroupContext":
        _check_pq(p, q)
        if not is_primitive_root(root, p) or not is_primitive_root(root, q):
            raise NotPrimitiveRoot(f"{root} is not primitive mod both {p} and {q}")
        return cls(p * q, "product", root, (p, q))
