"""Explicit constructions of strong Skolem (cardioidal) starters.

Every builder assembles doubling pairs {x, beta*x} (beta = 2 or the
inverse of 2) over an index set chosen so that the pair members and
the +- differences each sweep out the nonzero residues exactly once:

  horton_starter            Z_p,   x over the quadratic residues, any
                            non-residue multiplier (strong only)
  qr_starter                Z_p,   p = 3 (mod 8), multiplier 2 or 2^-1
  cyclotomic_starter        Z_p,   p = 2^k t + 1, x over the low half
                            of the cyclotomic classes
  prime_power_starter       Z_{p^n}, one family of pairs per unit
                            stratum p^i * (units mod p^(n-i))
  prime_power_cyclotomic_starter   the cyclotomic variant of the above
  pq_starter                Z_{pq}, three families: p * QR(q),
                            q * QR(p), and the units mod pq
  pq_cyclotomic_starter     the cyclotomic variant for p, q = 1 (mod 8)

Hypothesis checks happen first and raise HypothesisViolation; every
successful construction is then self-verified with all four verifiers
before it is returned, so an invalid object can never escape --
verification failure raises CoverageFailure with the witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .modnt import (
    crt_solve,
    cyclic_coset,
    cyclotomic_index,
    CyclotomicStructure,
    discrete_log,
    euler_class,
    GroupContext,
    is_prime,
    is_primitive_root,
    lift_primitive_root,
    NotInSubgroup,
    quadratic_residues,
    ResidueClass,
)
from .search import find_common_primitive_root
from .starters import classify, Starter

BETA_TWO = 2
BETA_TWO_INVERSE = "2inv"


class HypothesisViolation(ValueError):
    """Arguments fail the arithmetic hypotheses of the construction."""


class CoverageFailure(RuntimeError):
    """Assembled pair families do not partition the nonzero residues."""


@dataclass(frozen=True)
class Recipe:
    """Method name plus every parameter needed to reproduce a starter."""

    method: str
    p: int
    q: int | None = None
    n: int | None = None
    k: int | None = None
    beta: int | str | None = None
    lam: int | None = None
    root: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method,
            "p": self.p,
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "beta": self.beta,
            "lambda": self.lam,
            "root": self.root,
        }


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise HypothesisViolation(message)


def normalize_beta(beta: int | str) -> int | str:
    """Canonicalize a multiplier argument to 2, "2inv", or a residue."""
    if beta in (2, "2"):
        return BETA_TWO
    if beta in (BETA_TWO_INVERSE, "two_inverse", "2^-1"):
        return BETA_TWO_INVERSE
    if isinstance(beta, int):
        return beta
    if isinstance(beta, str) and beta.isdigit():
        return int(beta)
    raise ValueError(f"unrecognized beta {beta!r}")


def _beta_multiplier(beta: int | str, modulus: int) -> int:
    if beta == BETA_TWO_INVERSE:
        return pow(2, -1, modulus)
    return int(beta) % modulus


def _doubling_pairs(values: Iterable[int], mult: int, modulus: int) -> list[tuple[int, int]]:
    return [(v % modulus, v * mult % modulus) for v in values]


def _certify(s: Starter, recipe: Recipe, *, all_four: bool = True) -> Starter:
    """Attach recipe + fresh classification; reject invalid output."""
    cls = classify(s)
    required = cls.all_four if all_four else (cls.is_starter and cls.is_strong)
    if not required:
        raise CoverageFailure(
            f"{recipe.method} construction with {recipe.to_dict()} failed "
            f"self-verification: {cls.witnesses}"
        )
    return s.with_metadata(recipe=recipe, classification=cls)


def horton_starter(p: int, beta: int | str) -> Starter:
    """Strong starter {{x, beta*x} : x quadratic residue mod p}.

    Needs p = 3 (mod 4), p != 3, and a non-residue multiplier other
    than -1.  Strong and a starter always; Skolem / cardioidal only
    for the doubling multipliers, which qr_starter specializes to.
    """
    _require(is_prime(p), f"p = {p} is not prime")
    _require(p % 4 == 3, f"p = {p} must be 3 (mod 4)")
    _require(p != 3, "p = 3 is excluded")
    beta = normalize_beta(beta)
    beta_r = _beta_multiplier(beta, p)
    _require(beta_r % p != 0, "beta must be a unit")
    _require(euler_class(beta_r, p) is ResidueClass.NQR, f"beta = {beta_r} is a quadratic residue mod {p}")
    _require(beta_r != p - 1, "beta = -1 is excluded")
    pairs = _doubling_pairs(quadratic_residues(p), beta_r, p)
    recipe = Recipe(method="horton", p=p, beta=beta if beta == BETA_TWO_INVERSE else beta_r)
    return _certify(Starter.from_pairs(p, pairs), recipe, all_four=False)


def qr_starter(p: int, beta: int | str = BETA_TWO) -> Starter:
    """Strong Skolem starter {{x, 2x} : x quadratic residue mod p}.

    For p = 3 (mod 8), p != 3, the multiplier 2 (or its inverse) is a
    non-residue, the pairs are doubling pairs, and the result passes
    all four verifiers.  The 2inv variant equals the negation of the
    2 variant.
    """
    _require(is_prime(p), f"p = {p} is not prime")
    _require(p % 8 == 3, f"p = {p} must be 3 (mod 8)")
    _require(p != 3, "p = 3 is excluded")
    beta = normalize_beta(beta)
    _require(beta in (BETA_TWO, BETA_TWO_INVERSE), f"beta must be 2 or {BETA_TWO_INVERSE!r}")
    mult = _beta_multiplier(beta, p)
    pairs = _doubling_pairs(quadratic_residues(p), mult, p)
    recipe = Recipe(method="qr", p=p, beta=beta)
    return _certify(Starter.from_pairs(p, pairs), recipe)


def _half_class_union(cs: CyclotomicStructure) -> set[int]:
    """Union of the classes r^j <r^delta> for j = 0 .. 2^(k-1) - 1."""
    sub = cyclic_coset(pow(cs.root, cs.delta, cs.p), 1, cs.p)
    out: set[int] = set()
    for j in range(cs.delta >> 1):
        shift = pow(cs.root, j, cs.p)
        out.update(shift * s % cs.p for s in sub)
    return out


def cyclotomic_starter(p: int, k: int, beta: int | str = BETA_TWO) -> Starter:
    """Strong Skolem starter over the low half of the cyclotomic classes.

    For p = 2^k t + 1 (k >= 3, t odd > 1) whose class index of 2 is
    2^(k-1): pairs {x, 2x} with x ranging over the union of classes
    0 .. 2^(k-1) - 1.  Doubling then lands in the upper half, so the
    pair members sweep all of Z_p^*, and the index of -1 is 2^(k-1)
    automatically (t odd), which makes the differences sweep it too.
    """
    _require(is_prime(p), f"p = {p} is not prime")
    _require(k >= 3, f"k must be >= 3, got {k}")
    delta = 1 << k
    _require((p - 1) % delta == 0, f"2^{k} does not divide {p} - 1")
    t = (p - 1) // delta
    _require(t % 2 == 1, f"(p-1)/2^{k} = {t} must be odd")
    _require(t > 1, f"(p-1)/2^{k} must exceed 1")
    beta = normalize_beta(beta)
    _require(beta in (BETA_TWO, BETA_TWO_INVERSE), f"beta must be 2 or {BETA_TWO_INVERSE!r}")
    cs = CyclotomicStructure.for_prime(p, k)
    index2 = cyclotomic_index(2, cs)
    _require(
        index2 == delta >> 1,
        f"class index of 2 mod {p} is {index2}, need {delta >> 1}",
    )
    mult = _beta_multiplier(beta, p)
    pairs = _doubling_pairs(_half_class_union(cs), mult, p)
    recipe = Recipe(method="cyclotomic", p=p, k=k, beta=beta, root=cs.root)
    return _certify(Starter.from_pairs(p, pairs), recipe)


def _stratum_pairs(
    p: int,
    n: int,
    mult: int,
    base_values: Callable[[int], Iterable[int]],
) -> list[tuple[int, int]]:
    """Pairs {p^i x, mult * p^i x} with x over base_values(p^(n-i))."""
    modulus = p**n
    pairs: list[tuple[int, int]] = []
    for i in range(n):
        m = p ** (n - i)
        scale = p**i
        pairs.extend((scale * x, scale * x * mult % modulus) for x in base_values(m))
    return pairs


def prime_power_starter(p: int, n: int, beta: int | str = BETA_TWO) -> Starter:
    """Strong Skolem starter for Z_{p^n}, p = 3 (mod 8), p != 3, n >= 1.

    The nonzero residues split into strata p^i * (units mod p^(n-i));
    inside stratum i the pairs are {p^i x, 2 p^i x} with x over the
    index-2 subgroup generated by the square of a primitive root, so
    each stratum is covered by its own pairs and differences.  n = 1
    degenerates to the plain quadratic-residue construction.
    """
    _require(is_prime(p), f"p = {p} is not prime")
    _require(p % 8 == 3, f"p = {p} must be 3 (mod 8)")
    _require(p != 3, "p = 3 is excluded")
    _require(n >= 1, f"n must be >= 1, got {n}")
    beta = normalize_beta(beta)
    _require(beta in (BETA_TWO, BETA_TWO_INVERSE), f"beta must be 2 or {BETA_TWO_INVERSE!r}")
    ctx = GroupContext.for_prime_power(p, n)
    root = ctx.primitive_root
    modulus = ctx.modulus
    mult = _beta_multiplier(beta, modulus)
    pairs = _stratum_pairs(p, n, mult, lambda m: cyclic_coset(root * root % m, 1, m))
    recipe = Recipe(method="prime_power", p=p, n=n, beta=beta, root=root)
    return _certify(Starter.from_pairs(modulus, pairs), recipe)


def prime_power_cyclotomic_starter(
    p: int, k: int, n: int, beta: int | str = BETA_TWO
) -> Starter:
    """Cyclotomic variant of prime_power_starter for p = 2^k t + 1.

    Stratum i uses x over the low-half class union of the unit group
    mod p^(n-i), taken with respect to the lifted primitive root.
    The required positions of 2 and -1 (class index 2^(k-1) in every
    stratum group) are consequences of the hypotheses at p, but they
    are re-checked at runtime rather than assumed.
    """
    _require(is_prime(p), f"p = {p} is not prime")
    _require(k >= 3, f"k must be >= 3, got {k}")
    delta = 1 << k
    _require((p - 1) % delta == 0, f"2^{k} does not divide {p} - 1")
    t = (p - 1) // delta
    _require(t % 2 == 1, f"(p-1)/2^{k} = {t} must be odd")
    _require(t > 1, f"(p-1)/2^{k} must exceed 1")
    _require(n >= 1, f"n must be >= 1, got {n}")
    beta = normalize_beta(beta)
    _require(beta in (BETA_TWO, BETA_TWO_INVERSE), f"beta must be 2 or {BETA_TWO_INVERSE!r}")
    cs = CyclotomicStructure.for_prime(p, k)
    index2 = cyclotomic_index(2, cs)
    _require(
        index2 == delta >> 1,
        f"class index of 2 mod {p} is {index2}, need {delta >> 1}",
    )
    root = lift_primitive_root(cs.root, p, n)
    modulus = p**n

    def half_union(m: int) -> set[int]:
        group_order = m // p * (p - 1)
        for target, name in ((2, "2"), (m - 1, "-1")):
            e = discrete_log(target, root, m, group_order)
            if e % delta != delta >> 1:
                raise CoverageFailure(
                    f"{name} has class index {e % delta} mod {m}, need {delta >> 1}"
                )
        sub = cyclic_coset(pow(root, delta, m), 1, m)
        out: set[int] = set()
        for j in range(delta >> 1):
            shift = pow(root, j, m)
            out.update(shift * s % m for s in sub)
        return out

    mult = _beta_multiplier(beta, modulus)
    pairs = _stratum_pairs(p, n, mult, half_union)
    recipe = Recipe(method="prime_power_cyclotomic", p=p, k=k, n=n, beta=beta, root=root)
    return _certify(Starter.from_pairs(modulus, pairs), recipe)


def _check_pq_common(p: int, q: int) -> None:
    _require(is_prime(p), f"p = {p} is not prime")
    _require(is_prime(q), f"q = {q} is not prime")
    _require(p < q, f"need p < q, got ({p}, {q})")
    _require((q - 1) % (p - 1) != 0, f"(p-1) = {p - 1} divides (q-1) = {q - 1}")


def pq_starter(p: int, q: int, beta: int | str = BETA_TWO) -> Starter:
    """Strong Skolem starter for Z_{pq}, p, q = 3 (mod 8), p < q.

    Three families of doubling pairs: p * QR(q) covers the multiples
    of p, q * QR(p) the multiples of q, and the unit part is swept by
    the cyclic group generated by the square of a common primitive
    root r together with one shifted copy lambda * <r^2>, lambda the
    smallest unit outside <r^2> and 2<r^2>.  The four cosets <r^2>,
    2<r^2>, lambda<r^2>, 2*lambda<r^2> must tile the units, which
    additionally requires gcd(p-1, q-1) = 2; pairs that pass the
    stated congruence hypotheses but have a larger gcd cannot be
    covered by this recipe and raise CoverageFailure.
    """
    _require(p % 8 == 3 and p != 3, f"p = {p} must be 3 (mod 8) and != 3")
    _require(q % 8 == 3 and q != 3, f"q = {q} must be 3 (mod 8) and != 3")
    _check_pq_common(p, q)
    beta = normalize_beta(beta)
    _require(beta in (BETA_TWO, BETA_TWO_INVERSE), f"beta must be 2 or {BETA_TWO_INVERSE!r}")
    modulus = p * q
    root = find_common_primitive_root(p, q)
    g = math.gcd(p - 1, q - 1)
    if g != 2:
        raise CoverageFailure(
            f"gcd(p-1, q-1) = {g}: the four cosets of <r^2> span only "
            f"{2 * (p - 1) * (q - 1) // g} of the {(p - 1) * (q - 1)} units mod {modulus}"
        )
    mult = _beta_multiplier(beta, modulus)
    square_span = cyclic_coset(root * root % modulus, 1, modulus)
    excluded = set(square_span)
    excluded.update(2 * x % modulus for x in square_span)
    lam = next(
        (c for c in range(2, modulus) if c % p and c % q and c not in excluded),
        None,
    )
    if lam is None:
        raise CoverageFailure(f"no unit outside <r^2> and 2<r^2> mod {modulus}")
    pairs = _doubling_pairs((p * x for x in quadratic_residues(q)), mult, modulus)
    pairs += _doubling_pairs((q * x for x in quadratic_residues(p)), mult, modulus)
    pairs += _doubling_pairs(square_span, mult, modulus)
    pairs += _doubling_pairs((lam * x % modulus for x in square_span), mult, modulus)
    recipe = Recipe(method="pq", p=p, q=q, beta=beta, lam=lam, root=root)
    return _certify(Starter.from_pairs(modulus, pairs), recipe)


def _pq_root_index(x: int, root: int, p: int, q: int) -> int | None:
    """Exponent of x in the subgroup generated by root mod pq, or None.

    Computed from the two componentwise discrete logs, recombined on
    the exponents; the moduli p-1 and q-1 share a factor, so the
    recombination can be unsolvable, which is exactly the x outside
    the subgroup.
    """
    try:
        ep = discrete_log(x, root, p, p - 1)
        eq = discrete_log(x, root, q, q - 1)
    except NotInSubgroup:
        return None
    solved = crt_solve(ep, p - 1, eq, q - 1)
    if solved is None:
        return None
    return solved[0]


def _validate_pq_cyclotomic(p: int, q: int, k: int) -> None:
    _require(k >= 3, f"k must be >= 3, got {k}")
    delta = 1 << k
    for name, value in (("p", p), ("q", q)):
        _require(is_prime(value), f"{name} = {value} is not prime")
        _require((value - 1) % delta == 0, f"2^{k} does not divide {name} - 1")
        t = (value - 1) // delta
        _require(t % 2 == 1, f"({name}-1)/2^{k} = {t} must be odd")
        _require(t > 1, f"({name}-1)/2^{k} must exceed 1")
    _check_pq_common(p, q)


def pq_cyclotomic_starter(p: int, q: int, k: int, beta: int | str = BETA_TWO) -> Starter:
    """Strong Skolem starter for Z_{pq}, p = 2^k t1 + 1, q = 2^k t2 + 1.

    The multiples of p and of q are covered like in
    cyclotomic_starter, working mod q and mod p respectively.  For the
    unit part, let R = <r> for a common primitive root r: 2 and -1
    both sit in the coset r^(2^(k-1)) <r^(2^k)> of R, so every coset
    c*R of R splits into doubling pairs {c x, 2 c x} with x over the
    low-half class union H of R (H together with 2H tiles R, and -H =
    2H).  One multiplier per coset of R is needed; they are chosen
    greedily as the smallest yet-uncovered unit, the first of them
    (the smallest unit outside R) is recorded as lambda in the recipe.
    """
    _validate_pq_cyclotomic(p, q, k)
    beta = normalize_beta(beta)
    _require(beta in (BETA_TWO, BETA_TWO_INVERSE), f"beta must be 2 or {BETA_TWO_INVERSE!r}")
    delta = 1 << k
    half = delta >> 1
    cs_p = CyclotomicStructure.for_prime(p, k)
    cs_q = CyclotomicStructure.for_prime(q, k)
    index2_p = cyclotomic_index(2, cs_p)
    _require(index2_p == half, f"class index of 2 mod {p} is {index2_p}, need {half}")
    index2_q = cyclotomic_index(2, cs_q)
    _require(index2_q == half, f"class index of 2 mod {q} is {index2_q}, need {half}")

    modulus = p * q
    root = find_common_primitive_root(p, q)
    for target, name in ((2, "2"), (modulus - 1, "-1")):
        e = _pq_root_index(target, root, p, q)
        if e is None or e % delta != half:
            raise CoverageFailure(
                f"{name} is not in the coset r^{half} <r^{delta}> mod {modulus}"
            )

    sub = cyclic_coset(pow(root, delta, modulus), 1, modulus)
    half_union: set[int] = set()
    for j in range(half):
        shift = pow(root, j, modulus)
        half_union.update(shift * s % modulus for s in sub)
    span = set(half_union)
    span.update(2 * x % modulus for x in half_union)  # span == <r>

    unit_count = (p - 1) * (q - 1)
    covered = set(span)
    multipliers = [1]
    c = 2
    while len(covered) < unit_count:
        while c in covered or c % p == 0 or c % q == 0:
            c += 1
            if c >= modulus:
                raise CoverageFailure(
                    f"transversal of <r> mod {modulus} incomplete: "
                    f"{len(covered)} of {unit_count} units covered"
                )
        multipliers.append(c)
        covered.update(c * y % modulus for y in span)

    mult = _beta_multiplier(beta, modulus)
    pairs: list[tuple[int, int]] = []
    pairs += _doubling_pairs((p * x for x in _half_class_union_root(cs_q, root)), mult, modulus)
    pairs += _doubling_pairs((q * x for x in _half_class_union_root(cs_p, root)), mult, modulus)
    for c in multipliers:
        pairs += _doubling_pairs((c * x % modulus for x in half_union), mult, modulus)
    recipe = Recipe(
        method="pq_cyclotomic", p=p, q=q, k=k, beta=beta, lam=multipliers[1], root=root
    )
    return _certify(Starter.from_pairs(modulus, pairs), recipe)


def _half_class_union_root(cs: CyclotomicStructure, root: int) -> set[int]:
    """Low-half class union of Z_p^*, taken for the given shared root."""
    m = cs.p
    sub = cyclic_coset(pow(root, cs.delta, m), 1, m)
    out: set[int] = set()
    for j in range(cs.delta >> 1):
        shift = pow(root, j, m)
        out.update(shift * s % m for s in sub)
    return out


def two_family_pq_cyclotomic(p: int, q: int, k: int, lam: int) -> Starter:
    """The unit part built from just <r>'s low half and one lambda copy.

    Testing hook, deliberately uncertified: with a single multiplier
    the two families span at most 2 * lcm(p-1, q-1) of the
    (p-1)(q-1) units, so for these shapes the result cannot verify as
    a starter.  classify() on the output shows exactly how it fails.
    """
    _validate_pq_cyclotomic(p, q, k)
    delta = 1 << k
    cs_p = CyclotomicStructure.for_prime(p, k)
    cs_q = CyclotomicStructure.for_prime(q, k)
    modulus = p * q
    root = find_common_primitive_root(p, q)
    sub = cyclic_coset(pow(root, delta, modulus), 1, modulus)
    half_union: set[int] = set()
    for j in range(delta >> 1):
        shift = pow(root, j, modulus)
        half_union.update(shift * s % modulus for s in sub)
    pairs = _doubling_pairs((p * x for x in _half_class_union_root(cs_q, root)), 2, modulus)
    pairs += _doubling_pairs((q * x for x in _half_class_union_root(cs_p, root)), 2, modulus)
    pairs += _doubling_pairs(half_union, 2, modulus)
    pairs += _doubling_pairs((lam * x % modulus for x in half_union), 2, modulus)
    return Starter.from_pairs(modulus, pairs)


def check_minus_one_coset(p: int, q: int, k: int, r: int) -> bool:
    """Certify that -1 behaves like a half-shift for the pair (p, q).

    For p = 2^k t1 + 1, q = 2^k t2 + 1 (t1 < t2 odd > 1) and r a
    non-residue mod both primes: checks r^((p-1)(q-1)/2^(k+1)) = -1
    (mod pq) exactly; when r is additionally a common primitive root,
    also checks that -1 lies in the coset r^(2^(k-1)) <r^(2^k)> of
    the units mod pq.
    """
    _require(k >= 3, f"k must be >= 3, got {k}")
    delta = 1 << k
    for name, value in (("p", p), ("q", q)):
        _require(is_prime(value), f"{name} = {value} is not prime")
        _require((value - 1) % delta == 0, f"2^{k} does not divide {name} - 1")
        t = (value - 1) // delta
        _require(t % 2 == 1 and t > 1, f"({name}-1)/2^{k} = {t} must be odd and > 1")
    _require((p - 1) // delta < (q - 1) // delta, "need t1 < t2")
    _require(
        euler_class(r, p) is ResidueClass.NQR, f"r = {r} is a quadratic residue mod {p}"
    )
    _require(
        euler_class(r, q) is ResidueClass.NQR, f"r = {r} is a quadratic residue mod {q}"
    )
    modulus = p * q
    exponent = (p - 1) * (q - 1) // (1 << (k + 1))
    result = pow(r, exponent, modulus) == modulus - 1
    if is_primitive_root(r, p) and is_primitive_root(r, q):
        e = _pq_root_index(modulus - 1, r, p, q)
        result = result and e is not None and e % delta == delta >> 1
    return result


def check_two_in_coset(p: int, q: int, k: int, r: int) -> bool:
    """Certify that 2 lifts into the half-shift coset mod pq.

    Preconditions: r is a common primitive root and the class index
    of 2 is 2^(k-1) both mod p and mod q.  The conclusion -- 2 lies in
    r^(2^(k-1)) <r^(2^k)> mod pq -- is then confirmed by combining the
    componentwise discrete logs of 2 through the exponent congruences.
    """
    _require(k >= 3, f"k must be >= 3, got {k}")
    delta = 1 << k
    for name, value in (("p", p), ("q", q)):
        _require(is_prime(value), f"{name} = {value} is not prime")
        _require((value - 1) % delta == 0, f"2^{k} does not divide {name} - 1")
    _require(
        is_primitive_root(r, p) and is_primitive_root(r, q),
        f"r = {r} must be a common primitive root of {p} and {q}",
    )
    half = delta >> 1
    for value in (p, q):
        index2 = discrete_log(2, r, value, value - 1) % delta
        _require(
            index2 == half,
            f"class index of 2 mod {value} is {index2}, need {half}",
        )
    e = _pq_root_index(2, r, p, q)
    return e is not None and e % delta == half
