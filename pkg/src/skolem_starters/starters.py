"""Starter domain types and the four verifiers.

A starter for Z_n (n = 2k + 1 odd) is a set of k unordered pairs of
distinct nonzero residues whose 2k members are exactly {1, .., n-1}
and whose +- differences mod n also cover {1, .., n-1} exactly.  On
top of the base property:

  strong     -- the k pair sums mod n are pairwise distinct and nonzero
  Skolem     -- the integer differences hi - lo are exactly {1, .., k}
  cardioidal -- every pair has the doubling shape {x, 2x mod n}

Verifiers return (verdict, witness): the witness is the first
offending element / difference / sum / pair, kept small on purpose --
it exists for debugging, not for enumerating every failure.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Any, Iterable


class MalformedStarter(ValueError):
    """Candidate violates the structural shape of a starter."""


@dataclass(frozen=True, order=True)
class Pair:
    """Unordered pair of distinct nonzero residues, stored as lo < hi."""

    lo: int
    hi: int

    @classmethod
    def of(cls, a: int, b: int, modulus: int) -> "Pair":
        a %= modulus
        b %= modulus
        if a == 0 or b == 0:
            raise MalformedStarter(f"pair ({a}, {b}) contains 0 mod {modulus}")
        if a == b:
            raise MalformedStarter(f"pair members coincide: {a} mod {modulus}")
        return cls(min(a, b), max(a, b))


@dataclass(frozen=True)
class Starter:
    """A candidate starter: odd modulus plus canonically sorted pairs.

    recipe and classification are optional attachments (filled in by
    the construction layer); they never take part in equality, so two
    starters are equal exactly when their pair sets coincide.
    """

    modulus: int
    pairs: tuple[Pair, ...]
    recipe: Any = field(default=None, compare=False, repr=False)
    classification: "Classification | None" = field(default=None, compare=False, repr=False)

    @property
    def k(self) -> int:
        return (self.modulus - 1) // 2

    @classmethod
    def from_pairs(cls, modulus: int, pairs: Iterable[tuple[int, int] | Pair]) -> "Starter":
        if modulus < 3 or modulus % 2 == 0:
            raise MalformedStarter(f"modulus must be odd and >= 3, got {modulus}")
        canon = set()
        for pr in pairs:
            if isinstance(pr, Pair):
                pr = (pr.lo, pr.hi)
            canon.add(Pair.of(pr[0], pr[1], modulus))
        return cls(modulus, tuple(sorted(canon)))

    def with_metadata(self, recipe: Any = None, classification: "Classification | None" = None) -> "Starter":
        return replace(self, recipe=recipe, classification=classification)


@dataclass
class Classification:
    """Joint verdict of the four verifiers with failure witnesses.

    When is_starter is false the strong/Skolem verdicts are still
    computed but `dependent` is set: they describe a near-miss, not a
    starter.
    """

    is_starter: bool
    is_strong: bool
    is_skolem: bool
    is_cardioidal: bool
    dependent: bool
    witnesses: dict[str, str] = field(default_factory=dict)

    @property
    def all_four(self) -> bool:
        return self.is_starter and self.is_strong and self.is_skolem and self.is_cardioidal

    def to_dict(self) -> dict[str, Any]:
        return {
            "starter": self.is_starter,
            "strong": self.is_strong,
            "skolem": self.is_skolem,
            "cardioidal": self.is_cardioidal,
            "dependent": self.dependent,
            "witnesses": dict(self.witnesses),
        }

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> "Classification":
        return cls(
            is_starter=bool(doc["starter"]),
            is_strong=bool(doc["strong"]),
            is_skolem=bool(doc["skolem"]),
            is_cardioidal=bool(doc["cardioidal"]),
            dependent=bool(doc.get("dependent", not doc["starter"])),
            witnesses=dict(doc.get("witnesses", {})),
        )


def _require_shape(s: Starter) -> None:
    if len(s.pairs) != s.k:
        raise MalformedStarter(
            f"modulus {s.modulus} needs {s.k} pairs, got {len(s.pairs)}"
        )


def verify_starter(s: Starter) -> tuple[bool, str | None]:
    """Endpoints exhaust 1..n-1 and +-differences mod n do as well."""
    _require_shape(s)
    n = s.modulus
    members = Counter()
    for pr in s.pairs:
        members[pr.lo] += 1
        members[pr.hi] += 1
    for e in range(1, n):
        if members[e] > 1:
            return False, f"element {e} occurs {members[e]} times among pair members"
        if members[e] == 0:
            return False, f"element {e} never occurs among pair members"
    diffs = Counter()
    for pr in s.pairs:
        d = (pr.hi - pr.lo) % n
        diffs[d] += 1
        diffs[n - d] += 1
    for pr in s.pairs:
        d = (pr.hi - pr.lo) % n
        if diffs[d] > 1:
            lo_d = min(d, n - d)
            return False, f"difference class {{{lo_d}, {n - lo_d}}} covered more than once"
    return True, None


def verify_strong(s: Starter) -> tuple[bool, str | None]:
    """Pair sums mod n are pairwise distinct and nonzero."""
    _require_shape(s)
    n = s.modulus
    seen: dict[int, Pair] = {}
    for pr in s.pairs:
        t = (pr.lo + pr.hi) % n
        if t == 0:
            return False, f"pair ({pr.lo}, {pr.hi}) has sum 0 mod {n}"
        if t in seen:
            other = seen[t]
            return False, (
                f"pairs ({other.lo}, {other.hi}) and ({pr.lo}, {pr.hi}) share sum {t} mod {n}"
            )
        seen[t] = pr
    return True, None


def verify_skolem(s: Starter) -> tuple[bool, str | None]:
    """Integer differences hi - lo are exactly {1, .., k}.

    Equivalent to indexing the pairs so the i-th has difference i:
    with 0 < hi - lo < n both readings demand the same k-element set.
    """
    _require_shape(s)
    k = s.k
    diffs = Counter(pr.hi - pr.lo for pr in s.pairs)
    for pr in s.pairs:
        d = pr.hi - pr.lo
        if d > k:
            return False, f"integer difference {d} of pair ({pr.lo}, {pr.hi}) exceeds {k}"
        if diffs[d] > 1:
            return False, f"integer difference {d} occurs {diffs[d]} times"
    for d in range(1, k + 1):
        if diffs[d] == 0:
            return False, f"integer difference {d} missing"
    return True, None


def verify_cardioidal(s: Starter) -> tuple[bool, str | None]:
    """Every pair has the doubling shape {x, 2x mod n}."""
    _require_shape(s)
    n = s.modulus
    for pr in s.pairs:
        if (2 * pr.lo - pr.hi) % n != 0 and (2 * pr.hi - pr.lo) % n != 0:
            return False, f"pair ({pr.lo}, {pr.hi}) is not a doubling pair mod {n}"
    return True, None


def classify(s: Starter) -> Classification:
    """Run all four verifiers and bundle verdicts plus witnesses."""
    ok_starter, w_starter = verify_starter(s)
    ok_strong, w_strong = verify_strong(s)
    ok_skolem, w_skolem = verify_skolem(s)
    ok_card, w_card = verify_cardioidal(s)
    witnesses = {}
    for name, w in (
        ("starter", w_starter),
        ("strong", w_strong),
        ("skolem", w_skolem),
        ("cardioidal", w_card),
    ):
        if w is not None:
            witnesses[name] = w
    return Classification(
        is_starter=ok_starter,
        is_strong=ok_strong,
        is_skolem=ok_skolem,
        is_cardioidal=ok_card,
        dependent=not ok_starter,
        witnesses=witnesses,
    )


def negate_starter(s: Starter) -> Starter:
    """Map every pair elementwise to its negative mod n, re-canonicalized.

    An involution; it preserves the starter, strong and cardioidal
    verdicts (sums negate, doubling pairs stay doubling pairs).
    """
    n = s.modulus
    return Starter.from_pairs(n, ((n - pr.hi, n - pr.lo) for pr in s.pairs))


# --- JSON interchange ------------------------------------------------------
#
# {"modulus": int, "pairs": [[lo, hi], ...], "recipe": {...}|null,
#  "classification": {...}|null}
# with pairs sorted ascending by lo so output is byte-stable.


def starter_to_dict(s: Starter) -> dict[str, Any]:
    recipe = s.recipe
    if recipe is not None and hasattr(recipe, "to_dict"):
        recipe = recipe.to_dict()
    return {
        "modulus": s.modulus,
        "pairs": [[pr.lo, pr.hi] for pr in s.pairs],
        "recipe": recipe,
        "classification": s.classification.to_dict() if s.classification else None,
    }


def starter_from_dict(doc: dict[str, Any]) -> Starter:
    s = Starter.from_pairs(int(doc["modulus"]), [tuple(pr) for pr in doc["pairs"]])
    cls = doc.get("classification")
    return s.with_metadata(
        recipe=doc.get("recipe"),
        classification=Classification.from_dict(cls) if cls else None,
    )


def starter_to_json(s: Starter) -> str:
    return json.dumps(starter_to_dict(s), indent=2)


def starter_from_json(text: str) -> Starter:
    return starter_from_dict(json.loads(text))
