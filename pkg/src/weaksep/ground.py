"""Subsets of the cyclic ground set [n] and the separation predicates.

Everything downstream (domains, clique searches, necklaces, mutation graphs)
consumes the vocabulary defined here: one-word bitmask subsets, cyclic
intervals, the surrounds relation, weak and chord separation, and the shifted
Gale order.  All values are immutable and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

MAX_GROUND = 64


class GroundSetMismatch(ValueError):
    """Raised when two subsets over different ground sets meet in one operation."""


def _check_ground_size(n: int) -> None:
    if not 1 <= n <= MAX_GROUND:
        raise ValueError(f"ground set size must be in [1, {MAX_GROUND}], got {n}")


@dataclass(frozen=True)
class Subset:
    """A subset of [n] = {1, ..., n} stored as a bitmask (bit i-1 <=> element i).

    The ground size is part of the value: subsets over different ground sets
    never compare equal, and mixing them in a predicate is a hard error rather
    than an implicit re-embedding.
    """

    mask: int
    n: int

    def __post_init__(self) -> None:
        _check_ground_size(self.n)
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} has bits outside [1, {self.n}]")

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "Subset":
        mask = 0
        for x in elements:
            if not 1 <= x <= n:
                raise ValueError(f"element {x} outside [1, {n}]")
            mask |= 1 << (x - 1)
        return cls(mask, n)

    @classmethod
    def parse(cls, text: str, n: int) -> "Subset":
        """Parse the textual form "1,2,4"; the empty string is the empty set."""
        text = text.strip()
        if not text:
            return cls(0, n)
        try:
            elements = [int(part) for part in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"bad subset syntax {text!r}") from exc
        return cls.of(elements, n)

    def elements(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def to_json(self) -> list[int]:
        return list(self.elements())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and self.mask >> (x - 1) & 1 == 1

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements())) + "}"

    def complement(self) -> "Subset":
        return Subset(self.mask ^ ((1 << self.n) - 1), self.n)

    def rotate(self, r: int) -> "Subset":
        """Shift every element by r positions around the circle (r may be negative)."""
        n = self.n
        r %= n
        if r == 0:
            return self
        full = (1 << n) - 1
        return Subset(((self.mask << r) | (self.mask >> (n - r))) & full, n)

    def union(self, other: "Subset") -> "Subset":
        _check_same_ground(self, other)
        return Subset(self.mask | other.mask, self.n)

    def intersection(self, other: "Subset") -> "Subset":
        _check_same_ground(self, other)
        return Subset(self.mask & other.mask, self.n)

    def minus(self, other: "Subset") -> "Subset":
        _check_same_ground(self, other)
        return Subset(self.mask & ~other.mask, self.n)

    def issubset(self, other: "Subset") -> bool:
        _check_same_ground(self, other)
        return self.mask & ~other.mask == 0


def _check_same_ground(a: Subset, b: Subset) -> None:
    if a.n != b.n:
        raise GroundSetMismatch(f"ground sets differ: [{a.n}] vs [{b.n}]")


@dataclass(frozen=True)
class CyclicOrder:
    """The linear order <_i on [n] that starts at ``base``: i < i+1 < ... < i-1."""

    base: int
    n: int

    def __post_init__(self) -> None:
        _check_ground_size(self.n)
        if not 1 <= self.base <= self.n:
            raise ValueError(f"base {self.base} outside [1, {self.n}]")

    def key(self, x: int) -> int:
        return (x - self.base) % self.n

    def leq(self, x: int, y: int) -> bool:
        return self.key(x) <= self.key(y)


def cyclic_interval(a: int, b: int, n: int) -> Subset:
    """The interval [a, b] = {a, a+1, ..., b} with wraparound modulo n."""
    _check_ground_size(n)
    if not 1 <= a <= n or not 1 <= b <= n:
        raise ValueError(f"interval endpoints ({a}, {b}) outside [1, {n}]")
    count = (b - a) % n + 1
    full = (1 << n) - 1
    run = (1 << count) - 1
    shifted = ((run << (a - 1)) | (run >> (n - a + 1))) & full
    return Subset(shifted, n)


def _run_starts(mask: int, n: int) -> int:
    """Bitmask of elements x in S whose cyclic predecessor is not in S."""
    full = (1 << n) - 1
    pred_in = ((mask << 1) | (mask >> (n - 1))) & full
    return mask & ~pred_in


def is_cyclic_interval(s: Subset) -> bool:
    """True iff s is [a, b] for some a, b, or s is empty or full (by convention)."""
    full = (1 << s.n) - 1
    if s.mask in (0, full):
        return True
    return _run_starts(s.mask, s.n).bit_count() == 1


# Mask-level predicate cores.  The empty-set conventions max(emptyset) = -inf
# and min(emptyset) = +inf are built in: an empty side satisfies any bound.

def _surrounds_masks(imask: int, jmask: int) -> bool:
    imj = imask & ~jmask
    jmi = jmask & ~imask
    if jmi == 0:
        return True
    lo = (jmi & -jmi).bit_length() - 1
    hi = jmi.bit_length() - 1
    between = ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)
    return imj & between == 0


def _weakly_separated_masks(smask: int, tmask: int) -> bool:
    sc = smask.bit_count()
    tc = tmask.bit_count()
    if sc <= tc and _surrounds_masks(smask, tmask):
        return True
    return tc <= sc and _surrounds_masks(tmask, smask)


def _chord_separated_masks(smask: int, tmask: int, n: int) -> bool:
    # Circular scan of S\T and T\S: chord separated iff the labels form at
    # most two blocks of alternation around the circle.
    amask = smask & ~tmask
    bmask = tmask & ~smask
    if amask == 0 or bmask == 0:
        return True
    changes = 0
    first = prev = -1
    for i in range(n):
        bit = 1 << i
        if amask & bit:
            label = 0
        elif bmask & bit:
            label = 1
        else:
            continue
        if first < 0:
            first = label
        elif label != prev:
            changes += 1
        prev = label
    if first != prev:
        changes += 1
    return changes <= 2


def surrounds(i: Subset, j: Subset) -> bool:
    """True iff I \\ J splits as I1 | I2 with I1 < J \\ I < I2 in the linear order.

    Empty parts are allowed, so every set surrounds a set containing it.
    """
    _check_same_ground(i, j)
    return _surrounds_masks(i.mask, j.mask)


def is_weakly_separated(s: Subset, t: Subset) -> bool:
    """True iff the smaller of the two sets surrounds the larger."""
    _check_same_ground(s, t)
    return _weakly_separated_masks(s.mask, t.mask)


def is_chord_separated(s: Subset, t: Subset) -> bool:
    """True iff no cyclically ordered a, b, c, d has a, c in S\\T and b, d in T\\S."""
    _check_same_ground(s, t)
    return _chord_separated_masks(s.mask, t.mask, s.n)


def gale_leq(a: Subset, b: Subset, order: CyclicOrder) -> bool:
    """Componentwise comparison of the sorted sets under the shifted order.

    True iff |A| <= |B| and the m-th smallest element of A under <_i is at
    most the m-th smallest element of B, for every m up to |A|.
    """
    _check_same_ground(a, b)
    if order.n != a.n:
        raise GroundSetMismatch(f"order over [{order.n}] applied to subsets of [{a.n}]")
    if len(a) > len(b):
        return False
    ka = sorted(order.key(x) for x in a.elements())
    kb = sorted(order.key(x) for x in b.elements())
    return all(x <= y for x, y in zip(ka, kb))


def transform(s: Subset, kind: str, r: int = 0) -> Subset:
    """Apply a named transform: "complement" or "rotate" (by r positions)."""
    if kind == "complement":
        return s.complement()
    if kind == "rotate":
        return s.rotate(r)
    raise ValueError(f"unknown transform kind {kind!r}")


def cyclically_ordered(a: int, b: int, c: int, d: int, n: int) -> bool:
    """True iff walking clockwise from a meets b, then c, then d, all four distinct."""
    if len({a, b, c, d}) != 4:
        return False
    return (b - a) % n < (c - a) % n < (d - a) % n
