"""Decorated permutations, necklaces, positroid membership, and pattern splits.

A necklace is the cyclic sequence of k-subsets obeying the one-element
transition rule; it is equivalent data to a permutation with colored fixed
points.  Alignments count the quadruples that cost length; the inside domain
of a necklace pairs weak separation with Gale-order membership.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .cliques import Collection
from .domains import circle_partition
from .ground import (
    CyclicOrder,
    GroundSetMismatch,
    Subset,
    _weakly_separated_masks,
    cyclically_ordered,
    gale_leq,
)


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of [n] in one-line form plus a +1/-1 color on each fixed point."""

    images: tuple[int, ...]
    colors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.images}")
        fixed = {i for i in range(1, n + 1) if self.images[i - 1] == i}
        colored = {i for i, _ in self.colors}
        if colored != fixed:
            raise ValueError(f"colors cover {sorted(colored)}, fixed points are {sorted(fixed)}")
        if any(c not in (1, -1) for _, c in self.colors):
            raise ValueError("colors must be +1 or -1")

    @classmethod
    def make(cls, images: Sequence[int], colors: Mapping[int, int] | None = None) -> "DecoratedPermutation":
        colors = colors or {}
        return cls(tuple(images), tuple(sorted(colors.items())))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def color(self, i: int) -> int:
        return dict(self.colors)[i]

    def inverse_images(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return tuple(inv)

    def to_json(self) -> dict:
        return {
            "permutation": list(self.images),
            "colors": {str(i): c for i, c in self.colors},
        }


def tau_kn(k: int, n: int) -> DecoratedPermutation:
    """The shift i -> i + k (mod n); all-fixed when k is 0 or n, colored by side."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got k={k}, n={n}")
    images = tuple((i + k - 1) % n + 1 for i in range(1, n + 1))
    if k % n == 0:
        color = 1 if k == 0 else -1
        return DecoratedPermutation.make(images, {i: color for i in range(1, n + 1)})
    return DecoratedPermutation.make(images)


def block_reversal_permutation(lengths: Sequence[int]) -> tuple[int, ...]:
    """One-line permutation reversing each consecutive block of the given lengths."""
    out: list[int] = []
    start = 1
    for p in lengths:
        out.extend(range(start + p - 1, start - 1, -1))
        start += p
    return tuple(out)


def canonical_permutation(a: Subset) -> DecoratedPermutation:
    """The block-reversal of the circle partition composed with the half shift.

    Composition order is (sigma o pi)(i) = sigma(pi(i)); the result never has
    fixed points, because a block would have to contain both i and i + k.
    """
    part = circle_partition(a)
    n, k = a.n, part.k
    rev = block_reversal_permutation(part.lengths)
    shift = tau_kn(k, n).images
    return DecoratedPermutation.make(tuple(rev[shift[i] - 1] for i in range(n)))


class AlignmentLength(NamedTuple):
    alignments: int
    length: int


def length_of(p: DecoratedPermutation, k: int) -> AlignmentLength:
    """Count alignments and return the length k(n-k) minus that count.

    A pair {i, j} aligns when i, p(i), p(j), j are cyclically ordered and all
    four distinct, in either orientation of the pair; fixed points therefore
    never participate.
    """
    n = p.n
    images = p.images
    al = 0
    for i, j in itertools.combinations(range(1, n + 1), 2):
        pi, pj = images[i - 1], images[j - 1]
        if cyclically_ordered(i, pi, pj, j, n) or cyclically_ordered(j, pj, pi, i, n):
            al += 1
    return AlignmentLength(al, k * (n - k) - al)


@dataclass(frozen=True)
class GrassmannNecklace:
    """Cyclic sequence I_1..I_n of k-subsets with the one-element transition rule."""

    sets: tuple[Subset, ...]

    def __post_init__(self) -> None:
        sets = self.sets
        n = len(sets)
        if n == 0:
            raise ValueError("necklace needs at least one set")
        k = len(sets[0])
        for s in sets:
            if s.n != n:
                raise GroundSetMismatch(f"necklace of length {n} holds subsets of [{s.n}]")
            if len(s) != k:
                raise ValueError("necklace sets must share one cardinality")
        for i in range(1, n + 1):
            cur = sets[i - 1]
            nxt = sets[i % n]
            if i not in cur:
                if nxt.mask != cur.mask:
                    raise ValueError(f"transition {i}: set must repeat when {i} is absent")
            else:
                gone = cur.mask & ~nxt.mask
                came = nxt.mask & ~cur.mask
                if gone == came == 0:
                    continue
                if gone != 1 << (i - 1) or came.bit_count() != 1:
                    raise ValueError(f"transition {i}: must remove {i} and add one element")

    @property
    def n(self) -> int:
        return len(self.sets)

    @property
    def k(self) -> int:
        return len(self.sets[0])

    @property
    def connected(self) -> bool:
        return len({s.mask for s in self.sets}) == self.n

    def to_json(self) -> list[list[int]]:
        return [s.to_json() for s in self.sets]


def necklace_from_perm(p: DecoratedPermutation, k: int) -> GrassmannNecklace:
    """Necklace whose i-th set collects j with j <_i inverse(j), plus dark fixed points.

    The cardinality of every set must come out to k; a mismatch means the
    permutation does not encode a k-necklace.
    """
    n = p.n
    inv = p.inverse_images()
    dark = 0
    for i, c in p.colors:
        if c == -1:
            dark |= 1 << (i - 1)
    sets = []
    for i in range(1, n + 1):
        order = CyclicOrder(i, n)
        mask = dark
        for j in range(1, n + 1):
            if inv[j - 1] != j and order.key(j) < order.key(inv[j - 1]):
                mask |= 1 << (j - 1)
        if mask.bit_count() != k:
            raise ValueError(
                f"set {i} has cardinality {mask.bit_count()}, not {k}; "
                "the permutation does not encode a necklace of this rank"
            )
        sets.append(Subset(mask, n))
    return GrassmannNecklace(tuple(sets))


def perm_from_necklace(nk: GrassmannNecklace) -> DecoratedPermutation:
    """Read the permutation off the transitions; fixed points colored by membership."""
    n = nk.n
    images = [0] * n
    colors: dict[int, int] = {}
    for i in range(1, n + 1):
        cur = nk.sets[i - 1]
        nxt = nk.sets[i % n]
        if i not in cur:
            images[i - 1] = i
            colors[i] = 1
        elif cur.mask == nxt.mask:
            images[i - 1] = i
            colors[i] = -1
        else:
            came = nxt.mask & ~cur.mask
            images[i - 1] = came.bit_length()
    return DecoratedPermutation.make(tuple(images), colors)


def positroid_contains(nk: GrassmannNecklace, j: Subset) -> bool:
    """Gale-order membership: every necklace set is below j in its own shifted order."""
    if j.n != nk.n:
        raise GroundSetMismatch(f"subset of [{j.n}] against a necklace over [{nk.n}]")
    if len(j) != nk.k:
        raise ValueError(f"expected a {nk.k}-subset, got cardinality {len(j)}")
    return all(
        gale_leq(nk.sets[i - 1], j, CyclicOrder(i, nk.n)) for i in range(1, nk.n + 1)
    )


def domain_in_for_necklace(nk: GrassmannNecklace) -> Collection:
    """All k-subsets weakly separated from every necklace set and inside the positroid."""
    n, k = nk.n, nk.k
    neck = [s.mask for s in nk.sets]
    out = []
    for combo in itertools.combinations(range(n), k):
        mask = 0
        for b in combo:
            mask |= 1 << b
        if all(_weakly_separated_masks(mask, m) for m in neck) and positroid_contains(
            nk, Subset(mask, n)
        ):
            out.append(mask)
    return Collection.from_masks(out, n)


@dataclass(frozen=True)
class SimpleCyclicPattern:
    """A cyclic, pairwise weakly separated sequence of distinct sets with unit steps."""

    sets: tuple[Subset, ...]

    def __post_init__(self) -> None:
        sets = self.sets
        if len(sets) < 2:
            raise ValueError("pattern needs at least two sets")
        n = sets[0].n
        masks = [s.mask for s in sets]
        if len(set(masks)) != len(masks):
            raise ValueError("pattern sets must be pairwise distinct")
        for s in sets:
            if s.n != n:
                raise GroundSetMismatch("pattern mixes ground sets")
        for a in range(len(masks)):
            b = (a + 1) % len(masks)
            if (masks[a] ^ masks[b]).bit_count() != 1:
                raise ValueError(f"step {a}: symmetric difference must have one element")
            for c in range(a + 1, len(masks)):
                if not _weakly_separated_masks(masks[a], masks[c]):
                    raise ValueError("pattern is not weakly separated")

    @classmethod
    def make(cls, sets: Iterable[Subset]) -> "SimpleCyclicPattern":
        sets = list(sets)
        if len(sets) >= 2 and sets[0].mask == sets[-1].mask and sets[0].n == sets[-1].n:
            sets = sets[:-1]
        return cls(tuple(sets))

    @property
    def n(self) -> int:
        return self.sets[0].n

    def slope_indices(self) -> tuple[int, ...]:
        r = len(self.sets)
        return tuple(
            i
            for i in range(r)
            if len(self.sets[(i - 1) % r]) != len(self.sets[(i + 1) % r])
        )


def is_generalized_cyclic_pattern(sets: Sequence[Subset]) -> bool:
    """Validity check only: distinct, equal-size, weakly separated, two-element steps."""
    if len(sets) < 2:
        return False
    n = sets[0].n
    masks = [s.mask for s in sets]
    if masks[0] == masks[-1]:
        masks = masks[:-1]
    if len(set(masks)) != len(masks):
        return False
    size = masks[0].bit_count()
    if any(s.n != n for s in sets) or any(m.bit_count() != size for m in masks):
        return False
    for a in range(len(masks)):
        if (masks[a] ^ masks[(a + 1) % len(masks)]).bit_count() != 2:
            return False
        for b in range(a + 1, len(masks)):
            if not _weakly_separated_masks(masks[a], masks[b]):
                return False
    return True


def simple_pattern_split(p: SimpleCyclicPattern) -> tuple[Collection, Collection]:
    """Split everything compatible with the pattern into inside and outside domains.

    Compatible sets of size h are classified by the parity of how many size-h
    slopes sit below them in the base Gale order: odd lands inside, even
    outside.  The two domains overlap exactly in the pattern and union to the
    full compatible family.
    """
    n = p.n
    base = CyclicOrder(1, n)
    pattern_masks = {s.mask for s in p.sets}
    slopes_by_size: dict[int, list[Subset]] = {}
    for i in p.slope_indices():
        slopes_by_size.setdefault(len(p.sets[i]), []).append(p.sets[i])
    inside = set(pattern_masks)
    outside = set(pattern_masks)
    members = [s.mask for s in p.sets]
    for mask in range(1 << n):
        if not all(_weakly_separated_masks(mask, m) for m in members):
            continue
        x = Subset(mask, n)
        below = sum(1 for s in slopes_by_size.get(len(x), []) if gale_leq(s, x, base))
        (inside if below % 2 else outside).add(mask)
    return Collection.from_masks(inside, n), Collection.from_masks(outside, n)
