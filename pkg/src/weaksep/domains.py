"""Two-set compatibility domains, circle partitions, and the rank/distance formulas.

Covers: the domain of all m-subsets weakly separated from a fixed pair,
boundary intervals, the alternating circle partition of a complementary pair
with its balancedness test, closed-form ranks and cluster distances, the
left/right domain over [0, n], the suffix-pair witness collection that lower
bounds unbalanced domains, the four-region profile of a domain element, and
nested chains inside maximal chord separated collections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .cliques import Collection, build_compat_graph, max_clique_size
from .ground import (
    GroundSetMismatch,
    Subset,
    _chord_separated_masks,
    _weakly_separated_masks,
    cyclic_interval,
    is_weakly_separated,
)


class ChainNotFound(RuntimeError):
    """No nested chain with the required decorated quadruples exists.

    Distinguished from precondition errors: if the preconditions hold, this
    outcome contradicts the theory the search is certifying.
    """


class ProfileNotFound(RuntimeError):
    """No valid four-region profile exists for the given element."""


@dataclass(frozen=True)
class CirclePartition:
    """The alternating run structure of a half-size set A inside [2k].

    The circle is rotated by ``offset`` so that interval 1 starts at element 1
    (1 lands in A and 2k outside it).  Odd-indexed intervals partition the
    rotated A, even-indexed ones its complement; ``lengths`` are their sizes.
    """

    k: int
    u: int
    intervals: tuple[Subset, ...]
    lengths: tuple[int, ...]
    offset: int

    @property
    def is_balanced(self) -> bool:
        ps = self.lengths
        return all(ps[i] + ps[j] < self.k for i in range(len(ps)) for j in range(i + 1, len(ps)))

    def intervals_unrotated(self) -> tuple[Subset, ...]:
        """The same intervals mapped back to the original circle coordinates."""
        return tuple(iv.rotate(-self.offset) for iv in self.intervals)


def circle_partition(a: Subset) -> CirclePartition:
    n = a.n
    if n % 2:
        raise ValueError(f"ground set size must be even, got {n}")
    k = n // 2
    if len(a) != k:
        raise ValueError(f"expected a {k}-subset of [{n}], got cardinality {len(a)}")
    offset = next(
        r for r in range(n) if 1 in a.rotate(r) and n not in a.rotate(r)
    )
    rotated = a.rotate(offset)
    intervals: list[Subset] = []
    lengths: list[int] = []
    start = 1
    inside = True
    for x in range(2, n + 2):
        now = x <= n and x in rotated
        if x <= n and now == inside:
            continue
        intervals.append(cyclic_interval(start, x - 1, n))
        lengths.append(x - start)
        start, inside = x, now
    return CirclePartition(k, len(lengths) // 2, tuple(intervals), tuple(lengths), offset)


def is_balanced(a: Subset) -> bool:
    """True iff every two run lengths of the circle partition sum below k."""
    return circle_partition(a).is_balanced


@dataclass(frozen=True)
class PairContext:
    """A same-size pair (I, J) reduced to the complementary pair on [2k].

    Elements of the symmetric difference are renumbered order-preservingly to
    1..2k; the images of I \\ J and J \\ I are complementary there.  k = 0 is
    the degenerate I = J case: no partition, trivially weakly separated.
    """

    i: Subset
    j: Subset
    m: int
    k: int
    sym_diff: tuple[int, ...]
    reduced_i: Subset | None
    reduced_j: Subset | None
    partition: CirclePartition | None
    balanced: bool

    @property
    def degenerate(self) -> bool:
        return self.k == 0

    def project(self, s: Subset) -> Subset:
        """Image of s restricted to the symmetric difference, inside [2k]."""
        if self.k == 0:
            raise ValueError("degenerate context has no reduction")
        positions = [p + 1 for p, x in enumerate(self.sym_diff) if x in s]
        return Subset.of(positions, 2 * self.k)


def reduce_pair(i: Subset, j: Subset) -> PairContext:
    if i.n != j.n:
        raise GroundSetMismatch(f"ground sets differ: [{i.n}] vs [{j.n}]")
    if len(i) != len(j):
        raise ValueError(f"cardinalities differ: {len(i)} vs {len(j)}")
    m = len(i)
    diff = Subset(i.mask ^ j.mask, i.n)
    sym = diff.elements()
    k = len(sym) // 2
    if k == 0:
        return PairContext(i, j, m, 0, (), None, None, None, False)
    red_i = Subset.of((p + 1 for p, x in enumerate(sym) if x in i), 2 * k)
    part = circle_partition(red_i)
    return PairContext(i, j, m, k, sym, red_i, red_i.complement(), part, part.is_balanced)


def boundary_intervals(k: int, n: int) -> Collection:
    """The n cyclic intervals of length k (weakly separated from everything of size k)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return Collection(cyclic_interval(i, (i + k - 2) % n + 1, n) for i in range(1, n + 1))


def build_domain_AIJ(i: Subset, j: Subset) -> Collection:
    """All m-subsets of [n] weakly separated from both I and J, in canonical order."""
    if i.n != j.n:
        raise GroundSetMismatch(f"ground sets differ: [{i.n}] vs [{j.n}]")
    if len(i) != len(j):
        raise ValueError(f"cardinalities differ: {len(i)} vs {len(j)}")
    n, m = i.n, len(i)
    out = []
    for combo in itertools.combinations(range(n), m):
        mask = 0
        for b in combo:
            mask |= 1 << b
        if _weakly_separated_masks(mask, i.mask) and _weakly_separated_masks(mask, j.mask):
            out.append(mask)
    return Collection.from_masks(out, n)


def rank_formula(ctx: PairContext) -> int:
    """Closed-form rank of the pair domain; defined for balanced pairs only."""
    if not ctx.balanced:
        raise ValueError("rank formula requires a balanced pair")
    assert ctx.partition is not None
    m, n, k = ctx.m, ctx.i.n, ctx.k
    return m * (n - m) - k * k + 2 * k + sum(comb(p, 2) for p in ctx.partition.lengths)


@dataclass(frozen=True)
class ClusterDistance:
    """A cluster-distance value; ``exact`` is False when only an upper bound is asserted."""

    value: int
    exact: bool


def cluster_distance(i: Subset, j: Subset, method: str = "exact") -> ClusterDistance:
    """Distance from the pair to joint membership in one maximal collection.

    "exact" searches: ambient rank m(n-m)+1 minus the maximum weakly separated
    collection size inside the pair domain.  "formula" evaluates the closed
    form 1 + k^2 - 2k - sum C(p_i, 2) on the reduced pair; it is exact for
    balanced pairs and an upper bound otherwise.  Weakly separated pairs give
    0 under either method.
    """
    if method not in ("exact", "formula"):
        raise ValueError(f"unknown method {method!r}")
    if i.n != j.n:
        raise GroundSetMismatch(f"ground sets differ: [{i.n}] vs [{j.n}]")
    if len(i) != len(j):
        raise ValueError(f"cardinalities differ: {len(i)} vs {len(j)}")
    if is_weakly_separated(i, j):
        return ClusterDistance(0, True)
    m, n = len(i), i.n
    ctx = reduce_pair(i, j)
    if method == "exact":
        g = build_compat_graph(build_domain_AIJ(i, j), "weak")
        return ClusterDistance(m * (n - m) + 1 - max_clique_size(g), True)
    assert ctx.partition is not None
    k = ctx.k
    value = 1 + k * k - 2 * k - sum(comb(p, 2) for p in ctx.partition.lengths)
    return ClusterDistance(value, ctx.balanced)


# --- the left/right domain over [0, n] ---------------------------------------
#
# Subsets of [0, n] are carried on the ground set [n + 1] via x -> x + 1; all
# public output uses the 0-based labels.

def lr_subset(labels, n: int) -> Subset:
    """Subset of [0, n] given by 0-based labels, embedded in the ground set [n+1]."""
    return Subset.of((x + 1 for x in labels), n + 1)


def lr_labels(s: Subset) -> tuple[int, ...]:
    return tuple(x - 1 for x in s.elements())


def lr_domain(n: int) -> Collection:
    """All subsets of [0, n] containing exactly one of 0 and n; size 2^n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    lo = 1 << 0
    hi = 1 << n
    out = []
    for middle in range(1 << (n - 1)):
        body = middle << 1
        out.append(lo | body)
        out.append(hi | body)
    return Collection.from_masks(out, n + 1)


@dataclass(frozen=True)
class LRChain:
    """The nested sets S_0 c S_1 c ... c S_(n-1) of a maximal left/right collection."""

    sets: tuple[tuple[int, ...], ...]


def lr_chain(w: Collection, n: int) -> LRChain:
    """Extract the unique nested chain attached to a maximal collection in lr_domain(n).

    For each m < n there must be exactly one m-subset S of [1, n-1] with both
    S + {0} and S + {n} in the collection; violations signal that the input
    was not a maximal weakly separated collection inside the domain.
    """
    if w.n != n + 1:
        raise GroundSetMismatch(f"expected a collection over [{n + 1}], got [{w.n}]")
    domain = set(lr_domain(n).masks)
    members = set(w.masks)
    if not members <= domain:
        raise ValueError("collection has members outside the left/right domain")
    masks = w.masks
    for a in range(len(masks)):
        for b in range(a + 1, len(masks)):
            if not _weakly_separated_masks(masks[a], masks[b]):
                raise ValueError("collection is not weakly separated")
    for m in domain - members:
        if all(_weakly_separated_masks(m, x) for x in masks):
            raise ValueError("collection is not maximal in the left/right domain")
    lo = 1 << 0
    hi = 1 << n
    chain: list[tuple[int, ...]] = []
    prev = None
    for size in range(n):
        found = [
            m ^ lo
            for m in members
            if m & lo and m.bit_count() == size + 1 and (m ^ lo) | hi in members
        ]
        if len(found) != 1:
            raise ChainNotFound(
                f"level {size}: expected exactly one chain set, found {len(found)}"
            )
        body = found[0]
        if prev is not None and prev & ~body:
            raise ChainNotFound(f"level {size}: chain sets are not nested")
        prev = body
        chain.append(lr_labels(Subset(body, n + 1)))
    return LRChain(tuple(chain))


# --- unbalanced lower-bound witness ------------------------------------------

@dataclass(frozen=True)
class UnbalancedBound:
    """Lower-bound data for the domain of a non-separated complementary pair.

    ``a`` and ``b`` are the odd and even run lengths; ``chi[i][j]`` is 1 when
    the runs of a_(i+1) and b_(j+1) are non-adjacent on the circle and long
    enough to pair up.  ``witness`` realizes ``bound`` inside the domain.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    chi: tuple[tuple[int, ...], ...]
    bound: int
    witness: Collection


def unbalanced_witness(a: Subset) -> UnbalancedBound:
    """Construct the explicit witness collection meeting the closed-form bound.

    Three families over the canonically rotated circle: per-run suffix pairs,
    cross-run suffix pairs for qualifying non-adjacent run pairs, and the
    boundary intervals.  The result is rotated back to the input coordinates.
    Requires the set and its complement to be non-separated (at least four runs).
    """
    part = circle_partition(a)
    n, k, u = a.n, part.k, part.u
    if u < 2:
        raise ValueError(
            "set and complement are weakly separated; the witness construction needs at least four runs"
        )
    lengths = part.lengths
    starts = []
    pos = 1
    for p in lengths:
        starts.append(pos)
        pos += p
    av = tuple(lengths[2 * i] for i in range(u))
    bv = tuple(lengths[2 * i + 1] for i in range(u))

    def interval_mask(lo: int, hi: int) -> int:
        return cyclic_interval((lo - 1) % n + 1, (hi - 1) % n + 1, n).mask

    witness: set[int] = set()
    for i in range(1, n + 1):
        witness.add(interval_mask(i, i + k - 1))
    for idx, p in enumerate(lengths):
        s0 = starts[idx]
        for x, y in itertools.combinations(range(s0, s0 + p), 2):
            witness.add(interval_mask(x - k + s0 + p - y, x - 1) | interval_mask(y, s0 + p - 1))

    def chi_entry(i: int, j: int) -> int:
        # runs 2i-1 and 2j are adjacent on the circle iff j = i or j = i-1 (mod u)
        if (j - i) % u in (0, u - 1):
            return 0
        return 1 if av[i - 1] + bv[j - 1] >= k else 0

    chi = tuple(
        tuple(chi_entry(i, j) if i != j else 0 for j in range(1, u + 1))
        for i in range(1, u + 1)
    )
    cross_total = 0
    for i in range(1, u + 1):
        for j in range(i + 1, u + 1):
            if not chi[i - 1][j - 1]:
                continue
            s0 = starts[2 * (i - 1)]
            t0 = starts[2 * (j - 1) + 1]
            ai, bj = av[i - 1], bv[j - 1]
            cross_total += ai + bj - k + 1
            for x in range(s0, s0 + ai):
                for y in range(t0, t0 + bj):
                    piece = interval_mask(x, s0 + ai - 1) | interval_mask(y, t0 + bj - 1)
                    if piece.bit_count() == k:
                        witness.add(piece)
    bound = (
        2 * k
        + sum(comb(x, 2) for x in av)
        + sum(comb(x, 2) for x in bv)
        + cross_total
    )
    if len(witness) != bound:
        raise RuntimeError(
            f"witness construction produced {len(witness)} sets, bound says {bound}"
        )
    rotated_back = Collection(Subset(m, n).rotate(-part.offset) for m in witness)
    return UnbalancedBound(av, bv, chi, bound, rotated_back)


# --- four-region element profile ---------------------------------------------

@dataclass(frozen=True)
class ElementProfile:
    """Certificate that a domain element decomposes into four circle regions.

    Walking clockwise: (alpha, beta) lies between I and J on one side, then
    [beta, gamma] avoids everything outside the intersection, (gamma, delta)
    lies between I and J again, and [delta, alpha] covers the whole union.
    Endpoint run indices are 1-based positions into the pair's circle
    partition; None when the corresponding region misses the symmetric
    difference entirely.
    """

    alpha: int
    beta: int
    gamma: int
    delta: int
    left_endpoint: int | None
    right_endpoint: int | None
    internal: tuple[int, ...]


def _region_masks(alpha: int, beta: int, gamma: int, delta: int, n: int) -> tuple[int, int, int, int]:
    def open_arc(a: int, b: int) -> int:
        if (b - a) % n in (0, 1):
            return 0
        return cyclic_interval(a % n + 1, (b - 2) % n + 1, n).mask

    def closed_arc(a: int, b: int) -> int:
        return cyclic_interval(a, b, n).mask

    return (
        open_arc(alpha, beta),
        closed_arc(beta, gamma),
        open_arc(gamma, delta),
        closed_arc(delta, alpha),
    )


def characterize_element(ctx: PairContext, r: Subset) -> ElementProfile:
    """Search for the lexicographically least valid four-tuple (alpha, beta, gamma, delta).

    Containment of the reduced endpoint regions in single runs is enforced on
    the open arcs (alpha, beta) and (gamma, delta); the half-open variants are
    not total over balanced domains.  Exhaustive over all cyclically arranged
    tuples, so O(n^4) validity checks per element.
    """
    if not ctx.balanced:
        raise ValueError("element profiles are defined for balanced pairs only")
    if r.n != ctx.i.n:
        raise GroundSetMismatch(f"ground sets differ: [{r.n}] vs [{ctx.i.n}]")
    if len(r) != ctx.m or not (is_weakly_separated(r, ctx.i) and is_weakly_separated(r, ctx.j)):
        raise ValueError("element is not a member of the pair domain")
    n = r.n
    imask, jmask, rmask = ctx.i.mask, ctx.j.mask, r.mask
    diff = imask ^ jmask
    inter = imask & jmask
    union = imask | jmask
    assert ctx.partition is not None
    # preimages in [n] of the circle-partition runs: pure-mask containment
    # tests replace explicit projections (proj is an order bijection on the
    # symmetric difference)
    pos_to_elem = ctx.sym_diff
    preimages = []
    for iv in ctx.partition.intervals_unrotated():
        pm = 0
        for p in iv.elements():
            pm |= 1 << (pos_to_elem[p - 1] - 1)
        preimages.append(pm)

    def between(region: int) -> bool:
        ri, rr, rj = imask & region, rmask & region, jmask & region
        return (ri & ~rr == 0 and rr & ~rj == 0) or (rj & ~rr == 0 and rr & ~ri == 0)

    def run_index(region: int) -> int | None:
        cell = region & diff
        if cell == 0:
            return None
        for pos, pre in enumerate(preimages):
            if cell & ~pre == 0:
                return pos + 1
        return None

    for alpha, beta, gamma, delta in itertools.product(range(1, n + 1), repeat=4):
        ob = (beta - alpha) % n
        og = (gamma - alpha) % n
        od = (delta - alpha - 1) % n + 1
        if ob == 0 or og < ob or od <= og:
            continue
        reg1, reg2, reg3, reg4 = _region_masks(alpha, beta, gamma, delta, n)
        if not between(reg1):
            continue
        if rmask & reg2 & ~inter:
            continue
        if not between(reg3):
            continue
        if union & reg4 & ~rmask:
            continue
        if (reg1 & diff) and run_index(reg1) is None:
            continue
        if (reg3 & diff) and run_index(reg3) is None:
            continue
        left = run_index(reg3)
        right = run_index(reg1)
        internal = tuple(
            pos + 1
            for pos, pre in enumerate(preimages)
            if pre & ~rmask == 0 and pos + 1 not in (left, right)
        )
        return ElementProfile(alpha, beta, gamma, delta, left, right, internal)
    raise ProfileNotFound(
        f"no valid four-region profile for {r}; the element or the context is out of contract"
    )


# --- chains inside maximal chord separated collections ------------------------

def chord_chain(w: Collection, u: Subset, v: Subset, validate: bool = True) -> list[Subset]:
    """Nested chain U = S_u c ... c S_v = V with all four decorated variants present.

    Each chain member S must have S, S+{1}, S+{n}, S+{1,n} in the collection.
    The collection must be maximal chord separated over the full power set and
    already contain the eight decorated variants of U and V.  Returns the
    lexicographically least chain; raises ChainNotFound if none exists, which
    would contradict the guarantee this search certifies.  ``validate=False``
    skips the quadratic collection checks when the caller already knows the
    collection is maximal chord separated.
    """
    n = w.n
    if u.n != n or v.n != n:
        raise GroundSetMismatch("chain endpoints live on a different ground set")
    interior = cyclic_interval(2, n - 1, n).mask if n >= 3 else 0
    if u.mask & ~v.mask or (u.mask | v.mask) & ~interior:
        raise ValueError("need U inside V inside [2, n-1]")
    members = set(w.masks)
    lo = 1 << 0
    hi = 1 << (n - 1)

    def decorated_ok(mask: int) -> bool:
        return all(m in members for m in (mask, mask | lo, mask | hi, mask | lo | hi))

    for mask in (u.mask, v.mask):
        if not decorated_ok(mask):
            raise ValueError("an endpoint is missing one of its four decorated variants")
    masks = w.masks
    if validate:
        for a in range(len(masks)):
            for b in range(a + 1, len(masks)):
                if not _chord_separated_masks(masks[a], masks[b], n):
                    raise ValueError("collection is not chord separated")
        for m in range(1 << n):
            if m not in members and all(_chord_separated_masks(m, x, n) for x in masks):
                raise ValueError("collection is not maximal chord separated")

    target = v.mask
    dead: set[int] = set()

    def extend(mask: int) -> list[int] | None:
        if mask == target:
            return [mask]
        if mask in dead:
            return None
        free = target & ~mask
        while free:
            bit = free & -free
            free &= free - 1
            nxt = mask | bit
            if decorated_ok(nxt):
                rest = extend(nxt)
                if rest is not None:
                    return [mask] + rest
        dead.add(mask)
        return None

    chain = extend(u.mask)
    if chain is None:
        raise ChainNotFound(
            "no nested chain with all decorated variants present; "
            "this contradicts the guarantee for maximal chord separated collections"
        )
    return [Subset(m, n) for m in chain]
