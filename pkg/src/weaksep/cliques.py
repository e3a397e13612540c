"""Canonical collections, compatibility graphs, and exact clique machinery.

A domain plus a pairwise predicate becomes a graph; maximal weakly separated
collections are its maximal cliques.  Enumeration (Bron-Kerbosch with
pivoting) and maximum-clique size (branch and bound with greedy-coloring
bounds) are coded independently so the two routes can cross-validate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .ground import (
    GroundSetMismatch,
    Subset,
    _check_ground_size,
    _chord_separated_masks,
    _weakly_separated_masks,
)

RELATIONS = ("weak", "chord")


class Collection:
    """A duplicate-free list of subsets over one ground set, in ascending mask order.

    The canonical order makes equality, hashing, and serialized output
    well-defined regardless of construction order.
    """

    __slots__ = ("n", "masks")

    def __init__(self, items: Iterable[Subset]):
        items = list(items)
        if not items:
            raise ValueError("empty collection needs an explicit ground size; use Collection.from_masks([], n)")
        n = items[0].n
        for s in items:
            if s.n != n:
                raise GroundSetMismatch(f"mixed ground sets in collection: [{n}] vs [{s.n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", tuple(sorted(set(s.mask for s in items))))

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "Collection":
        _check_ground_size(n)
        obj = cls.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "masks", tuple(sorted(set(masks))))
        for m in obj.masks:
            if not 0 <= m < (1 << n):
                raise ValueError(f"mask {m:#x} has bits outside [1, {n}]")
        return obj

    def subsets(self) -> tuple[Subset, ...]:
        return tuple(Subset(m, self.n) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.subsets())

    def __contains__(self, s: Subset) -> bool:
        return s.n == self.n and s.mask in self.masks

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Collection)
            and self.n == other.n
            and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Collection(n={self.n}, {[list(Subset(m, self.n).elements()) for m in self.masks]})"

    def to_json(self) -> list[list[int]]:
        return [Subset(m, self.n).to_json() for m in self.masks]


def _relation_predicate(relation: str, n: int) -> Callable[[int, int], bool]:
    if relation == "weak":
        return lambda a, b: _weakly_separated_masks(a, b)
    if relation == "chord":
        return lambda a, b: _chord_separated_masks(a, b, n)
    raise ValueError(f"unknown relation {relation!r}; expected one of {RELATIONS}")


@dataclass(frozen=True)
class CompatGraph:
    """A domain with one adjacency bitset per vertex (symmetric, irreflexive)."""

    vertices: Collection
    adj: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.adj)


def build_compat_graph(domain: Collection, relation: str = "weak") -> CompatGraph:
    """Materialize the graph whose edges are exactly the related pairs."""
    if len(domain) == 0:
        raise ValueError("domain is empty")
    pred = _relation_predicate(relation, domain.n)
    masks = domain.masks
    m = len(masks)
    adj = [0] * m
    for i in range(m):
        mi = masks[i]
        for j in range(i + 1, m):
            if pred(mi, masks[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return CompatGraph(domain, tuple(adj))


def _bron_kerbosch(adj: tuple[int, ...], visit: Callable[[list[int]], None]) -> None:
    """Visit every maximal clique exactly once (pivoting on max candidate-degree).

    Ties in the pivot choice break toward the lowest vertex index, which fixes
    the recursion tree and hence the visit order.
    """
    m = len(adj)

    def expand(r: list[int], p: int, x: int) -> None:
        if p == 0 and x == 0:
            visit(r)
            return
        pivot, best = -1, -1
        q = p | x
        while q:
            u = (q & -q).bit_length() - 1
            q &= q - 1
            d = (p & adj[u]).bit_count()
            if d > best:
                best, pivot = d, u
        cand = p & ~adj[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    if m:
        expand([], (1 << m) - 1, 0)


def enumerate_maximal_cliques(g: CompatGraph) -> list[Collection]:
    """All inclusion-maximal cliques, each once, in canonical stream order."""
    masks = g.vertices.masks
    n = g.vertices.n
    found: list[tuple[int, ...]] = []
    _bron_kerbosch(g.adj, lambda r: found.append(tuple(sorted(masks[v] for v in r))))
    found.sort()
    return [Collection.from_masks(t, n) for t in found]


def max_clique_size(g: CompatGraph) -> int:
    """Exact maximum-clique size by branch and bound with greedy-coloring bounds.

    Independent of the enumerator on purpose: the two answers cross-check each
    other in the test suite.
    """
    adj = g.adj
    m = len(adj)
    if m == 0:
        return 0
    best = 0

    def coloring(p: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bound: list[int] = []
        color = 0
        uncolored = p
        while uncolored:
            color += 1
            q = uncolored
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~adj[v]
                q &= q - 1
                uncolored &= ~(1 << v)
                order.append(v)
                bound.append(color)
        return order, bound

    def expand(size: int, p: int) -> None:
        nonlocal best
        order, bound = coloring(p)
        for i in range(len(order) - 1, -1, -1):
            if size + bound[i] <= best:
                return
            v = order[i]
            nxt = p & adj[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    expand(0, (1 << m) - 1)
    return best


@dataclass(frozen=True)
class PurityReport:
    """Aggregate of the maximal-clique sizes of a domain under one relation."""

    domain_size: int
    clique_sizes: dict[int, int] | None
    min_size: int
    max_size: int
    is_pure: bool
    rank: int | None
    clique_count: int | None

    def to_json(self) -> dict:
        if self.clique_sizes is None:
            sizes: dict | str = {"min": self.min_size, "max": self.max_size}
            count: int | str = "not tracked"
        else:
            sizes = {str(k): v for k, v in sorted(self.clique_sizes.items())}
            count = self.clique_count if self.clique_count is not None else 0
        return {
            "domain_size": self.domain_size,
            "pure": self.is_pure,
            "rank": self.rank,
            "clique_sizes": sizes,
            "clique_count": count,
        }


def purity_report(domain: Collection, relation: str = "weak", stream: bool = False) -> PurityReport:
    """Enumerate all maximal cliques of the domain and decide purity.

    With ``stream=True`` only the min and max clique sizes are kept, for
    domains whose maximal-clique count is too large to tabulate.
    """
    if len(domain) == 0:
        return PurityReport(0, {}, 0, 0, True, None, 0)
    g = build_compat_graph(domain, relation)
    if stream:
        lo = hi = -1

        def visit(r: list[int]) -> None:
            nonlocal lo, hi
            s = len(r)
            lo = s if lo < 0 else min(lo, s)
            hi = max(hi, s)

        _bron_kerbosch(g.adj, visit)
        pure = lo == hi
        return PurityReport(len(domain), None, lo, hi, pure, hi if pure else None, None)
    sizes: Counter[int] = Counter()
    _bron_kerbosch(g.adj, lambda r: sizes.update((len(r),)))
    lo, hi = min(sizes), max(sizes)
    pure = lo == hi
    return PurityReport(
        len(domain), dict(sizes), lo, hi, pure, hi if pure else None, sum(sizes.values())
    )


def complete_to_maximal(partial: Collection, domain: Collection) -> Collection:
    """Grow a weakly separated collection greedily to a maximal one in the domain.

    Candidates are taken in canonical (ascending mask) order, so the result is
    deterministic.  The input must lie inside the domain and be pairwise
    weakly separated.
    """
    if partial.n != domain.n:
        raise GroundSetMismatch(f"ground sets differ: [{partial.n}] vs [{domain.n}]")
    domain_set = set(domain.masks)
    for m in partial.masks:
        if m not in domain_set:
            raise ValueError(f"partial collection member {Subset(m, partial.n)} not in domain")
    chosen = list(partial.masks)
    for a_idx, a in enumerate(chosen):
        for b in chosen[a_idx + 1:]:
            if not _weakly_separated_masks(a, b):
                raise ValueError(
                    f"partial collection is not weakly separated: "
                    f"{Subset(a, partial.n)} vs {Subset(b, partial.n)}"
                )
    have = set(chosen)
    for m in domain.masks:
        if m in have:
            continue
        if all(_weakly_separated_masks(m, c) for c in chosen):
            chosen.append(m)
            have.add(m)
    return Collection.from_masks(chosen, domain.n)
