"""Acceptance suite: one test per criterion, exact integer equalities throughout.

Each test prints a single pass line with its elapsed time (visible under
``pytest -s``) and enforces the stated runtime ceiling.  Two long-running
extras (the power-set chord census at n=6 and the 16-element move-distance
case) are gated behind WEAKSEP_LONG=1.
"""

import itertools
import json
import os
import pathlib
import random
import time
from math import comb

import pytest

from weaksep import (
    Collection,
    Subset,
    boundary_intervals,
    build_compat_graph,
    build_domain_AIJ,
    characterize_element,
    chord_chain,
    circle_partition,
    cluster_distance,
    complete_to_maximal,
    canonical_permutation,
    check_no_interior,
    apply_square_move,
    enumerate_maximal_cliques,
    explore_mutation_graph,
    find_square_moves,
    is_balanced,
    is_chord_separated,
    is_weakly_separated,
    length_of,
    lr_chain,
    lr_domain,
    max_clique_size,
    move_projection_effect,
    mutation_distance,
    necklace_from_perm,
    p4_counts,
    perm_from_necklace,
    phi,
    phi_subset,
    purity_report,
    rank_formula,
    reduce_pair,
    tau_kn,
    unbalanced_witness,
)
from weaksep.necklaces import DecoratedPermutation

LONG = os.environ.get("WEAKSEP_LONG") == "1"


def sub(elems, n):
    return Subset.of(elems, n)


def k_subsets(n, k):
    return [Subset.of(c, n) for c in itertools.combinations(range(1, n + 1), k)]


def grid(n, k):
    return Collection(k_subsets(n, k))


class _Timer:
    def __init__(self, number, limit, label):
        self.number, self.limit, self.label = number, limit, label

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        if exc_type is None:
            print(f"[criterion {self.number:02d}] PASS in {elapsed:6.2f}s - {self.label}")
            if self.limit is not None:
                assert elapsed < self.limit, f"criterion {self.number} over budget: {elapsed:.1f}s"
        else:
            print(f"[criterion {self.number:02d}] FAIL in {elapsed:6.2f}s - {self.label}")


def test_criterion_01_predicate_ground_truth():
    with _Timer(1, 10, "separation predicates and equal-size equivalence (n <= 8)"):
        assert not is_weakly_separated(sub([1, 2, 4], 6), sub([3, 5, 6], 6))
        pair = (sub([1, 3], 4), sub([2], 4))
        assert is_chord_separated(*pair) and not is_weakly_separated(*pair)
        for n in range(1, 9):
            subsets = [Subset(m, n) for m in range(1 << n)]
            by_size = {}
            for s in subsets:
                by_size.setdefault(len(s), []).append(s)
            for bucket in by_size.values():
                for s in bucket:
                    for t in bucket:
                        assert is_weakly_separated(s, t) == is_chord_separated(s, t)


def test_criterion_02_classical_purity():
    with _Timer(2, 60, "grid and power-set ranks by exhaustive clique enumeration"):
        for n, k, rank in ((4, 2, 5), (5, 2, 7), (6, 3, 10)):
            rep = purity_report(grid(n, k), "weak")
            assert rep.is_pure and rep.rank == rank == k * (n - k) + 1
        for n, rank in ((4, 11), (5, 16)):
            rep = purity_report(Collection.from_masks(range(1 << n), n), "weak")
            assert rep.is_pure and rep.rank == rank == comb(n, 2) + n + 1


def test_criterion_03_balanced_complementary_rank():
    with _Timer(3, 600, "purity and rank of every balanced half-size set, k in {3,4,5}"):
        for k in (3, 4, 5):
            balanced = [a for a in k_subsets(2 * k, k) if is_balanced(a)]
            assert balanced, k
            for a in balanced:
                rep = purity_report(build_domain_AIJ(a, a.complement()), "weak")
                expected = rank_formula(reduce_pair(a, a.complement()))
                assert rep.is_pure and rep.rank == expected, a
        spot = sub([1, 4, 5, 8, 9, 10], 12)
        rep = purity_report(build_domain_AIJ(spot, spot.complement()), "weak")
        assert rep.is_pure and rep.rank == 19


def test_criterion_04_listed_domain_exact():
    with _Timer(4, 60, "the 14-set pair domain and its four maximal collections"):
        i = sub([1, 2, 4, 6, 8], 10)
        dom = build_domain_AIJ(i, i.complement())
        expected = Collection(
            list(boundary_intervals(5, 10))
            + [
                sub([1, 2, 3, 4, 9], 10),
                sub([1, 3, 4, 5, 6], 10),
                sub([2, 7, 8, 9, 10], 10),
                sub([5, 6, 7, 8, 10], 10),
            ]
        )
        assert dom == expected and len(dom) == 14
        cliques = enumerate_maximal_cliques(build_compat_graph(dom, "weak"))
        assert len(cliques) == 4 and all(len(c) == 12 for c in cliques)


def test_criterion_05_cluster_distances():
    with _Timer(5, 300, "exact distances, closed form on balanced, bound on all (k <= 4)"):
        assert cluster_distance(sub([1, 2, 4], 6), sub([3, 5, 6], 6)).value == 2
        assert cluster_distance(sub([1, 3, 5], 6), sub([2, 4, 6], 6)).value == 4
        for k in (2, 3, 4):
            for a in k_subsets(2 * k, k):
                exact = cluster_distance(a, a.complement(), "exact").value
                closed = cluster_distance(a, a.complement(), "formula")
                assert exact <= closed.value, a
                if is_balanced(a):
                    assert closed.exact and exact == closed.value, a


def test_criterion_06_general_pair_rank():
    with _Timer(6, 600, "non-complementary rank formula, spot case plus 20 random pairs"):
        i, j = sub([1, 3, 5, 7], 7), sub([2, 4, 6, 7], 7)
        ctx = reduce_pair(i, j)
        assert rank_formula(ctx) == 9 == 4 * 3 - 9 + 6
        rep = purity_report(build_domain_AIJ(i, j), "weak")
        assert rep.is_pure and rep.rank == 9
        rng = random.Random(20240808)
        found = 0
        while found < 20:
            n = rng.randint(5, 9)
            m = rng.randint(2, n - 2)
            i = Subset.of(rng.sample(range(1, n + 1), m), n)
            j = Subset.of(rng.sample(range(1, n + 1), m), n)
            ctx = reduce_pair(i, j)
            if not ctx.balanced:
                continue
            found += 1
            rep = purity_report(build_domain_AIJ(i, j), "weak")
            assert rep.is_pure and rep.rank == rank_formula(ctx), (i, j)


def test_criterion_07_left_right_purity():
    with _Timer(7, 300, "left/right domains pure with unique nested chains, n = 2..5"):
        for n in range(2, 6):
            dom = lr_domain(n)
            rep = purity_report(dom, "weak")
            assert rep.is_pure and rep.rank == comb(n, 2) + n + 1
            for w in enumerate_maximal_cliques(build_compat_graph(dom, "weak")):
                chain = lr_chain(w, n)  # raises unless each level set exists uniquely
                assert len(chain.sets) == n
                for m, s in enumerate(chain.sets):
                    assert len(s) == m
                for a, b in zip(chain.sets, chain.sets[1:]):
                    assert set(a) < set(b)


def test_criterion_08_chord_census_and_chains():
    sizes = [3, 4, 5] + ([6] if LONG else [])
    label = f"chord-separation census and chains, n in {sizes}"
    with _Timer(8, None, label):
        for n in sizes:
            dom = Collection.from_masks(range(1 << n), n)
            expected = sum(comb(n, t) for t in range(4))
            cliques = enumerate_maximal_cliques(build_compat_graph(dom, "chord"))
            assert all(len(w) == expected for w in cliques), n
            lo, hi = 1 << 0, 1 << (n - 1)
            interior = [x for x in range(2, n)]
            for w in cliques:
                have = set(w.masks)

                def decorated(mask):
                    return all(m in have for m in (mask, mask | lo, mask | hi, mask | lo | hi))

                for vc in itertools.chain.from_iterable(
                    itertools.combinations(interior, r) for r in range(len(interior) + 1)
                ):
                    vmask = sum(1 << (x - 1) for x in vc)
                    if not decorated(vmask):
                        continue
                    for uc in itertools.chain.from_iterable(
                        itertools.combinations(vc, r) for r in range(len(vc) + 1)
                    ):
                        umask = sum(1 << (x - 1) for x in uc)
                        if not decorated(umask):
                            continue
                        chain = chord_chain(
                            w, Subset(umask, n), Subset(vmask, n), validate=False
                        )
                        assert chain[0].mask == umask and chain[-1].mask == vmask
                        for a, b in zip(chain, chain[1:]):
                            assert a.issubset(b) and len(b) == len(a) + 1


def test_criterion_09_necklaces():
    with _Timer(9, 600, "necklace table, round trips, closed-form lengths, inside-domain purity"):
        fig_perm = DecoratedPermutation.make((4, 8, 7, 10, 9, 3, 2, 1, 6, 5))
        nk = necklace_from_perm(fig_perm, 5)
        assert [s.elements() for s in nk.sets] == [
            (1, 2, 3, 5, 6),
            (2, 3, 4, 5, 6),
            (3, 4, 5, 6, 8),
            (4, 5, 6, 7, 8),
            (5, 6, 7, 8, 10),
            (6, 7, 8, 9, 10),
            (3, 7, 8, 9, 10),
            (2, 3, 8, 9, 10),
            (1, 2, 3, 9, 10),
            (1, 2, 3, 6, 10),
        ]
        for k in range(1, 6):
            for a in k_subsets(2 * k, k):
                p = canonical_permutation(a)
                assert perm_from_necklace(necklace_from_perm(p, k)) == p
                lengths = circle_partition(a).lengths
                assert length_of(p, k).length == k * k - sum(comb(x, 2) for x in lengths)
        from weaksep.mutations import _moves_of
        from weaksep.necklaces import domain_in_for_necklace

        checked = 0
        for n in range(2, 7):
            for images in itertools.permutations(range(1, n + 1)):
                if any(images[t - 1] == t for t in range(1, n + 1)):
                    continue
                p = DecoratedPermutation.make(images)
                inv = p.inverse_images()
                k = sum(1 for j in range(1, n + 1) if j < inv[j - 1])
                try:
                    neck = necklace_from_perm(p, k)
                except ValueError:
                    continue
                if not neck.connected:
                    continue
                checked += 1
                dom = domain_in_for_necklace(neck)
                cliques = enumerate_maximal_cliques(build_compat_graph(dom, "weak"))
                target = length_of(p, k).length + 1
                assert all(len(c) == target for c in cliques), (images, k)
                nodes = {c.masks for c in cliques}
                seen = {cliques[0].masks}
                frontier = [cliques[0].masks]
                while frontier:
                    nxt = []
                    for node in frontier:
                        member = frozenset(node)
                        for s, a, b, c_, d, to in _moves_of(node, member, n):
                            removed = s | 1 << (a - 1) | 1 << (c_ - 1)
                            child = tuple(sorted((set(node) - {removed}) | {to}))
                            if child in nodes and child not in seen:
                                seen.add(child)
                                nxt.append(child)
                    frontier = nxt
                assert seen == nodes, (images, k)
        # 1 + 2 + 7 + 34 + 206 connected necklaces over n = 2..6
        assert checked == 250


def test_criterion_10_four_run_exact_values():
    with _Timer(10, 10, "four-run shape (2,1,1,2): max 8, distance 2, move distance 2"):
        a = sub([1, 2, 4], 6)
        comp = a.complement()
        assert max_clique_size(build_compat_graph(build_domain_AIJ(a, comp), "weak")) == 8
        assert cluster_distance(a, comp).value == 2
        result = mutation_distance(a, comp)
        p = p4_counts(a)
        assert result.distance == 2 == p.cuboid_formula


@pytest.mark.skipif(not LONG, reason="16-element move distance runs under WEAKSEP_LONG=1")
def test_criterion_10_long_four_run_eight():
    with _Timer(10, None, "four-run shape (2,2,2,2): max 12, distance 5, move distance 6"):
        a = sub([1, 2, 5, 6], 8)
        comp = a.complement()
        assert max_clique_size(build_compat_graph(build_domain_AIJ(a, comp), "weak")) == 12
        assert cluster_distance(a, comp).value == 5
        result = mutation_distance(a, comp, big=True)
        if result.budget_exhausted:
            print("  (budget exhausted before certainty: reported, not a failure)")
        else:
            assert result.distance == 6 == p4_counts(a).cuboid_formula


def test_criterion_11_unbalanced_witness():
    with _Timer(11, 300, "witness collections meet the closed-form bound, k <= 4"):
        for k in (2, 3, 4):
            n = 2 * k
            for a in k_subsets(n, k):
                if circle_partition(a).u < 2:
                    continue  # the set and its complement are weakly separated
                ub = unbalanced_witness(a)
                assert len(ub.witness) == ub.bound
                dom = build_domain_AIJ(a, a.complement())
                members = set(dom.masks)
                masks = ub.witness.masks
                assert all(m in members for m in masks), a
                for x in range(len(masks)):
                    for y in range(x + 1, len(masks)):
                        assert is_weakly_separated(Subset(masks[x], n), Subset(masks[y], n)), a
                assert max_clique_size(build_compat_graph(dom, "weak")) >= ub.bound, a


def test_criterion_12_lattice_counts_and_projection_laws():
    with _Timer(12, 300, "lattice counts (k <= 8) and projection laws on the 3-of-6 graph"):
        for k in range(2, 9):
            for p1 in range(1, k):
                for p2 in range(1, k):
                    p = (p1, p2, k - p1, k - p2)
                    elements = list(range(1, p1 + 1)) + [
                        p1 + p2 + t for t in range(1, p[2] + 1)
                    ]
                    counts = p4_counts(Subset.of(elements, 2 * k))
                    assert counts.p == p
                    assert counts.z_count == counts.z_formula, p
                    assert counts.interior_pq_count == counts.cuboid_formula, p
        splits = [
            (x, y, z, 6 - x - y - z)
            for x in range(1, 4)
            for y in range(1, 5 - x)
            for z in range(1, 6 - x - y)
        ]
        assert len(splits) == 10
        seed = complete_to_maximal(Collection.from_masks([], 6), grid(6, 3))
        graph = explore_mutation_graph(seed)
        assert graph.complete
        for node in graph.node_collections():
            moves = find_square_moves(node)
            for split in splits:
                assert check_no_interior(node, split).ok, (node, split)
                for move in moves:
                    effect = move_projection_effect(node, move, split)
                    before = {v.coords for v in phi(node, split)}
                    after = {
                        v.coords for v in phi(apply_square_move(node, move), split)
                    }
                    if effect.kind == "unchanged":
                        assert before == after, (move, split)
                    else:
                        src = phi_subset(move.removed, split).coords
                        dst = phi_subset(move.added, split).coords
                        assert tuple(dst[t] - src[t] for t in range(4)) == effect.vector


def test_criterion_13_golden_files():
    with _Timer(13, 60, "all golden files regenerate byte-identically"):
        from test_cli import invoke

        golden = pathlib.Path(__file__).parent / "golden"
        manifest = json.loads((golden / "manifest.json").read_text())
        assert manifest
        for name, argv in sorted(manifest.items()):
            code, payload = invoke(argv)
            assert code == 0, name
            assert payload == (golden / name).read_bytes(), name
