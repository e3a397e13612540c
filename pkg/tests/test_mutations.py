import itertools

import pytest

from weaksep import (
    BigInstance,
    Collection,
    NotMaximal,
    SquareMove,
    Subset,
    apply_square_move,
    boundary_intervals,
    build_compat_graph,
    complete_to_maximal,
    cluster_distance,
    enumerate_maximal_cliques,
    explore_mutation_graph,
    find_square_moves,
    is_weakly_separated,
    mutation_distance,
    node_key,
)


def sub(elems, n):
    return Subset.of(elems, n)


def coll(sets, n):
    return Collection(Subset.of(s, n) for s in sets)


def grid(n, k):
    return Collection(Subset.of(c, n) for c in itertools.combinations(range(1, n + 1), k))


SMALL = coll([[1, 2], [2, 3], [3, 4], [1, 4], [1, 3]], 4)


class TestFindSquareMoves:
    def test_single_move(self):
        moves = find_square_moves(SMALL)
        assert len(moves) == 1
        m = moves[0]
        assert m.removed == sub([1, 3], 4) and m.added == sub([2, 4], 4)
        assert (m.a, m.b, m.c, m.d) == (1, 2, 3, 4) and len(m.s) == 0

    def test_singleton_grid_has_no_moves(self):
        c = grid(3, 1)
        assert find_square_moves(c) == []

    def test_moves_have_all_side_sets(self):
        c = complete_to_maximal(coll([[1, 3, 5]], 6), grid(6, 3))
        for m in find_square_moves(c):
            for pair in ((m.a, m.b), (m.b, m.c), (m.c, m.d), (m.d, m.a)):
                side = Subset(m.s.mask | 1 << (pair[0] - 1) | 1 << (pair[1] - 1), 6)
                assert side in c
            assert m.removed in c and m.added not in c

    def test_not_maximal_flagged(self):
        with pytest.raises(NotMaximal):
            find_square_moves(coll([[1, 2], [2, 3]], 4))
        with pytest.raises(NotMaximal):
            find_square_moves(coll([[1, 3], [2, 4], [1, 2], [2, 3], [3, 4], [1, 4]], 4))


class TestApplySquareMove:
    def test_exchange(self):
        m = find_square_moves(SMALL)[0]
        out = apply_square_move(SMALL, m)
        assert out == coll([[1, 2], [2, 3], [3, 4], [1, 4], [2, 4]], 4)

    def test_involution(self):
        m = find_square_moves(SMALL)[0]
        out = apply_square_move(SMALL, m)
        back = [r for r in find_square_moves(out) if r.removed == m.added]
        assert len(back) == 1
        assert apply_square_move(out, back[0]) == SMALL
        assert back[0] == m.inverse()

    def test_missing_source_rejected(self):
        m = SquareMove(Subset(0, 4), 1, 2, 3, 4)
        broken = coll([[1, 2], [2, 3], [3, 4], [1, 4], [2, 4]], 4)
        with pytest.raises(ValueError):
            apply_square_move(broken, m)


class TestExplore:
    def test_two_by_two_grid(self):
        g = explore_mutation_graph(complete_to_maximal(coll([[1, 3]], 4), grid(4, 2)))
        assert g.node_count == 2 and g.edge_count == 1 and g.complete

    def test_three_six_grid(self):
        seed = complete_to_maximal(Collection.from_masks([], 6), grid(6, 3))
        g = explore_mutation_graph(seed)
        assert g.complete and g.node_count == 34
        b36 = set(boundary_intervals(3, 6).masks)
        for node in g.nodes:
            assert len(node) == 10
            assert b36 <= set(node)
            for a, b in itertools.combinations(node, 2):
                assert is_weakly_separated(Subset(a, 6), Subset(b, 6))

    def test_budget_one(self):
        seed = complete_to_maximal(coll([[1, 3]], 4), grid(4, 2))
        g = explore_mutation_graph(seed, budget=1)
        assert g.node_count == 1 and not g.complete

    def test_connectivity_matches_clique_enumeration(self):
        # the 2-row grids carry the Catalan counts 2, 5, 14
        for n, k, count in ((4, 2, 2), (5, 2, 5), (6, 2, 14), (6, 3, 34)):
            seed = complete_to_maximal(Collection.from_masks([], n), grid(n, k))
            g = explore_mutation_graph(seed)
            expected = {c.masks for c in enumerate_maximal_cliques(build_compat_graph(grid(n, k)))}
            assert set(g.nodes) == expected, (n, k)
            assert g.node_count == count, (n, k)


class TestMutationDistance:
    def test_one_move_apart(self):
        r = mutation_distance(sub([1, 3], 4), sub([2, 4], 4))
        assert r.distance == 1 and len(r.path) == 1
        # matches the closed form for the all-singleton four-run shape
        assert r.distance == 1 * 1 * 1 - 2 * 0

    def test_paper_six_case(self):
        r = mutation_distance(sub([1, 2, 4], 6), sub([3, 5, 6], 6))
        assert r.distance == 2

    def test_weakly_separated_pair(self):
        r = mutation_distance(sub([1, 2], 4), sub([2, 3], 4))
        assert r.distance == 0 and r.path == ()
        assert sub([1, 2], 4) in r.source and sub([2, 3], 4) in r.source

    def test_path_witnesses_distance(self):
        i, j = sub([1, 2, 4], 6), sub([3, 5, 6], 6)
        r = mutation_distance(i, j)
        assert i in r.source and j in r.target
        cur = r.source
        for move in r.path:
            cur = apply_square_move(cur, move)
        assert cur == r.target
        assert len(r.path) == r.distance

    def test_lower_bounded_by_cluster_distance(self):
        pairs = [([1, 2, 4], [3, 5, 6], 6), ([1, 3, 5], [2, 4, 6], 6), ([1, 3], [2, 4], 4)]
        for i, j, n in pairs:
            d = cluster_distance(sub(i, n), sub(j, n)).value
            big_d = mutation_distance(sub(i, n), sub(j, n)).distance
            assert d <= big_d

    def test_budget_exhaustion_reported(self):
        r = mutation_distance(sub([1, 2, 4], 6), sub([3, 5, 6], 6), budget=3)
        assert r.budget_exhausted and r.distance is None
        assert r.to_json()["distance"] == "budget-exhausted"

    def test_big_instance_gate(self):
        with pytest.raises(BigInstance):
            mutation_distance(sub([1, 2, 5, 6], 8), sub([3, 4, 7, 8], 8))

    def test_determinism(self):
        a = mutation_distance(sub([1, 2, 4], 6), sub([3, 5, 6], 6))
        b = mutation_distance(sub([1, 2, 4], 6), sub([3, 5, 6], 6))
        assert a.to_json() == b.to_json()

    def test_matches_full_graph_oracle(self):
        # unidirectional BFS over the fully explored graph versus the
        # bidirectional engine, for every same-size pair of two small grids
        import collections

        from weaksep.mutations import _neighbors

        for n, k in ((6, 2), (6, 3)):
            seed = complete_to_maximal(Collection.from_masks([], n), grid(n, k))
            g = explore_mutation_graph(seed)
            nodes = list(g.nodes)
            index = {node: t for t, node in enumerate(nodes)}
            adj = [[index[child] for child, _ in _neighbors(node, n)] for node in nodes]

            def oracle(i_mask, j_mask):
                dist = {}
                queue = collections.deque()
                for t, node in enumerate(nodes):
                    if i_mask in node:
                        dist[t] = 0
                        queue.append(t)
                while queue:
                    t = queue.popleft()
                    if j_mask in nodes[t]:
                        return dist[t]
                    for s in adj[t]:
                        if s not in dist:
                            dist[s] = dist[t] + 1
                            queue.append(s)
                raise AssertionError("target unreachable")

            for i_combo in itertools.combinations(range(1, n + 1), k):
                for j_combo in itertools.combinations(range(1, n + 1), k):
                    i, j = sub(i_combo, n), sub(j_combo, n)
                    assert mutation_distance(i, j).distance == oracle(i.mask, j.mask)


import os


@pytest.mark.skipif(os.environ.get("WEAKSEP_LONG") != "1", reason="runs under WEAKSEP_LONG=1")
class TestBigGrid:
    def test_four_of_eight_graph_matches_clique_census(self):
        # the gated 4-of-8 grid is in fact fully explorable: 5470 maximal
        # collections, found identically by moves and by clique enumeration
        seed = complete_to_maximal(Collection.from_masks([], 8), grid(8, 4))
        g = explore_mutation_graph(seed)
        assert g.complete and g.node_count == 5470 and g.edge_count == 18960
        expected = {c.masks for c in enumerate_maximal_cliques(build_compat_graph(grid(8, 4)))}
        assert set(g.nodes) == expected


class TestNodeKey:
    def test_stable_and_distinct(self):
        k1 = node_key((1, 2, 3))
        assert k1 == node_key((1, 2, 3))
        assert k1 != node_key((1, 2, 4))
        assert 0 <= k1 < 1 << 64
