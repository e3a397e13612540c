"""Square moves and the move distance between two grid cells.

Maximal collections mutate by exchanging one diagonal for the other inside a
cyclically ordered quadruple whose four sides are present.  The move distance
between I and J is the least number of such exchanges linking a collection
holding I to one holding J, found here by bidirectional layered search.
"""

import itertools

from weaksep import (
    Collection,
    Subset,
    apply_square_move,
    complete_to_maximal,
    explore_mutation_graph,
    mutation_distance,
)


def grid(n, k):
    return Collection(Subset.of(c, n) for c in itertools.combinations(range(1, n + 1), k))


seed = complete_to_maximal(Collection.from_masks([], 6), grid(6, 3))
graph = explore_mutation_graph(seed)
print(f"3-of-6 mutation graph: {graph.node_count} collections, "
      f"{graph.edge_count} moves, fully explored: {graph.complete}")

i, j = Subset.of([1, 2, 4], 6), Subset.of([3, 5, 6], 6)
result = mutation_distance(i, j)
print(f"\nmove distance from {i} to {j}: {result.distance} "
      f"({result.nodes_explored} collections touched)")
print(f"start collection: {[str(s) for s in result.source]}")
cur = result.source
for step, move in enumerate(result.path, start=1):
    cur = apply_square_move(cur, move)
    print(f"  move {step}: drop {move.removed}, add {move.added}")
assert cur == result.target
print(f"end collection:   {[str(s) for s in result.target]}")

far = mutation_distance(Subset.of([1, 3, 5], 6), Subset.of([2, 4, 6], 6))
print(f"\nthe alternating pair needs {far.distance} moves")
