"""Cluster distance: how far a pair is from sitting in one maximal collection.

d(I, J) = rank of the ambient grid minus the largest weakly separated
collection compatible with both.  It is zero exactly for weakly separated
pairs, and for balanced pairs the exhaustive search collapses to the closed
form 1 + k^2 - 2k - sum C(p_i, 2).
"""

import itertools

from weaksep import Subset, cluster_distance, is_weakly_separated, reduce_pair

for elems_i, elems_j, n in (
    ([1, 2, 4], [3, 5, 6], 6),
    ([1, 3, 5], [2, 4, 6], 6),
    ([1, 2, 3], [4, 5, 6], 6),
    ([1, 3, 5, 7], [2, 4, 6, 7], 7),
):
    i, j = Subset.of(elems_i, n), Subset.of(elems_j, n)
    exact = cluster_distance(i, j, "exact")
    closed = cluster_distance(i, j, "formula")
    ctx = reduce_pair(i, j)
    note = "balanced" if ctx.balanced else ("separated" if is_weakly_separated(i, j) else "unbalanced")
    flag = "=" if closed.exact else "<="
    print(f"I={i} J={j} over [{n}]  ({note})")
    print(f"  exact d = {exact.value},  closed form gives d {flag} {closed.value}")

# the closed form is an upper bound on every complementary pair of [8]
print("\nupper bound check over every 4-subset of [8]:")
worst = 0
for combo in itertools.combinations(range(1, 9), 4):
    a = Subset.of(combo, 8)
    exact = cluster_distance(a, a.complement(), "exact").value
    bound = cluster_distance(a, a.complement(), "formula").value
    assert exact <= bound
    worst = max(worst, bound - exact)
print(f"  bound minus exact is at most {worst}; never negative")
