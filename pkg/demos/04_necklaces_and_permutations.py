"""Necklaces, decorated permutations, and the inside domain of a positroid.

A half-size set A determines a canonical permutation (reverse each run, then
shift by k); its necklace is the cyclic table of k-subsets obeying the
one-element transition rule.  The number of alignments of the permutation
prices the inside domain: every maximal collection there has length + 1 sets.
"""

from weaksep import (
    Subset,
    block_reversal_permutation,
    build_compat_graph,
    canonical_permutation,
    circle_partition,
    domain_in_for_necklace,
    enumerate_maximal_cliques,
    length_of,
    necklace_from_perm,
    perm_from_necklace,
)

a = Subset.of([1, 2, 3, 7, 8], 10)
part = circle_partition(a)
print(f"A = {a}, run lengths {part.lengths}")
print(f"run reversal : {block_reversal_permutation(part.lengths)}")
perm = canonical_permutation(a)
print(f"composition  : {perm.images}")

al, length = length_of(perm, 5)
print(f"alignments = {al}, length = 5*5 - {al} = {length}")

nk = necklace_from_perm(perm, 5)
print(f"\nnecklace (connected: {nk.connected}):")
for row in nk.sets:
    print(f"  {row}")
assert perm_from_necklace(nk) == perm

dom = domain_in_for_necklace(nk)
cliques = enumerate_maximal_cliques(build_compat_graph(dom, "weak"))
sizes = {len(c) for c in cliques}
print(f"\ninside domain: {len(dom)} of the 252 subsets; "
      f"{len(cliques)} maximal collections, sizes {sizes} (= length + 1)")
