"""Purity of pair domains: every maximal compatible family has the same size.

The domain of all 5-subsets of [10] compatible with {1,2,4,6,8} and its
complement has 14 members; its four maximal weakly separated collections all
have 12 sets, matching the closed form 2k + sum C(p_i, 2) read off the
alternating run lengths of the pair.
"""

from math import comb

from weaksep import (
    Subset,
    build_compat_graph,
    build_domain_AIJ,
    circle_partition,
    enumerate_maximal_cliques,
    is_balanced,
    is_cyclic_interval,
    purity_report,
    rank_formula,
    reduce_pair,
)

a = Subset.of([1, 2, 4, 6, 8], 10)
comp = a.complement()
part = circle_partition(a)

print(f"A = {a}, complement {comp}")
print(f"circle run lengths: {part.lengths}, balanced: {is_balanced(a)}")
terms = "+".join(str(comb(p, 2)) for p in part.lengths)
print(f"closed-form rank: 2*5 + {terms} = {rank_formula(reduce_pair(a, comp))}")

dom = build_domain_AIJ(a, comp)
print(f"\ndomain has {len(dom)} members:")
for s in dom:
    tag = "boundary interval" if is_cyclic_interval(s) else "extra"
    print(f"  {s}  ({tag})")

report = purity_report(dom, "weak")
print(f"\npure: {report.is_pure}, rank: {report.rank}, "
      f"maximal collections: {report.clique_count}")
for c in enumerate_maximal_cliques(build_compat_graph(dom, "weak")):
    extras = [str(s) for s in c if not is_cyclic_interval(s)]
    print(f"  size {len(c)}, extras beyond the boundary intervals: {extras}")
