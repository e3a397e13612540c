"""Weak and chord separation on the cyclic ground set, on small worked pairs.

Two same-size subsets are weakly separated exactly when their differences do
not interleave around the circle; at unequal sizes the smaller set must
bracket the larger one's difference in the linear order, which is a strictly
stronger demand than chord separation.
"""

from weaksep import Subset, is_chord_separated, is_weakly_separated, surrounds

n = 6
i = Subset.of([1, 2, 4], n)
j = Subset.of([3, 5, 6], n)

print(f"ground set [{n}]")
print(f"I = {i}, J = {j}")
print(f"  I surrounds J: {surrounds(i, j)}")
print(f"  J surrounds I: {surrounds(j, i)}")
print(f"  weakly separated: {is_weakly_separated(i, j)}")
print(f"  chord separated:  {is_chord_separated(i, j)}")
print()

# at different sizes the two notions split: {1,3} and {2} are chord
# separated (no alternating quadruple exists) but not weakly separated
s = Subset.of([1, 3], 4)
t = Subset.of([2], 4)
print(f"S = {s}, T = {t} over [4]")
print(f"  weakly separated: {is_weakly_separated(s, t)}")
print(f"  chord separated:  {is_chord_separated(s, t)}")
print()

# equal sizes: the two predicates agree, checked here on every pair of [5]
agree = all(
    is_weakly_separated(Subset(a, 5), Subset(b, 5))
    == is_chord_separated(Subset(a, 5), Subset(b, 5))
    for a in range(32)
    for b in range(32)
    if Subset(a, 5).mask.bit_count() == Subset(b, 5).mask.bit_count()
)
print(f"equal-size pairs of [5]: weak == chord on all of them: {agree}")
