"""
Circular cliques and their arithmetic
=====================================

The circular clique G_{k,q} has vertices 0..k-1 with i ~ j whenever the
cyclic distance of i and j is at least q.  Homomorphisms into G_{k,q} are
the (k,q)-colourings; the fraction k/q plays the role of a rational
number of colours.
"""

from fractions import Fraction

from circmix import (circular_chromatic_number, circular_clique,
                     complete_graph, cycle_graph, lower_parent,
                     scale_retraction)

# G_{k,1} is the complete graph and G_{2q+1,q} is the odd cycle; in
# between sit genuinely new graphs such as G_{7,2}.
g72 = circular_clique(7, 2)
print(f"{g72.name}: {g72.n} vertices, {g72.edge_count()} edges")
print("edges:", sorted(g72.edges()))

# The circular chromatic number of an odd cycle is 2 + 1/q, strictly
# below 3, which ordinary colourings cannot see.
for r in (5, 7, 9):
    chi_c = circular_chromatic_number(cycle_graph(r))
    print(f"chi_c(C_{r}) = {chi_c}")
print("chi_c(K_4) =", circular_chromatic_number(complete_graph(4)))

# Every reduced fraction k/q has a unique lower parent k'/q' with
# k q' - k' q = 1: the largest fraction below k/q with denominator at
# most q.  Walking parents descends the Farey tree.
for k, q in ((5, 2), (7, 3), (19, 7)):
    parent = lower_parent(k, q)
    print(f"lower parent of {k}/{q} is {parent.parent_k}/{parent.parent_q}")

# Scaling a fraction by d changes nothing up to homomorphism: the floor
# map u -> u // d retracts G_{kd,qd} onto G_{k,q} and multiplication by d
# embeds it back.
sr = scale_retraction(5, 2, 2)
print("G_{10,4} -> G_{5,2} retraction:", sr.retraction.image)
print("section:", sr.section.image)
assert Fraction(10, 4) == Fraction(5, 2)
