"""
Deciding mixing for small graphs
================================

A graph G is H-mixing when every homomorphism G -> H can be turned into
every other by changing one vertex at a time, staying a homomorphism
throughout.  This script walks the classic small cases.
"""

from circmix import circular_clique, complete_graph, cycle_graph, is_mixing

# An edge has two proper 2-colourings and no way to move between them:
# each colouring is frozen.  One extra colour connects everything.
edge = complete_graph(2)
for k in (2, 3, 4):
    verdict = is_mixing(edge, complete_graph(k))
    print(f"K_2 with {k} colours: {verdict.status}"
          f" ({verdict.hom_count} colourings, {verdict.class_count} classes)")

# The circular cliques G_{k,q} interpolate between the integers.  For an
# edge the threshold sits exactly at k/q = 2: at 2 everything is frozen,
# above 2 the space is connected.
for k, q in ((4, 2), (5, 2), (7, 3)):
    verdict = is_mixing(edge, circular_clique(k, q))
    print(f"K_2 at {k}/{q}: {verdict.status}")

# A triangle with 3 colours has six colourings, all frozen, so the class
# count equals the colouring count.  Four colours mix.
triangle = complete_graph(3)
for k in (3, 4):
    verdict = is_mixing(triangle, complete_graph(k))
    print(f"K_3 with {k} colours: {verdict.status}"
          f" ({verdict.hom_count} colourings, {verdict.class_count} classes)")

# At the fraction 7/2 the triangle stops mixing again even though it has
# plenty of colourings; the two classes are reflections of each other.
verdict = is_mixing(triangle, circular_clique(7, 2))
print(f"K_3 at 7/2: {verdict.status}, witnesses from different classes:")
for w in verdict.witness:
    print("  ", w.image)

# Odd cycles behave like sparse triangles: C_5 fails at 7/2 and 11/3 but
# mixes at 9/2, which is above twice its maximum degree.
for k, q in ((7, 2), (11, 3), (9, 2)):
    verdict = is_mixing(cycle_graph(5), circular_clique(k, q))
    print(f"C_5 at {k}/{q}: {verdict.status}")
