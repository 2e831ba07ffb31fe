"""
Folds, cores, and dismantlable graphs
=====================================

A fold removes a vertex whose neighbourhood fits inside another vertex's
neighbourhood.  Folding never changes which graphs map in or out, so the
stiff terminal (no fold left) carries all homomorphism information.
"""

from circmix import (Graph, complete_graph, core_of, cycle_graph,
                     is_dismantlable, path_graph, self_mixing,
                     stiff_reduction)

# A four-cycle folds twice and lands on an edge: opposite vertices have
# identical neighbourhoods.
red = stiff_reduction(cycle_graph(4))
print("C_4 folds:", [(s.removed, s.absorber) for s in red.steps])
print("terminal:", red.terminal.n, "vertices,", sorted(red.terminal.edges()))

# Any tree folds leaf by leaf down to a single edge.
tree = Graph(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])
print("tree terminal size:", stiff_reduction(tree).terminal.n)

# A five-cycle is stiff: no neighbourhood contains another.
print("C_5 folds available:", len(stiff_reduction(cycle_graph(5)).steps))

# The core is the smallest retract.  An even cycle retracts onto an edge,
# a triangle with a pendant vertex retracts onto the triangle.
for g in (cycle_graph(6), Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])):
    result = core_of(g)
    print(f"core of {g}: vertices {result.vertices}")

# Reflexive paths fold to a point, so they are dismantlable; loop-free
# graphs with an edge never are.  Dismantlability is exactly what makes a
# graph mix with itself as the target.
for g in (path_graph(3, reflexive=True), path_graph(3), complete_graph(3)):
    d = is_dismantlable(g)
    s = self_mixing(g)
    print(f"{g}: dismantlable={d.dismantlable} self_mixing={s.mixing}")
