"""
Extending pinned colours
========================

Pin some vertices of a host graph to target colours and ask whether the
pins extend to a full homomorphism.  Layered hosts turn the question
into a distance bound in the homomorphism graph, and sufficiently
separated pins always extend.
"""

from circmix import (PrecolouringInstance, complete_graph, core_ext_radius_bound,
                     extend, extension_product, gadget_g62x,
                     greedy_ring_extension, layered_extension_check,
                     path_graph, Hom)

# The gadget: a six-vertex circular clique plus one apex adjacent to four
# of its vertices.  Pin the six outer vertices with four colours; the
# apex survives only if its four neighbours miss a colour.
gadget = gadget_g62x()
k4 = complete_graph(4)
blocked = PrecolouringInstance(gadget, k4, tuple(enumerate((0, 1, 1, 2, 2, 3))))
print("pins 0,1,1,2,2,3:", extend(blocked).status)
open_ = PrecolouringInstance(gadget, k4, tuple(enumerate((0, 0, 2, 1, 1, 3))))
result = extend(open_)
print("pins 0,0,2,1,1,3:", result.status, "->", result.extension.image)

# Stack an edge against a path of n layers, pin the first layer to one
# map and the last to another.  The stack is colourable exactly when the
# homomorphism graph joins the two maps in fewer than n steps.
k2, k3 = complete_graph(2), complete_graph(3)
start, end = Hom(2, 3, (0, 1)), Hom(2, 3, (1, 0))
for n in (2, 3, 4):
    ok = layered_extension_check(k2, k3, start, end, n)
    print(f"{n} layers between (0,1) and (1,0): {'extends' if ok else 'no'}")

# How far apart must pinned copies of the core sit to guarantee an
# extension?  Twice the radius of the homomorphism graph of the core.
rb = core_ext_radius_bound(path_graph(4), k3)
print(f"core on {rb.core.core.n} vertices, radius {rb.radius},"
      f" separation bound {rb.bound}, centre {rb.centre.image}")

# At that separation the greedy construction walks each pinned map home
# to the centre, ring by ring.  The 14-vertex host needs a larger
# enumeration budget for its core computation.
m = rb.bound + 1
ladder = extension_product(k2, path_graph(m))
inst = PrecolouringInstance(ladder, k3,
                            ((0, 1), (m, 0), (m - 1, 1), (2 * m - 1, 0)),
                            groups=((0, m), (m - 1, 2 * m - 1)))
greedy = greedy_ring_extension(inst, rb.centre, cap=10 ** 7)
print("ring extension:", greedy.image)
