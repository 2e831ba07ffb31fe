"""
Winding numbers certify that mixing fails
=========================================

Around a cycle, consecutive colours of a (k,q)-colouring step by some
tau in [q, k-q], and the steps sum to a multiple of k.  When every
colouring in play is constricting the total cannot change along
recolouring walks, so two colourings with different totals prove the
space is disconnected without enumerating it.
"""

from circmix import (check_certificate, circular_clique, complete_graph,
                     cycle_graph, cycle_trace, nonmixing_certificate,
                     reflect_colouring, Hom)

# Trace a colouring of C_6 in G_{7,2} around the cycle: five steps of 2
# and one of 4, total 14, twice around the colour circle.
c6 = cycle_graph(6)
f = Hom(6, 7, (0, 2, 4, 6, 1, 3))
t = cycle_trace(f, range(6), c6, 7, 2)
print("taus:", t.taus, "sigma:", t.sigma)

# Negating every colour is again a valid colouring and its total is
# complementary: the two sum to (number of steps) * k.
r = reflect_colouring(f, 7)
t_r = cycle_trace(r, range(6), c6, 7, 2)
print("reflected taus:", t_r.taus, "sigma:", t_r.sigma)
print("sum:", t.sigma + t_r.sigma, "=", len(t.taus), "*", 7)

# For the triangle at 7/2 the construction is automatic: colour, reflect,
# compare totals.  The certificate re-verifies from scratch.
cert = nonmixing_certificate(complete_graph(3), 7, 2)
print(f"K_3 at 7/2: {cert.kind} on {cert.subgraph},"
      f" sigma {cert.sigma} vs {cert.sigma_reflection}")
print("verifies:", check_certificate(complete_graph(3), cert))

# Larger cliques below the threshold k/q < omega + 1 use the clique
# itself, traced in colour-sorted order.
cert4 = nonmixing_certificate(complete_graph(4), 9, 2)
print(f"K_4 at 9/2: {cert4.kind}, colouring {cert4.colouring.image},"
      f" sigma {cert4.sigma} vs {cert4.sigma_reflection}")

# Above the threshold no certificate exists and the function refuses.
try:
    nonmixing_certificate(complete_graph(3), 9, 2)
except ValueError as e:
    print("K_3 at 9/2:", e)
