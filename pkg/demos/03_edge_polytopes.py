"""
Edge polytopes and odd cycles
=============================

For the edge polytope of a graph, the Hilbert-basis and hole thresholds can
be read off from pairs of odd cycles that no edge joins.
"""

from dilatope import (SimpleGraph, edge_polytope, exceptional_pairs, graph_profile,
                      mu_hole_graph, mu_va_hilb_graph, odd_cycle_condition)

# Two triangles joined by a path of length two through vertex 7.
G = SimpleGraph(7, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 7), (4, 7)])
print("odd cycle condition:", odd_cycle_condition(G))
for pair in exceptional_pairs(G):
    print("exceptional pair", pair.first.vertices, pair.second.vertices, "m =", pair.m)

print("closed-form va/hilb:", mu_va_hilb_graph(G))
print("closed-form hole:", mu_hole_graph(G))

# The generic engine confirms the closed forms and fills in midp and idp.
P = edge_polytope(G)
print("edge polytope dimension", P.dim)
gp = graph_profile(G, seconds=30)
print("va hilb hole:", gp.va, gp.hilb, gp.hole)
print("midp idp:", gp.midp, gp.idp, "(exact)" if gp.generic_exact else "(bracketed)")
