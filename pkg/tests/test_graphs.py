import itertools
import random

import networkx as nx
import pytest

from dilatope import (Disconnected, SimpleGraph, box_points, chordless_cycles, edge_polytope,
                      exceptional_pairs, graph_profile, is_idp, minimal_odd_cycles, mu_hilb,
                      mu_hole_graph, mu_va_hilb_graph, odd_cycle_condition, odd_cycles)
from dilatope.graphs import OddCycle


def random_connected_graph(rng, n, p):
    while True:
        G = nx.gnp_random_graph(n, p, seed=rng.randrange(10**9))
        if nx.is_connected(G):
            return G


def to_simple(G: nx.Graph) -> SimpleGraph:
    return SimpleGraph(G.number_of_nodes(), [(u + 1, v + 1) for u, v in G.edges])


def canonical(cycle):
    c = list(cycle)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if c[1] > c[-1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


@pytest.mark.parametrize("seed", range(60))
def test_chordless_cycles_match_networkx(seed):
    rng = random.Random(seed)
    G = random_connected_graph(rng, rng.randint(4, 10), rng.uniform(0.25, 0.6))
    ours = set(chordless_cycles(to_simple(G)))
    ref = {canonical([v + 1 for v in c]) for c in nx.chordless_cycles(G) if len(c) >= 3}
    assert ours == ref


def bridged_brute(G: nx.Graph, C, D) -> bool:
    """Joined: a shared vertex or an edge with one end in each cycle."""
    c = {v - 1 for v in C}
    d = {v - 1 for v in D}
    return bool(c & d) or any((u in c and v in d) or (u in d and v in c) for u, v in G.edges)


@pytest.mark.parametrize("seed", range(40))
def test_exceptional_pairs_match_definition(seed):
    rng = random.Random(seed)
    G = random_connected_graph(rng, rng.randint(6, 11), rng.uniform(0.2, 0.4))
    SG = to_simple(G)
    odd = [canonical([v + 1 for v in c]) for c in nx.chordless_cycles(G) if len(c) % 2]
    expected = {frozenset((C, D)) for C, D in itertools.combinations(odd, 2)
                if not bridged_brute(G, C, D)}
    got = {frozenset((p.first.vertices, p.second.vertices)) for p in exceptional_pairs(SG)}
    assert got == expected


@pytest.mark.parametrize("seed", range(25))
def test_odd_cycle_condition_matches_idp(seed):
    """The odd cycle condition holds iff the edge polytope has IDP."""
    rng = random.Random(seed)
    G = random_connected_graph(rng, rng.randint(5, 7), rng.uniform(0.3, 0.5))
    SG = to_simple(G)
    P = edge_polytope(SG)
    assert odd_cycle_condition(SG) == bool(is_idp(P, 1))


def two_triangles(extra_path=0):
    """Two triangles joined by a path of ``extra_path + 1`` edges (no bridge between them)."""
    edges = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]
    prev = 3
    nxt = 7
    for _ in range(extra_path):
        edges.append((prev, nxt))
        prev, nxt = nxt, nxt + 1
    edges.append((prev, 4))
    return SimpleGraph(nxt - 1, edges)


def test_closed_forms_on_two_triangles():
    G = two_triangles(extra_path=1)
    pairs = exceptional_pairs(G)
    assert [(p.first.vertices, p.second.vertices) for p in pairs] == [((1, 2, 3), (4, 5, 6))]
    assert pairs[0].m == 3
    assert pairs[0].e(G.d) == (1, 1, 1, 1, 1, 1, 0)
    assert mu_va_hilb_graph(G) == 3
    assert mu_hole_graph(G) == 3


def test_graph_profile_agrees_with_the_generic_engine():
    G = two_triangles(extra_path=1)
    gp = graph_profile(G)
    assert gp.generic_exact
    assert (gp.va, gp.hilb, gp.hole, gp.midp, gp.idp) == (3, 3, 3, 3, 3)
    from dilatope import mu_profile
    p = mu_profile(edge_polytope(G))
    assert (p.va, p.hilb, p.hole) == (gp.va, gp.hilb, gp.hole)


def test_complete_graph_k4():
    G = SimpleGraph(4, list(itertools.combinations(range(1, 5), 2)))
    assert odd_cycle_condition(G)
    gp = graph_profile(G)
    assert (gp.va, gp.hilb, gp.hole, gp.midp, gp.idp) == (1, 1, 1, 1, 1)


def test_packing_modes_agree_on_vertex_disjoint_cycles():
    # four triangles hanging off a hub: every pair is exceptional and no cycles share vertices
    T = [(1, 2, 3), (4, 5, 6), (7, 8, 9), (10, 11, 12)]
    edges = [e for a, b, c in T for e in ((a, b), (b, c), (a, c))]
    edges += [(1, 13), (4, 13), (7, 13), (10, 13)]
    G = SimpleGraph(13, edges)
    assert len(exceptional_pairs(G)) == 6
    assert mu_hole_graph(G, "matching") == 6
    assert mu_hole_graph(G, "disjoint") == 6
    with pytest.raises(ValueError):
        mu_hole_graph(G, "other")


def test_packing_modes_differ_on_a_bowtie():
    # triangles A = 123 and B = 145 share vertex 1; C = 678 and D = 9,10,11 hang off hub 12
    edges = [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5),
             (6, 7), (7, 8), (6, 8), (9, 10), (10, 11), (9, 11),
             (2, 12), (6, 12), (9, 12)]
    G = SimpleGraph(12, edges)
    assert len(minimal_odd_cycles(G)) == 4
    # (A, C) and (B, D) use four distinct cycles, but A and B meet at vertex 1
    assert mu_hole_graph(G, "matching") == 6
    assert mu_hole_graph(G, "disjoint") == 3


@pytest.mark.parametrize("d, edges, err", [
    (3, [(1, 2)], Disconnected),
    (2, [(1, 1)], ValueError),
    (2, [(1, 3)], ValueError),
    (2, [(1, 2), (2, 1)], ValueError),
])
def test_bad_graphs(d, edges, err):
    with pytest.raises(err):
        SimpleGraph(d, edges)


def test_edge_polytope_dimension():
    # bipartite graphs give dimension d - 2, non-bipartite d - 1
    assert edge_polytope(SimpleGraph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])).dim == 2
    assert edge_polytope(SimpleGraph(3, [(1, 2), (2, 3), (1, 3)])).dim == 2
    assert edge_polytope(two_triangles(1)).dim == 6


def test_odd_cycle_ordering():
    G = two_triangles(0)
    assert minimal_odd_cycles(G) == [OddCycle((1, 2, 3)), OddCycle((4, 5, 6))]


@pytest.mark.parametrize("seed", range(40))
def test_odd_cycles_match_networkx(seed):
    rng = random.Random(seed)
    G = random_connected_graph(rng, rng.randint(4, 9), rng.uniform(0.25, 0.5))
    ref = {canonical([v + 1 for v in c]) for c in nx.simple_cycles(G) if len(c) % 2 and len(c) >= 3}
    assert set(odd_cycles(to_simple(G))) == ref


def test_chorded_cycle_carries_a_hole():
    # the 5-cycle 1-2-3-6-7 has chord {1, 6}; with triangle 4-5-9 it gives a degree-4 hole
    edges = [(1, 2), (1, 6), (1, 7), (2, 3), (3, 6), (4, 5), (4, 8), (4, 9), (5, 8), (5, 9),
             (6, 7), (6, 8), (7, 8)]
    G = SimpleGraph(9, edges)
    P = edge_polytope(G)
    generic = box_points(P).max_degree
    assert generic == 4
    assert mu_hole_graph(G) == 3
    assert mu_hole_graph(G, "disjoint", "all") == 4


def test_shared_vertex_pairs_overshoot():
    edges = [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5),
             (6, 7), (7, 8), (6, 8), (9, 10), (10, 11), (9, 11),
             (2, 12), (6, 12), (9, 12)]
    G = SimpleGraph(12, edges)
    assert box_points(edge_polytope(G)).max_degree == 3
    assert mu_hole_graph(G, "matching") == 6
    assert mu_hole_graph(G, "disjoint", "all") == 3


@pytest.mark.parametrize("seed", range(12))
def test_closed_forms_agree_with_the_generic_engine(seed):
    """Hilbert degree from chordless pairs; hole degree from all odd cycles, disjoint packing."""
    rng = random.Random(1000 + seed)
    while True:
        G = random_connected_graph(rng, rng.randint(6, 9), rng.uniform(0.2, 0.35))
        SG = to_simple(G)
        if exceptional_pairs(SG):
            break
    P = edge_polytope(SG)
    assert mu_hilb(P) == mu_va_hilb_graph(SG)
    assert box_points(P).max_degree == mu_hole_graph(SG, "disjoint", "all")
