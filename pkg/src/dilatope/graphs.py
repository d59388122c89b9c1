"""Edge polytopes of simple graphs and their odd-cycle formulas.

For a connected simple graph ``G`` on ``{1, ..., d}`` the edge polytope is
the convex hull of ``e_i + e_j`` over the edges ``{i, j}``. Two chordless odd
cycles form an *exceptional pair* when no edge of ``G`` joins a vertex of one
to a vertex of the other (sharing a vertex counts as being joined). The
closed forms below express the top Hilbert-basis degree and the top hole
degree of the edge polytope through exceptional pairs. The hole formula
takes a ``cycles`` choice: chordless cycles only, or every odd cycle. The
remaining thresholds are left to the generic engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .budget import check_deadline, limits
from .errors import BudgetExceeded, Disconnected
from .polytope import LatticePolytope


class SimpleGraph:
    """Connected simple graph with vertices ``1..d`` (1-based, as in the JSON format)."""

    def __init__(self, d: int, edges: Iterable[Iterable[int]]):
        self.d = int(d)
        E = set()
        for e in edges:
            i, j = (int(a) for a in e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.d and 1 <= j <= self.d):
                raise ValueError(f"edge {{{i}, {j}}} leaves the vertex range 1..{self.d}")
            pair = (min(i, j), max(i, j))
            if pair in E:
                raise ValueError(f"repeated edge {pair}")
            E.add(pair)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(E))
        self.adj: dict[int, set[int]] = {v: set() for v in range(1, self.d + 1)}
        for i, j in self.edges:
            self.adj[i].add(j)
            self.adj[j].add(i)
        if not self._connected():
            raise Disconnected("the graph must be connected")

    def _connected(self) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.d

    def __repr__(self) -> str:
        return f"SimpleGraph({self.d}, {list(self.edges)})"


def edge_polytope(G: SimpleGraph) -> LatticePolytope:
    """Convex hull of ``e_i + e_j`` over the edges of ``G`` (every such point is a vertex)."""
    pts = [tuple(int(v in (i, j)) for v in range(1, G.d + 1)) for i, j in G.edges]
    return LatticePolytope(pts, _checked=True)


@dataclass(frozen=True)
class OddCycle:
    vertices: tuple[int, ...]  # starts at its smallest vertex, second entry < last entry

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


def chordless_cycles(G: SimpleGraph, odd_only: bool = False) -> list[tuple[int, ...]]:
    """All chordless cycles, each listed once in canonical orientation.

    Paths grow from their smallest vertex ``s``; a new vertex may touch only
    the current end of the path (and ``s``, which closes the cycle), so
    every path kept is induced and every closed one is chordless.
    """
    adj = G.adj
    out = []
    for s in range(1, G.d + 1):
        path = [s]
        on_path = {s}

        def grow() -> None:
            check_deadline()
            end = path[-1]
            for v in sorted(adj[end]):
                if v <= s or v in on_path:
                    continue
                if any(v in adj[p] for p in path[1:-1]):
                    continue
                if len(path) >= 2 and s in adj[v]:
                    if path[1] < v:
                        cyc = tuple(path) + (v,)
                        if not odd_only or len(cyc) % 2:
                            out.append(cyc)
                    continue
                path.append(v)
                on_path.add(v)
                grow()
                path.pop()
                on_path.discard(v)

        grow()
    return sorted(out, key=lambda c: (len(c), c))


def odd_cycles(G: SimpleGraph) -> list[tuple[int, ...]]:
    """Every odd cycle of ``G`` (chords allowed), canonical orientation, by (length, vertices).

    Exponential in general; meant for the small graphs where the closed forms
    are compared with the generic engine.
    """
    adj = G.adj
    out = []
    for s in range(1, G.d + 1):
        path = [s]
        on_path = {s}

        def grow() -> None:
            check_deadline()
            for v in sorted(adj[path[-1]]):
                if v == s and len(path) >= 3 and len(path) % 2 and path[1] < path[-1]:
                    out.append(tuple(path))
                if v <= s or v in on_path:
                    continue
                path.append(v)
                on_path.add(v)
                grow()
                path.pop()
                on_path.discard(v)

        grow()
    return sorted(out, key=lambda c: (len(c), c))


def minimal_odd_cycles(G: SimpleGraph) -> list[OddCycle]:
    """Chordless odd cycles of ``G``, ordered by (length, vertices)."""
    return [OddCycle(c) for c in chordless_cycles(G, odd_only=True)]


@dataclass(frozen=True)
class ExceptionalPair:
    first: OddCycle
    second: OddCycle

    @property
    def m(self) -> int:
        return (self.first.length + self.second.length) // 2

    def e(self, d: int) -> tuple[int, ...]:
        """Indicator vector of the union of both vertex sets; a point of degree ``m``."""
        both = self.first.vertex_set | self.second.vertex_set
        return tuple(int(v in both) for v in range(1, d + 1))


def _joined(G: SimpleGraph, C: OddCycle, D: OddCycle) -> bool:
    dv = D.vertex_set
    return any(v in dv or G.adj[v] & dv for v in C.vertices)


def exceptional_pairs(G: SimpleGraph, cycles: list[OddCycle] | None = None) -> list[ExceptionalPair]:
    cycles = cycles if cycles is not None else minimal_odd_cycles(G)
    return [ExceptionalPair(C, D) for a, C in enumerate(cycles) for D in cycles[a + 1:]
            if not _joined(G, C, D)]


def odd_cycle_condition(G: SimpleGraph) -> bool:
    """True iff no two chordless odd cycles form an exceptional pair."""
    return not exceptional_pairs(G)


def mu_va_hilb_graph(G: SimpleGraph, pairs: list[ExceptionalPair] | None = None) -> int:
    pairs = pairs if pairs is not None else exceptional_pairs(G)
    return max((p.m for p in pairs), default=1)


def _best_packing(pairs: list[ExceptionalPair], conflict) -> int:
    """Largest total ``m`` over pairwise compatible exceptional pairs (branch and bound)."""
    order = sorted(range(len(pairs)), key=lambda i: -pairs[i].m)
    weights = [pairs[i].m for i in order]
    clash = [[conflict(pairs[order[a]], pairs[order[b]]) for b in range(len(order))]
             for a in range(len(order))]
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[i]
    best = 0

    def rec(i: int, chosen: list[int], total: int) -> None:
        nonlocal best
        check_deadline()
        best = max(best, total)
        if i == len(order) or total + suffix[i] <= best:
            return
        if not any(clash[i][j] for j in chosen):
            chosen.append(i)
            rec(i + 1, chosen, total + weights[i])
            chosen.pop()
        rec(i + 1, chosen, total)

    rec(0, [], 0)
    return best


def mu_hole_graph(G: SimpleGraph, mode: str = "matching", cycles: str = "minimal",
                  pairs: list[ExceptionalPair] | None = None) -> int:
    """Top hole degree of the edge polytope from exceptional pairs.

    Args:
        G: the graph.
        mode: ``"matching"`` lets pairs share vertices as long as no cycle is
            used twice; ``"disjoint"`` also requires the chosen pairs to be
            vertex disjoint.
        cycles: ``"minimal"`` pairs up chordless odd cycles only; ``"all"``
            uses every odd cycle.
        pairs: precomputed exceptional pairs (overrides ``cycles``).

    On small random graphs ``mode="disjoint", cycles="all"`` agrees with the
    generic hole search every time, while the default reading can fall short
    (a chorded odd cycle can carry a hole) or overshoot (two pairs whose
    cycles meet at a vertex). Both readings agree on graphs whose odd cycles
    are chordless and pairwise vertex disjoint.
    """
    if pairs is None:
        if cycles == "minimal":
            pairs = exceptional_pairs(G)
        elif cycles == "all":
            pairs = exceptional_pairs(G, [OddCycle(c) for c in odd_cycles(G)])
        else:
            raise ValueError(f"unknown cycle family {cycles!r}")
    if not pairs:
        return 1
    if mode == "matching":
        def conflict(p, q):
            return bool({p.first, p.second} & {q.first, q.second})
    elif mode == "disjoint":
        def conflict(p, q):
            return bool((p.first.vertex_set | p.second.vertex_set)
                        & (q.first.vertex_set | q.second.vertex_set))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _best_packing(pairs, conflict)


@dataclass(frozen=True)
class GraphProfile:
    """Closed-form thresholds plus the generic ones, exact or as ``(low, high)`` brackets."""

    dim: int
    va: int
    hilb: int
    hole: int
    midp: int | None
    idp: int | None
    midp_bracket: tuple[int, int]
    idp_bracket: tuple[int, int]
    occ: bool
    pairs: int
    notes: list[str] = field(default_factory=list, compare=False)

    @property
    def generic_exact(self) -> bool:
        return self.midp is not None and self.idp is not None

    def as_dict(self) -> dict:
        return {"va": self.va, "hilb": self.hilb, "hole": self.hole,
                "midp": self.midp, "idp": self.idp,
                "midp_bracket": list(self.midp_bracket), "idp_bracket": list(self.idp_bracket)}


def graph_profile(G: SimpleGraph, mode: str = "matching", cycles: str = "minimal",
                  seconds: float | None = 60.0, points: int | None = None) -> GraphProfile:
    """Closed forms for ``va``, ``hilb`` and ``hole``; ``midp`` and ``idp`` from the generic engine.

    The generic search runs under the given caps; when it runs out, both
    thresholds are reported as the bracket ``[va, hole]`` and flagged.
    """
    from .profile import mu_idp, mu_midp

    pairs = exceptional_pairs(G)
    M = mu_va_hilb_graph(G, pairs)
    hole = mu_hole_graph(G, mode, cycles, pairs=None if cycles != "minimal" else pairs)
    P = edge_polytope(G)
    midp = idp = None
    notes = []
    with limits(points=points, seconds=seconds):
        try:
            midp = mu_midp(P)
            idp = mu_idp(P)
        except BudgetExceeded as exc:
            notes.append(f"generic search stopped: {exc}")
    midp_bracket = (midp, midp) if midp is not None else (M, hole)
    idp_bracket = (idp, idp) if idp is not None else (midp_bracket[0], hole)
    return GraphProfile(P.dim, M, M, hole, midp, idp, midp_bracket, idp_bracket,
                        not pairs, len(pairs), notes)
