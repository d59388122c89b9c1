"""Hilbert bases, holes and decomposability in the graded cone over a polytope.

Points of the cone ``C(P)`` are written ``(x, n)`` with ``x`` in chart
coordinates and ``n`` the degree, so ``(x, n)`` lies in ``C(P)`` exactly when
``x`` lies in ``nP``.

Simplices get a dedicated engine, :class:`SimplexSemigroup`. Every lattice
point of the cone over a simplex is uniquely ``g + sum c_i (v_i, 1)`` with
``g`` a parallelepiped point and ``c >= 0``; questions about sums of points
of bounded degree then become dynamic programs over the finite group of
parallelepiped points, with no lattice-point enumeration at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .budget import check_deadline, check_points
from .enumeration import (Parallelepiped, empty_simplices, fundamental_parallelepiped,
                          is_empty_simplex, lattice_points)
from .errors import ConsistencyViolation, NotPointed
from .exact import inverse, primitive, rank
from .hull import cone_facets, placing_triangulation
from .polytope import LatticeChart, LatticePolytope, Point, _saturated_basis


class GradedPoint(NamedTuple):
    """A lattice point ``(x, n)`` of ``C(P)``; ``n`` is its degree."""

    x: Point
    n: int

    @property
    def degree(self) -> int:
        return self.n

    @property
    def lifted(self) -> Point:
        return tuple(self.x) + (self.n,)


def _graded_key(p: GradedPoint):
    return (p.n, p.x)


@dataclass(frozen=True)
class HilbertBasis:
    """Minimal Hilbert basis; for graded bases the last coordinate is the degree."""

    elements: tuple[Point, ...]
    graded: bool

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def points(self) -> list[GradedPoint]:
        if not self.graded:
            raise ValueError("only graded bases have degrees")
        return [GradedPoint(e[:-1], e[-1]) for e in self.elements]

    @property
    def max_degree(self) -> int:
        return max(e[-1] for e in self.elements)

    def of_degree_at_least(self, n: int) -> list[GradedPoint]:
        return [p for p in self.points if p.n >= n]


@dataclass(frozen=True)
class Hole:
    point: GradedPoint
    witness: tuple[Point, ...]  # vertices of an empty simplex whose parallelepiped holds the point


@dataclass(frozen=True)
class HoleSet:
    holes: tuple[Hole, ...]

    def __len__(self) -> int:
        return len(self.holes)

    def __iter__(self):
        return iter(self.holes)

    @property
    def points(self) -> list[GradedPoint]:
        return [h.point for h in self.holes]

    @property
    def max_degree(self) -> int:
        """Largest hole degree, 1 when there are no holes."""
        return max((h.point.n for h in self.holes), default=1)


# --------------------------------------------------------------------------
# simplices: group dynamic programs


def _pareto_min(vectors: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for v in sorted(set(vectors), key=lambda v: (sum(v), v)):
        if not any(all(a <= b for a, b in zip(w, v)) for w in out):
            out.append(v)
    return out


class SimplexSemigroup:
    """Arithmetic in ``C(S) ∩ Z^{d+1}`` for a full-dimensional lattice simplex ``S``.

    ``vertices`` are the chart coordinates of ``S``, sorted lexicographically.
    """

    def __init__(self, vertices: Sequence[Sequence[int]]):
        self.vertices = [tuple(v) for v in vertices]
        self.dim = len(self.vertices) - 1
        self.box = Parallelepiped(self.vertices)
        self.volume = self.box.volume
        self.elements = self.box.elements
        self.degrees = [e.degree for e in self.elements]
        self._inv = inverse(self.box.lifted)
        self._add: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}
        self._tables: dict[int, list[list[list[tuple[int, ...]]]]] = {}

    def locate(self, x: Sequence[int], n: int) -> tuple[int, tuple[int, ...]]:
        """Write ``(x, n)`` as box element ``g`` plus ``sum c_i (v_i, 1)``; returns ``(g, c)``."""
        p = list(x) + [n]
        r = [sum(Fraction(p[i]) * self._inv[i][j] for i in range(len(p))) for j in range(len(p))]
        c = tuple(floor(v) for v in r)
        nums = tuple(int((v - ci) * self.volume) for v, ci in zip(r, c))
        return self.box.index[nums], c

    def point(self, g: int, c: Sequence[int]) -> GradedPoint:
        e = self.elements[g]
        x = list(e.point)
        for ci, v in zip(c, self.vertices):
            if ci:
                x = [a + ci * b for a, b in zip(x, v)]
        return GradedPoint(tuple(x), e.degree + sum(c))

    def add(self, g: int, h: int) -> tuple[int, tuple[int, ...]]:
        key = (g, h) if g <= h else (h, g)
        if key not in self._add:
            s = [a + b for a, b in zip(self.elements[g].numerators, self.elements[h].numerators)]
            carry = tuple(v // self.volume for v in s)
            self._add[key] = (self.box.index[tuple(v % self.volume for v in s)], carry)
        return self._add[key]

    def sums(self, n: int, k: int) -> list[list[tuple[int, ...]]]:
        """For each box element ``g``: Pareto-minimal carries of sums of ``n`` points of ``kS``.

        A point of ``kS`` is ``h + sum c_i (v_i, 1)`` with ``deg h <= k``;
        the vertex part never carries, so only the box parts matter.
        """
        tables = self._tables.setdefault(k, [])
        allowed = [h for h, dg in enumerate(self.degrees) if dg <= k]
        zero = (0,) * (self.dim + 1)
        if not tables:
            first = [[] for _ in self.elements]
            for h in allowed:
                first[h] = [zero]
            tables.append(first)
        while len(tables) < n:
            check_deadline()
            prev = tables[-1]
            acc: list[set] = [set() for _ in self.elements]
            for g, carries in enumerate(prev):
                if not carries:
                    continue
                for h in allowed:
                    t, extra = self.add(g, h)
                    for e in carries:
                        acc[t].add(tuple(a + b for a, b in zip(e, extra)))
            tables.append([_pareto_min(s) for s in acc])
        return tables[n - 1]

    def is_sum(self, x: Sequence[int], n: int, parts: int, k: int) -> bool:
        """True iff ``(x, n)`` is a sum of ``parts`` lattice points of ``kS`` (``n = parts * k``)."""
        if parts == 0:
            return n == 0 and not any(x)
        g, c = self.locate(x, n)
        if any(ci < 0 for ci in c):
            return False
        return any(all(a <= b for a, b in zip(e, c)) for e in self.sums(parts, k)[g])

    def failure(self, n: int, k: int) -> tuple[int, ...] | None:
        """Lex-smallest ``x`` in ``nkS`` that is not a sum of ``n`` points of ``kS``."""
        best = None
        table = self.sums(n, k)
        for g, E in enumerate(table):
            T = n * k - self.degrees[g]
            if T < 0:
                continue
            for c in _uncovered_boxes(E, T, self.dim + 1):
                x = self.point(g, c).x
                if best is None or x < best:
                    best = x
        return best


def _greedy_fill(upper: Sequence[int | None], T: int) -> tuple[int, ...] | None:
    # vertices are sorted, so filling low indices first gives the lex-smallest point
    c = []
    rest = T
    for u in upper:
        take = rest if u is None else min(u, rest)
        c.append(take)
        rest -= take
    return tuple(c) if rest == 0 else None


def _uncovered_boxes(E: list[tuple[int, ...]], T: int, n: int):
    """Lex-best ``c >= 0`` with ``|c| = T`` dominating no ``e`` in ``E``, one per hitting choice.

    ``c`` avoids dominating ``e`` iff ``c_i < e_i`` for some ``i``; choosing
    such an ``i`` for every ``e`` confines ``c`` to a box, and the greedy fill
    is the lex-best point of that box with the right total.
    """
    results = []

    def rec(upper: list, j: int) -> None:
        check_deadline()
        if sum(T if u is None else min(u, T) for u in upper) < T:
            return
        while j < len(E) and any(u is not None and u < e for u, e in zip(upper, E[j])):
            j += 1
        if j == len(E):
            c = _greedy_fill(upper, T)
            if c is not None:
                results.append(c)
            return
        for i, ei in enumerate(E[j]):
            if ei > 0:
                saved = upper[i]
                upper[i] = ei - 1 if saved is None else min(saved, ei - 1)
                rec(upper, j + 1)
                upper[i] = saved

    rec([None] * n, 0)
    return results


def simplex_semigroup(P: LatticePolytope) -> SimplexSemigroup:
    img = P.image
    return img.memo("simplex_semigroup", lambda: SimplexSemigroup(img.vertices))


# --------------------------------------------------------------------------
# general polytopes: peeling


class _Peeler:
    """Memoized test for ``x`` being a sum of ``n`` lattice points of ``kP``."""

    def __init__(self, P: LatticePolytope, k: int = 1):
        self.A, b = P.facets.arrays
        self.b = k * b
        self.Y = lattice_points(P, k).points.astype(self.A.dtype)
        self.AY = self.Y @ self.A.T if len(self.Y) else np.zeros((0, len(self.b)), dtype=self.A.dtype)
        self.memo: dict[tuple[Point, int], bool] = {}

    def decomposes(self, x: Point, n: int) -> bool:
        if n == 0:
            return not any(x)
        key = (x, n)
        if key in self.memo:
            return self.memo[key]
        Ax = np.array(x, dtype=self.A.dtype) @ self.A.T
        ok = bool(np.all(Ax <= n * self.b))
        if ok and n > 1:
            ok = False
            mask = np.all(Ax[None, :] - self.AY <= (n - 1) * self.b[None, :], axis=1)
            for y in self.Y[mask]:
                check_deadline()
                if self.decomposes(tuple(int(a - b) for a, b in zip(x, y)), n - 1):
                    ok = True
                    break
        self.memo[key] = ok
        check_points(len(self.memo))
        return ok


def is_sum_in_dilate(x: Sequence[int], n: int, P: LatticePolytope, k: int = 1) -> bool:
    """True iff ``x`` (chart coordinates) is a sum of ``n`` lattice points of ``kP``.

    A ``False`` answer for a point of ``n(kP)`` certifies that ``kP`` lacks
    the integer decomposition property.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    x = tuple(int(a) for a in x)
    if n == 0:
        return not any(x)
    if not P.contains_chart(x, n * k):
        return False
    if P.is_simplex:
        return simplex_semigroup(P).is_sum(x, n * k, n, k)
    peeler = P.image.memo(("peeler", k), lambda: _Peeler(P, k))
    return peeler.decomposes(x, n)


def is_decomposable(p: GradedPoint | tuple[Point, int], P: LatticePolytope) -> bool:
    """True iff ``(x, n)`` is a sum of ``n`` lattice points of ``P`` (chart coordinates)."""
    x, n = tuple(int(a) for a in p[0]), int(p[1])
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return is_sum_in_dilate(x, n, P, 1)


# --------------------------------------------------------------------------
# Hilbert bases


def _reduce_graded(cands: list[Point], A: np.ndarray, b: np.ndarray) -> list[Point]:
    """Keep the irreducible lifted points ``(x, n)``; ``cands`` sorted by degree."""
    accepted: list[Point] = []
    acc_arr = np.zeros((0, A.shape[1] + 1), dtype=A.dtype)
    for c in cands:
        check_deadline()
        c_arr = np.array(c, dtype=A.dtype)
        lower = acc_arr[acc_arr[:, -1] < c[-1]]
        if len(lower):
            diff = c_arr[None, :] - lower
            inside = np.all(diff[:, :-1] @ A.T <= diff[:, -1:] * b[None, :], axis=1)
            if inside.any():
                continue
        accepted.append(c)
        acc_arr = np.vstack([acc_arr, c_arr[None, :]])
    return accepted


def hilbert_basis_graded(P: LatticePolytope, method: str = "box") -> HilbertBasis:
    """Minimal Hilbert basis of ``C(P) ∩ Z^{d+1}``, sorted by (degree, point).

    Args:
        P: the polytope.
        method: where reduction candidates come from. ``"box"`` takes the
            lattice points of ``P`` plus the parallelepiped points of the cones
            of a triangulation; ``"enumerate"`` takes every lattice point of
            ``nP`` for ``n < d`` (slow, used as an oracle).
    """
    d = P.dim
    if d == 0:
        return HilbertBasis(((1,),), graded=True)
    A, b = P.facets.arrays
    cands = {tuple(p) + (1,) for p in lattice_points(P, 1)}
    if method == "box":
        verts = P.image.vertices
        for simplex in P.triangulation:
            for e in Parallelepiped([verts[i] for i in simplex]).elements:
                if e.degree >= 2:
                    cands.add(e.point + (e.degree,))
    elif method == "enumerate":
        for n in range(2, d):
            cands.update(tuple(p) + (n,) for p in lattice_points(P, n))
    else:
        raise ValueError(f"unknown method {method!r}")
    ordered = sorted(cands, key=lambda c: (c[-1], c))
    basis = _reduce_graded(ordered, A, b)
    return HilbertBasis(tuple(basis), graded=True)


def mu_hilb(P: LatticePolytope, basis: HilbertBasis | None = None) -> int:
    basis = basis if basis is not None else hilbert_basis_graded(P)
    return basis.max_degree


def hilbert_basis_pointed(generators: Sequence[Sequence[int]]) -> HilbertBasis:
    """Minimal Hilbert basis of the lattice points of a pointed rational cone.

    The cone is triangulated; candidates are its generators and the
    parallelepiped points of every simplicial piece; irreducible candidates
    form the basis.

    Raises:
        NotPointed: the cone contains a line.
    """
    gens = sorted({primitive(tuple(int(a) for a in g)) for g in generators if any(g)})
    if not gens:
        return HilbertBasis((), graded=False)
    n = len(gens[0])
    r = rank(gens)
    if r < n:
        chart = LatticeChart((0,) * n, _saturated_basis([list(g) for g in gens], r))
        ys = [chart.to_chart(g) for g in gens]
    else:
        chart = None
        ys = gens
    normals = cone_facets(ys)
    if rank(normals) < r:
        raise NotPointed("the cone contains a line")
    cands = set(ys)
    for simplex in placing_triangulation(ys):
        pts, _, _ = fundamental_parallelepiped([ys[i] for i in simplex])
        cands.update(tuple(int(a) for a in p) for p in pts[1:])
    N = np.array(normals, dtype=object)
    if all(abs(a) < 2**31 for row in normals for a in row) and all(
            abs(a) < 2**31 for c in cands for a in c):
        N = N.astype(np.int64)
    height = N.sum(axis=0)
    order = sorted(cands, key=lambda c: (int(np.dot(height, c)), c))
    C = np.array(order, dtype=N.dtype)
    H = C @ height
    accepted: list[int] = []
    for i, c in enumerate(order):
        check_deadline()
        if accepted:
            idx = np.array([j for j in accepted if H[j] < H[i]], dtype=np.int64)
            if len(idx) and np.any(np.all((C[i][None, :] - C[idx]) @ N.T >= 0, axis=1)):
                continue
        accepted.append(i)
    basis = [order[i] for i in accepted]
    if chart is not None:
        basis = [tuple(int(a) for a in chart.to_ambient(y, 0)) for y in basis]
    return HilbertBasis(tuple(sorted(basis)), graded=False)


# --------------------------------------------------------------------------
# holes


def box_points(P: LatticePolytope) -> HoleSet:
    """Holes of ``P``: parallelepiped points of empty full-dimensional simplices in ``P``
    that are not sums of degree-one points.

    Raises:
        BudgetExceeded: too many candidate simplices or points.
    """
    d = P.dim
    if d <= 1:
        return HoleSet(())
    if P.is_simplex and is_empty_simplex(P):
        # the only degree-one points are the vertices, which never sum to a box point
        verts = P.image.vertices
        holes = [Hole(GradedPoint(e.point, e.degree), verts)
                 for e in Parallelepiped(verts).elements if e.degree > 0]
    else:
        holes = _holes_from_empty_simplices(P)
    for h in holes:
        if not 2 <= h.point.n <= d - 1:
            raise ConsistencyViolation(f"hole {h.point} has degree outside [2, d-1]")
    return HoleSet(tuple(holes))


def _holes_from_empty_simplices(P: LatticePolytope) -> list[Hole]:
    pts = [tuple(int(a) for a in p) for p in lattice_points(P, 1)]
    found: dict[GradedPoint, tuple[Point, ...]] = {}
    for simplex, _ in empty_simplices(P, min_volume=2):
        verts = tuple(pts[i] for i in simplex)
        for e in Parallelepiped(verts).elements:
            if e.degree > 0:
                found.setdefault(GradedPoint(e.point, e.degree), verts)
    holes = [Hole(p, w) for p, w in found.items() if not is_decomposable(p, P)]
    holes.sort(key=lambda h: _graded_key(h.point))
    return holes


def mu_hole(P: LatticePolytope, holes: HoleSet | None = None) -> int:
    holes = holes if holes is not None else box_points(P)
    return holes.max_degree
