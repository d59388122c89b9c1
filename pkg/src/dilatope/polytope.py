"""Lattice polytopes, their lattice charts and facet descriptions.

Every invariant in this package is computed on the *chart image* of a
polytope: an affinely isomorphic copy that is full dimensional in ``Z^d``
and whose lattice points correspond one-to-one with those of the original.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyInput, NotAVertex
from .exact import (det, dot, hermite_normal_form, inverse, primitive, rank,
                    smith_normal_form)
from .hull import cone_facets, placing_triangulation

Point = tuple[int, ...]


@dataclass(frozen=True)
class HRep:
    """Facet inequalities ``<A[i], x> <= b[i]`` with primitive integer normals."""

    A: tuple[Point, ...]
    b: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.b)

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        A = np.array(self.A, dtype=object).reshape(len(self.b), -1)
        b = np.array(self.b, dtype=object)
        if _fits_int64(self.A) and _fits_int64([self.b]):
            A, b = A.astype(np.int64), b.astype(np.int64)
        return A, b

    def satisfied(self, x: Sequence, k=1) -> bool:
        return all(dot(a, x) <= k * bi for a, bi in zip(self.A, self.b))

    def interior(self, x: Sequence, k=1) -> bool:
        return all(dot(a, x) < k * bi for a, bi in zip(self.A, self.b))


@dataclass(frozen=True)
class GradedConeRep:
    """The cone over ``P x {1}``; a lattice point ``(x, n)`` has degree ``n``."""

    generators: tuple[Point, ...]
    facets: tuple[Point, ...]

    def contains(self, p: Sequence) -> bool:
        return all(dot(a, p) >= 0 for a in self.facets)


class LatticeChart:
    """Affine lattice isomorphism ``aff(P) ∩ Z^N -> Z^d``.

    ``x = base + y @ basis`` for chart coordinates ``y``; points of ``nP``
    use the base point ``n * base``.
    """

    def __init__(self, base: Point, basis: Sequence[Point]):
        self.base = tuple(base)
        self.basis = tuple(tuple(r) for r in basis)
        self.dim = len(self.basis)
        if self.dim:
            # HNF rows are in echelon form, so their pivot columns give a square block
            self.pivots = tuple(next(j for j, a in enumerate(row) if a) for row in self.basis)
            block = [[row[j] for j in self.pivots] for row in self.basis]
            self._inv = inverse(block)
        else:
            self.pivots = ()
            self._inv = []

    @property
    def is_identity(self) -> bool:
        n = len(self.base)
        return self.dim == n and not any(self.base) and all(
            self.basis[i][j] == (i == j) for i in range(n) for j in range(n))

    def to_chart(self, x: Sequence, n=1, exact: bool = True) -> tuple:
        """Chart coordinates of ``x`` (as a point of ``nP``).

        Raises ``ValueError`` when ``x`` is off the affine hull (or, with
        ``exact``, off its lattice).
        """
        z = [Fraction(xi) - n * bi for xi, bi in zip(x, self.base)]
        zp = [z[j] for j in self.pivots]
        y = [sum(zp[i] * self._inv[i][j] for i in range(self.dim)) for j in range(self.dim)]
        back = [sum(y[i] * self.basis[i][c] for i in range(self.dim)) for c in range(len(z))]
        if back != z:
            raise ValueError("point is not in the affine hull")
        if exact:
            if any(v.denominator != 1 for v in y):
                raise ValueError("point is not in the affine lattice")
            return tuple(int(v) for v in y)
        return tuple(y)

    def to_ambient(self, y: Sequence, n=1) -> tuple:
        return tuple(n * b + sum(y[i] * self.basis[i][c] for i in range(self.dim))
                     for c, b in enumerate(self.base))

    def __repr__(self) -> str:
        return f"LatticeChart(base={self.base}, basis={self.basis})"


class LatticePolytope:
    """Convex hull of finitely many integer points.

    Use :meth:`from_points`; the constructor expects the vertex list already
    reduced to extreme points.
    """

    def __init__(self, vertices: Iterable[Sequence[int]], *, _checked: bool = False):
        verts = sorted({tuple(int(a) for a in v) for v in vertices})
        if not verts:
            raise EmptyInput("a polytope needs at least one point")
        n = len(verts[0])
        if any(len(v) != n for v in verts):
            raise DimensionMismatch("points have different lengths")
        if not _checked:
            verts = _extreme_points(verts)
        self.vertices: tuple[Point, ...] = tuple(verts)
        self.ambient_dim = n
        self._memo: dict = {}

    def memo(self, key, factory):
        """Per-polytope cache for derived objects built by other modules."""
        if key not in self._memo:
            self._memo[key] = factory()
        return self._memo[key]

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> LatticePolytope:
        pts = [tuple(p) for p in points]
        for p in pts:
            for a in p:
                if isinstance(a, float) or isinstance(a, Fraction):
                    if a != int(a):
                        raise ValueError("points must have integer coordinates")
        return cls(pts)

    def __repr__(self) -> str:
        return f"LatticePolytope({list(self.vertices)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    @cached_property
    def dim(self) -> int:
        v0 = self.vertices[0]
        diffs = [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]
        return rank(diffs) if diffs else 0

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @cached_property
    def chart(self) -> LatticeChart:
        v0 = self.vertices[0]
        diffs = [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]
        if self.dim == 0:
            return LatticeChart(v0, [])
        if self.dim == self.ambient_dim:
            basis = [tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim)]
        else:
            basis = _saturated_basis(diffs, self.dim)
        chart = LatticeChart(v0, basis)
        ys = sorted(chart.to_chart(v) for v in self.vertices)
        w = ys[0]
        if any(w):
            chart = LatticeChart(chart.to_ambient(w), basis)
        return chart

    @cached_property
    def image(self) -> LatticePolytope:
        """Full-dimensional copy in chart coordinates (lex-first vertex at 0)."""
        if self.chart.is_identity:
            return self
        img = LatticePolytope([self.chart.to_chart(v) for v in self.vertices], _checked=True)
        img.__dict__["chart"] = LatticeChart((0,) * self.dim, [
            tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim)])
        return img

    @cached_property
    def facets(self) -> HRep:
        """Irredundant facet description of the chart image."""
        img = self.image
        d = self.dim
        if d == 0:
            return HRep((), ())
        normals = cone_facets([v + (1,) for v in img.vertices])
        A, b = [], []
        for nrm in normals:
            a = primitive([-c for c in nrm[:d]])
            A.append(a)
            b.append(max(dot(a, v) for v in img.vertices))
        order = sorted(range(len(A)), key=lambda i: (A[i], b[i]))
        return HRep(tuple(A[i] for i in order), tuple(b[i] for i in order))

    @cached_property
    def triangulation(self) -> tuple[tuple[int, ...], ...]:
        """Placing triangulation of the chart image by its vertices (index tuples)."""
        if self.dim == 0:
            return ((0,),)
        img = self.image
        return tuple(placing_triangulation([v + (1,) for v in img.vertices]))

    @cached_property
    def normalized_volume(self) -> int:
        img = self.image
        if self.dim == 0:
            return 1
        return sum(abs(det([img.vertices[i] + (1,) for i in s])) for s in self.triangulation)

    def contains(self, x: Sequence, k=1) -> bool:
        """Exact test ``x in kP`` for an ambient rational point ``x``."""
        if len(x) != self.ambient_dim:
            raise DimensionMismatch("point has wrong length")
        try:
            y = self.chart.to_chart(x, k, exact=False)
        except ValueError:
            return False
        return self.facets.satisfied(y, k)

    def contains_chart(self, y: Sequence, k=1) -> bool:
        return self.facets.satisfied(y, k)

    def ambient_facets(self) -> HRep:
        """Facets in ambient coordinates; only for full-dimensional polytopes."""
        if not self.is_full_dimensional:
            raise ValueError("ambient facets need a full-dimensional polytope")
        H = self.facets
        base = self.chart.base
        return HRep(H.A, tuple(bi + dot(a, base) for a, bi in zip(H.A, H.b)))

    def dilate(self, k: int) -> LatticePolytope:
        if k < 1:
            raise ValueError("dilation factor must be positive")
        return LatticePolytope([tuple(k * a for a in v) for v in self.vertices], _checked=True)

    def minkowski_sum(self, other: LatticePolytope) -> LatticePolytope:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("summands live in different ambient spaces")
        return LatticePolytope.from_points(
            tuple(a + b for a, b in zip(p, q)) for p in self.vertices for q in other.vertices)

    def graded_cone(self) -> GradedConeRep:
        H = self.facets
        gens = tuple(v + (1,) for v in self.image.vertices)
        facets = tuple(tuple(-a for a in ai) + (bi,) for ai, bi in zip(H.A, H.b))
        return GradedConeRep(gens, facets)

    def vertex_cone(self, v: Sequence[int]) -> list[Point]:
        """Generators ``w - v`` (chart coordinates) of the cone of ``P`` at vertex ``v``."""
        v = tuple(v)
        if v not in self.vertices:
            raise NotAVertex(f"{v} is not a vertex")
        yv = self.chart.to_chart(v)
        return [tuple(a - b for a, b in zip(self.chart.to_chart(w), yv))
                for w in self.vertices if w != v]


def _fits_int64(rows) -> bool:
    return all(abs(a) < 2**62 for row in rows for a in row)


def _saturated_basis(diffs: list[list[int]], r: int) -> list[Point]:
    """HNF basis of ``span_Q(diffs) ∩ Z^N``."""
    _, _, V = smith_normal_form(diffs)
    Vinv = inverse(V)
    rows = [[int(a) for a in Vinv[i]] for i in range(r)]
    H, _ = hermite_normal_form(rows)
    return [tuple(row) for row in H if any(row)]


def _extreme_points(points: list[Point]) -> list[Point]:
    if len(points) <= 2:
        return points
    tmp = LatticePolytope(points, _checked=True)
    d = tmp.dim
    if d == 0:
        return points[:1]
    H = tmp.facets
    keep = []
    for p, y in zip(tmp.vertices, (tmp.chart.to_chart(v) for v in tmp.vertices)):
        tight = [a for a, bi in zip(H.A, H.b) if dot(a, y) == bi]
        if len(tight) >= d and rank(tight) == d:
            keep.append(p)
    return keep
