"""Lattice points of dilated polytopes and of half-open parallelepipeds.

Points of ``kP`` are produced by coordinate recursion: the bounds for
coordinate ``i`` come from the facets of the projection of ``P`` onto the
first ``i`` coordinates. The recursion runs level by level on numpy blocks
of prefixes, so the Python overhead is per block rather than per point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .budget import check_deadline, check_points, check_subsets
from .errors import BudgetExceeded, NotASimplex
from .exact import det, smith_normal_form
from .polytope import LatticePolytope, Point

CHUNK = 1 << 16


@dataclass(frozen=True)
class PointSet:
    """Lattice points of ``kP`` in chart coordinates, sorted lexicographically."""

    k: int
    points: np.ndarray

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return (tuple(int(a) for a in p) for p in self.points)

    def as_set(self) -> set[Point]:
        return set(iter(self))


def _fiber_sizes(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """``max(hi - lo + 1, 0)`` as int64; larger fibers could never be listed anyway."""
    sizes = np.maximum(hi - lo + 1, 0)
    if sizes.dtype == object:
        total = int(sizes.sum())
        if total >= 2**62:
            check_points(total)
            raise BudgetExceeded(f"a fiber of {total} lattice points")
    return sizes.astype(np.int64)


class _Levels:
    """Facet systems of the coordinate projections of a full-dimensional image."""

    def __init__(self, P: LatticePolytope):
        self.dim = P.dim
        verts = P.image.vertices
        self.max_vertex = max((abs(a) for v in verts for a in v), default=0)
        self.levels: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
        for i in range(1, self.dim + 1):
            proj = LatticePolytope({v[:i] for v in verts})
            H = proj.ambient_facets()
            A = np.array(H.A, dtype=object)
            b = np.array(H.b, dtype=object)
            self.levels.append((A[:, :i - 1], A[:, i - 1], b))
        self.max_normal = max((abs(a) for A, last, _ in self.levels
                               for a in np.concatenate([A.ravel(), last])), default=1)
        self.max_rhs = max((abs(x) for _, _, b in self.levels for x in b), default=0)

    def dtype_for(self, k: int):
        # every intermediate |A x| + k|b| stays below this bound
        bound = self.max_normal * self.dim * k * self.max_vertex + k * self.max_rhs
        return np.int64 if bound < 2**62 else object

    def _bounds(self, prefix: np.ndarray, i: int, k: int, dtype):
        A, last, b = self.levels[i]
        A = A.astype(dtype)
        last = last.astype(dtype)
        rhs = k * b.astype(dtype)[None, :] - (prefix @ A.T if i else 0)
        if i == 0:
            rhs = np.broadcast_to(rhs, (len(prefix), len(b)))
        pos = last > 0
        neg = last < 0
        hi = np.floor_divide(rhs[:, pos], last[pos]).min(axis=1)
        lo = (-np.floor_divide(-rhs[:, neg], last[neg])).max(axis=1)
        return lo, hi

    def _extend(self, prefix: np.ndarray, i: int, k: int, dtype) -> Iterator[np.ndarray]:
        """One-step extensions of ``prefix`` in lex order, in blocks of about CHUNK rows."""
        lo, hi = self._bounds(prefix, i, k, dtype)
        if len(prefix) == 1 and int(hi[0]) - int(lo[0]) + 1 > CHUNK:
            # one prefix with a long fiber: walk the fiber in windows
            for start in range(int(lo[0]), int(hi[0]) + 1, CHUNK):
                stop = min(start + CHUNK - 1, int(hi[0]))
                col = (np.arange(start, stop + 1, dtype=np.int64) if dtype is np.int64
                       else np.array(range(start, stop + 1), dtype=object))
                yield np.concatenate([np.repeat(prefix, len(col), axis=0), col[:, None]], axis=1)
            return
        yield self._fill(prefix, lo, hi, dtype)

    @staticmethod
    def _fill(prefix: np.ndarray, lo, hi, dtype) -> np.ndarray:
        counts = _fiber_sizes(lo, hi)
        total = int(counts.sum())
        rows = np.repeat(np.arange(len(prefix)), counts)
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        offsets = np.arange(total, dtype=np.int64) - starts
        last = np.repeat(lo, counts) + offsets.astype(dtype)
        return np.concatenate([prefix[rows], last[:, None].astype(dtype)], axis=1)

    def _count_last(self, prefix: np.ndarray, k: int, dtype) -> int:
        lo, hi = self._bounds(prefix, self.dim - 1, k, dtype)
        return int(np.maximum(hi - lo + 1, 0).sum())

    def _split(self, prefix: np.ndarray, i: int, k: int, dtype) -> list[np.ndarray]:
        """Cut ``prefix`` into pieces whose one-step extensions stay near CHUNK rows."""
        if len(prefix) <= 1:
            return [prefix]
        lo, hi = self._bounds(prefix, i, k, dtype)
        counts = _fiber_sizes(lo, hi)
        cuts = np.searchsorted(np.cumsum(counts), np.arange(CHUNK, int(counts.sum()), CHUNK))
        return [piece for piece in np.split(prefix, np.unique(cuts)) if len(piece)]

    def chunks(self, k: int) -> Iterator[np.ndarray]:
        dtype = self.dtype_for(k)
        if self.dim == 0:
            yield np.zeros((1, 0), dtype=dtype)
            return
        seen = 0
        seen_prefix = [0] * self.dim

        def walk(prefix: np.ndarray, i: int):
            nonlocal seen
            check_deadline()
            if i == self.dim:
                seen += len(prefix)
                check_points(seen)
                yield prefix
                return
            for piece in self._split(prefix, i, k, dtype):
                for ext in self._extend(piece, i, k, dtype):
                    if i + 1 < self.dim:
                        # projected points count against the cap as well
                        seen_prefix[i] += len(ext)
                        check_points(seen_prefix[i])
                    if len(ext):
                        yield from walk(ext, i + 1)

        yield from walk(np.zeros((1, 0), dtype=dtype), 0)

    def count(self, k: int) -> int:
        dtype = self.dtype_for(k)
        if self.dim == 0:
            return 1
        total = 0
        seen_prefix = [0] * self.dim

        def walk(prefix: np.ndarray, i: int) -> None:
            nonlocal total
            check_deadline()
            if i == self.dim - 1:
                total += self._count_last(prefix, k, dtype)
                return
            for piece in self._split(prefix, i, k, dtype):
                for ext in self._extend(piece, i, k, dtype):
                    seen_prefix[i] += len(ext)
                    check_points(seen_prefix[i])
                    if len(ext):
                        walk(ext, i + 1)

        walk(np.zeros((1, 0), dtype=dtype), 0)
        return total


def _levels(P: LatticePolytope) -> _Levels:
    img = P.image
    return img.memo("levels", lambda: _Levels(img))


def iter_lattice_points(P: LatticePolytope, k: int = 1) -> Iterator[np.ndarray]:
    """Blocks of ``kP ∩ Z^d`` (chart coordinates) in lexicographic order."""
    if k < 0:
        raise ValueError("dilation factor must be nonnegative")
    if k == 0:
        yield np.zeros((1, P.dim), dtype=np.int64)
        return
    yield from _levels(P).chunks(k)


def lattice_points(P: LatticePolytope, k: int = 1) -> PointSet:
    """All lattice points of ``kP`` in chart coordinates, lexicographically sorted.

    Raises:
        BudgetExceeded: more points than the active point cap.
    """
    blocks = list(iter_lattice_points(P, k))
    pts = np.concatenate(blocks) if blocks else np.zeros((0, P.dim), dtype=np.int64)
    return PointSet(k, pts)


def count_lattice_points(P: LatticePolytope, k: int = 1) -> int:
    """``|kP ∩ Z^d|`` without materialising the last coordinate."""
    if k < 0:
        raise ValueError("dilation factor must be nonnegative")
    if k == 0:
        return 1
    return _levels(P).count(k)


@dataclass(frozen=True)
class BoxElement:
    """A lattice point ``sum r_i (v_i, 1)`` with ``r_i = numerators[i] / volume``."""

    point: Point
    degree: int
    numerators: tuple[int, ...]


def fundamental_parallelepiped(rows: Sequence[Sequence[int]]) -> tuple[np.ndarray, np.ndarray, int]:
    """Lattice points ``r @ M`` with ``0 <= r < 1`` for a square nonsingular integer ``M``.

    Returns ``(points, numerators, volume)`` where ``r = numerators / volume``.
    The points form the group ``Z^n / Z^n M``; they are listed by a mixed-radix
    counter over its Smith invariant factors.
    """
    M = [list(r) for r in rows]
    n = len(M)
    vol = abs(det(M))
    if vol == 0:
        raise NotASimplex("generators are linearly dependent")
    check_points(vol)
    # p = r M with r = p M^-1; writing M = U^-1 D V^-1 gives r = (p V) D^-1 U
    D, U, _ = smith_normal_form(M)
    dtype = np.int64 if vol * vol * n * max(1, max(abs(a) for r in M for a in r)) < 2**62 else object
    nums = np.zeros((1, n), dtype=dtype)
    for i in range(n):
        f = D[i][i]
        if f == 1:
            continue
        gen = np.array([vol // f * u % vol for u in U[i]], dtype=dtype)
        steps = np.arange(f, dtype=np.int64).astype(dtype)
        nums = ((nums[:, None, :] + steps[None, :, None] * gen[None, None, :]) % vol).reshape(-1, n)
        check_deadline()
    pts = (nums @ np.array(M, dtype=dtype)) // vol
    return pts, nums, vol


class Parallelepiped:
    """Half-open parallelepiped of the lifted simplex ``(v_0, 1), ..., (v_d, 1)``.

    Its lattice points form the group ``Z^{d+1} / <(v_i, 1)>`` of order equal to
    the normalized volume; they are listed by running a mixed-radix counter
    over the Smith invariant factors.
    """

    def __init__(self, vertices: Sequence[Sequence[int]]):
        verts = [tuple(int(a) for a in v) for v in vertices]
        d = len(verts) - 1
        if d < 0 or any(len(v) != d for v in verts):
            raise NotASimplex("need d + 1 points in Z^d")
        self.vertices = verts
        self.dim = d
        M = [list(v) + [1] for v in verts]
        vol = det(M)
        if vol == 0:
            raise NotASimplex("vertices are affinely dependent")
        self.volume = abs(vol)
        self.lifted = M

    @cached_property
    def elements(self) -> list[BoxElement]:
        """All box points sorted by (degree, point); the origin comes first."""
        pts, nums, _ = fundamental_parallelepiped(self.lifted)
        out = [BoxElement(tuple(int(a) for a in p[:-1]), int(p[-1]), tuple(int(a) for a in r))
               for p, r in zip(pts, nums)]
        out.sort(key=lambda e: (e.degree, e.point))
        return out

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {e.numerators: i for i, e in enumerate(self.elements)}

    def degree_histogram(self) -> list[int]:
        hist = [0] * (self.dim + 1)
        for e in self.elements:
            hist[e.degree] += 1
        return hist


def parallelepiped_points(S: LatticePolytope | Sequence[Sequence[int]]) -> list[BoxElement]:
    """Lattice points of the half-open parallelepiped of a simplex (chart coordinates).

    Raises:
        NotASimplex: ``S`` does not have exactly ``dim + 1`` vertices.
    """
    if isinstance(S, LatticePolytope):
        if not S.is_simplex:
            raise NotASimplex("polytope is not a simplex")
        return Parallelepiped(S.image.vertices).elements
    return Parallelepiped(S).elements


def is_empty_simplex(S: LatticePolytope | Sequence[Sequence[int]]) -> bool:
    """True iff the only lattice points of the simplex are its vertices."""
    verts = S.image.vertices if isinstance(S, LatticePolytope) else S
    if isinstance(S, LatticePolytope) and not S.is_simplex:
        raise NotASimplex("polytope is not a simplex")
    return not any(e.degree == 1 for e in Parallelepiped(verts).elements)


def empty_simplices(P: LatticePolytope, min_volume: int = 1) -> Iterator[tuple[tuple[int, ...], int]]:
    """Empty full-dimensional simplices spanned by lattice points of ``P``.

    Yields ``(indices, volume)`` where ``indices`` refer to the lexicographic
    list ``lattice_points(P, 1)``. Only simplices of normalized volume at least
    ``min_volume`` are reported.

    Raises:
        BudgetExceeded: the number of candidate subsets is above the cap.
    """
    pts = lattice_points(P, 1).points
    d = P.dim
    n = len(pts)
    if n < d + 1:
        return
    check_subsets(comb(n, d + 1))
    lifted_rows = [tuple(int(a) for a in p) + (1,) for p in pts]
    big = max(int(max(abs(int(a)) for a in p)) if d else 0 for p in pts) or 1
    # Hadamard bound on the lifted determinants; below it float rounding is exact
    hadamard = (big * big * d + 1) ** ((d + 1) / 2)
    if hadamard < 2**20:
        yield from _empty_simplices_float(np.array(lifted_rows, dtype=float), d, min_volume)
        return
    for s in itertools.combinations(range(n), d + 1):
        check_deadline()
        vol = abs(det([lifted_rows[i] for i in s]))
        if vol and vol >= min_volume and (vol == 1 or is_empty_simplex(
                [lifted_rows[i][:-1] for i in s])):
            yield s, vol


def _empty_simplices_float(lifted: np.ndarray, d: int, min_volume: int):
    n = len(lifted)
    chunk = max(1, min(CHUNK, 4_000_000 // (n * (d + 1))))
    combos = itertools.combinations(range(n), d + 1)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return
        check_deadline()
        idx = np.array(block, dtype=np.int64)
        mats = lifted[idx]
        dets = np.rint(np.abs(np.linalg.det(mats))).astype(np.int64)
        keep = dets >= max(min_volume, 1)
        idx, mats, dets = idx[keep], mats[keep], dets[keep]
        if not len(idx):
            continue
        # barycentric coordinates of every lattice point; they are multiples of 1/vol
        bary = np.einsum("pj,sji->spi", lifted, np.linalg.inv(mats))
        inside = (bary > -0.5 / dets[:, None, None]).all(axis=2).sum(axis=1)
        for s, vol in zip(idx[inside == d + 1], dets[inside == d + 1]):
            yield tuple(int(i) for i in s), int(vol)
