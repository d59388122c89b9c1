"""Dual description and placing triangulations of full-dimensional cones.

Polytopes are handled through their homogenization: a polytope with
vertices ``v`` corresponds to the cone over the rows ``(v, 1)``.
"""

from __future__ import annotations

from typing import Sequence

from .budget import check_deadline
from .exact import dot, nullspace, primitive, rank


def cone_facets(rays: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Inner facet normals of the full-dimensional cone spanned by ``rays``.

    Double description on the dual cone ``{a : <a, r> >= 0}``; the returned
    normals are primitive integer vectors, sorted, irredundant.
    """
    rays = [tuple(r) for r in rays]
    dim = len(rays[0])
    if rank(rays) != dim:
        raise ValueError("cone_facets needs a full-dimensional cone")

    basis: list[int] = []
    for i in range(len(rays)):
        if rank([rays[j] for j in basis] + [rays[i]]) > len(basis):
            basis.append(i)
            if len(basis) == dim:
                break
    # extreme rays of {a : <a, r_i> >= 0, i in basis}: one per dropped constraint
    gens: list[tuple[int, ...]] = []
    zeros: list[int] = []
    for drop in basis:
        kept = [rays[j] for j in basis if j != drop]
        a = nullspace(kept, dim)[0]
        if dot(a, rays[drop]) < 0:
            a = tuple(-x for x in a)
        gens.append(tuple(a))
        zeros.append(sum(1 << j for j in basis if j != drop))

    for i, r in enumerate(rays):
        if i in basis:
            continue
        check_deadline()
        vals = [dot(g, r) for g in gens]
        pos = [t for t, v in enumerate(vals) if v > 0]
        neg = [t for t, v in enumerate(vals) if v < 0]
        if not neg:
            for t, v in enumerate(vals):
                if v == 0:
                    zeros[t] |= 1 << i
            continue
        new_gens = []
        new_zeros = []
        for t, v in enumerate(vals):
            if v >= 0:
                new_gens.append(gens[t])
                new_zeros.append(zeros[t] | (1 << i) if v == 0 else zeros[t])
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if common.bit_count() < dim - 2:
                    continue
                # adjacency: no other generator's zero set contains the common one
                if any(s != p and s != q and zeros[s] & common == common
                       for s in range(len(gens))):
                    continue
                a = primitive([vals[p] * y - vals[q] * x for x, y in zip(gens[p], gens[q])])
                new_gens.append(a)
                new_zeros.append(common | (1 << i))
        gens, zeros = new_gens, new_zeros

    out = set()
    for g, z in zip(gens, zeros):
        tight = [rays[j] for j in range(len(rays)) if z >> j & 1]
        if len(tight) >= dim - 1 and rank(tight) == dim - 1:
            out.add(primitive(g))
    return sorted(out)


def _hyperplane(rays: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    return nullspace(rays, dim)[0]


def placing_triangulation(rays: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Placing triangulation of the cone over ``rays`` (in the given order).

    Returns simplicial cones as sorted tuples of ray indices. Rays that fall
    inside the cone built so far are skipped, so only extreme rays and rays
    placed before the hull covered them are used.
    """
    rays = [tuple(r) for r in rays]
    dim = len(rays[0])
    if rank(rays) != dim:
        raise ValueError("placing_triangulation needs a full-dimensional cone")
    first: list[int] = []
    for i in range(len(rays)):
        if rank([rays[j] for j in first] + [rays[i]]) > len(first):
            first.append(i)
            if len(first) == dim:
                break

    simplices: list[tuple[int, ...]] = []
    boundary: dict[tuple[int, ...], tuple[int, ...]] = {}

    def add_simplex(sigma: tuple[int, ...]) -> None:
        simplices.append(sigma)
        for drop in sigma:
            facet = tuple(j for j in sigma if j != drop)
            if facet in boundary:
                del boundary[facet]
                continue
            a = _hyperplane([rays[j] for j in facet], dim)
            if dot(a, rays[drop]) < 0:
                a = tuple(-x for x in a)
            boundary[facet] = a

    add_simplex(tuple(sorted(first)))
    for i in range(len(rays)):
        if i in first:
            continue
        check_deadline()
        visible = [f for f, a in boundary.items() if dot(a, rays[i]) < 0]
        for f in visible:
            add_simplex(tuple(sorted(f + (i,))))
    return sorted(simplices)
