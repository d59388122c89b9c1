import math
import random

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from dilatope import DimensionMismatch, EmptyInput, LatticePolytope, NotAVertex
from dilatope.exact import det
from dilatope.hull import cone_facets, placing_triangulation
from oracles import in_hull, random_polytope

RNG_SEEDS = range(40)


def scipy_facets(vertices):
    """Distinct facet hyperplanes of a full-dimensional hull, rounded and normalized."""
    H = ConvexHull(np.array(vertices, dtype=float))
    planes = set()
    for eq in H.equations:
        eq = eq / np.abs(eq[:-1]).max()
        planes.add(tuple(np.round(eq, 6)))
    return planes


@pytest.mark.parametrize("seed", RNG_SEEDS)
def test_facets_match_scipy(seed):
    rng = random.Random(seed)
    d = rng.choice([2, 3])
    P = random_polytope(rng, d, coord_max=5, npts=rng.randint(d + 2, 9))
    ref = scipy_facets(P.vertices)
    assert len(P.facets) == len(ref)
    A, b = P.facets.A, P.facets.b
    base = P.chart.base
    for a, bi in zip(A, b):
        # each facet is tight on at least d affinely independent vertices
        tight = [v for v in P.vertices if sum(x * (c - o) for x, c, o in zip(a, v, base)) == bi]
        assert len(tight) >= d
        diffs = [[p - q for p, q in zip(v, tight[0])] for v in tight[1:]]
        assert np.linalg.matrix_rank(np.array(diffs, dtype=float)) == d - 1


@pytest.mark.parametrize("seed", RNG_SEEDS)
def test_normalized_volume_matches_scipy(seed):
    rng = random.Random(seed)
    d = rng.choice([2, 3])
    P = random_polytope(rng, d, coord_max=5)
    vol = ConvexHull(np.array(P.vertices, dtype=float)).volume * math.factorial(d)
    assert P.normalized_volume == round(vol)


@pytest.mark.parametrize("seed", RNG_SEEDS)
def test_vertices_are_the_extreme_points(seed):
    rng = random.Random(seed)
    pts = [tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(10)]
    P = LatticePolytope(pts)
    if P.dim == 3:
        H = ConvexHull(np.array(pts, dtype=float))
        assert set(P.vertices) == {pts[i] for i in H.vertices}
    for p in pts:
        assert P.contains(p)


def test_triangulation_covers_volume():
    for seed in range(30):
        rng = random.Random(seed)
        P = random_polytope(rng, 3, coord_max=4)
        img = P.image.vertices
        vols = [abs(det([img[i] + (1,) for i in s])) for s in P.triangulation]
        assert all(vols)
        assert sum(vols) == P.normalized_volume


def test_cone_facets_of_the_positive_orthant():
    assert sorted(cone_facets([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])) == [
        (0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_cone_facets_rejects_lower_dimensional_input():
    with pytest.raises(ValueError):
        cone_facets([(1, 0, 0), (0, 1, 0)])


def test_placing_triangulation_of_a_square():
    simplices = placing_triangulation([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    assert len(simplices) == 2


class TestChart:
    def test_lower_dimensional_polytope_gets_a_unimodular_chart(self):
        # a triangle in the plane x + y + z = 3 three times a unimodular triangle
        P = LatticePolytope([(3, 0, 0), (0, 3, 0), (0, 0, 3)])
        assert P.dim == 2
        assert P.normalized_volume == 9
        for v in P.vertices:
            y = P.chart.to_chart(v)
            assert P.chart.to_ambient(y) == v
        assert P.contains((1, 1, 1))
        assert not P.contains((1, 1, 0))
        assert not P.contains((2, 2, -1))

    def test_chart_image_starts_at_the_origin(self):
        P = LatticePolytope([(5, 5), (6, 5), (5, 7)])
        assert (0, 0) in P.image.vertices
        assert P.image.normalized_volume == 2

    def test_segment_in_higher_space(self):
        P = LatticePolytope([(0, 0, 0), (2, 4, 6)])
        assert P.dim == 1
        assert P.normalized_volume == 2
        assert P.contains((1, 2, 3))

    def test_point(self):
        P = LatticePolytope([(1, 2)])
        assert P.dim == 0 and P.normalized_volume == 1


def test_contains_against_lp_oracle():
    rng = random.Random(7)
    P = random_polytope(rng, 3, coord_max=4)
    for _ in range(200):
        x = tuple(rng.randint(-1, 5) for _ in range(3))
        assert P.contains(x) == in_hull(P.vertices, x)


def test_dilate_and_minkowski_sum():
    T = LatticePolytope([(0, 0), (1, 0), (0, 1)])
    assert T.dilate(3).normalized_volume == 9
    S = T.minkowski_sum(LatticePolytope([(0, 0), (1, 1)]))
    assert S.vertices == ((0, 0), (0, 1), (1, 0), (1, 2), (2, 1))
    with pytest.raises(ValueError):
        T.dilate(0)
    with pytest.raises(DimensionMismatch):
        T.minkowski_sum(LatticePolytope([(0, 0, 0)]))


def test_vertex_cone():
    T = LatticePolytope([(0, 0), (1, 0), (0, 1)])
    assert sorted(T.vertex_cone((0, 0))) == [(0, 1), (1, 0)]
    with pytest.raises(NotAVertex):
        T.vertex_cone((1, 1))


@pytest.mark.parametrize("pts, err", [
    ([], EmptyInput),
    ([(0, 0), (1, 0, 0)], DimensionMismatch),
])
def test_bad_input(pts, err):
    with pytest.raises(err):
        LatticePolytope(pts)


def test_from_points_rejects_fractions():
    with pytest.raises(ValueError):
        LatticePolytope.from_points([(0.5, 0), (1, 0)])
