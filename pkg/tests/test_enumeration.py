import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dilatope import (BudgetExceeded, LatticePolytope, NotASimplex, count_lattice_points,
                      empty_simplices, fundamental_parallelepiped, is_empty_simplex,
                      iter_lattice_points, lattice_points, limits, parallelepiped_points)
from dilatope.enumeration import Parallelepiped
from dilatope.exact import det
from oracles import ambient_points, box_scan, random_polytope, random_simplex


@pytest.mark.parametrize("seed", range(60))
def test_lattice_points_match_box_scan(seed):
    rng = random.Random(seed)
    d = rng.choice([1, 2, 3])
    P = random_polytope(rng, d, coord_max=4)
    for k in range(3):
        expected = box_scan(P.vertices, k) if k else {(0,) * d}
        assert ambient_points(P, k) == expected
        assert count_lattice_points(P, k) == len(expected)


@pytest.mark.parametrize("seed", range(20))
def test_lower_dimensional_polytopes_enumerate_in_their_own_lattice(seed):
    rng = random.Random(seed)
    # a random triangle embedded in Z^4 by an injective integer map
    T = random_polytope(rng, 2, coord_max=3)
    lift = [(1, 2, 0, 1), (0, 1, 3, 1)]
    verts = [tuple(sum(a * row[c] for a, row in zip(v, lift)) for c in range(4)) for v in T.vertices]
    P = LatticePolytope(verts)
    assert P.dim == 2
    for k in (1, 2):
        img = {tuple(sum(a * row[c] for a, row in zip(v, lift)) for c in range(4))
               for v in box_scan(T.vertices, k)}
        assert ambient_points(P, k) == img


def test_points_come_in_lex_order_and_in_chunks():
    P = LatticePolytope([(0, 0, 0), (9, 0, 0), (0, 9, 0), (0, 0, 9)])
    blocks = list(iter_lattice_points(P, 3))
    pts = np.concatenate(blocks)
    tuples = [tuple(p) for p in pts]
    assert tuples == sorted(tuples)
    assert len(pts) == count_lattice_points(P, 3) == 4060  # C(27 + 3, 3)


def test_overflow_path_uses_exact_integers():
    big = 2**40
    # the long edge points along the last coordinate, whose fibers are only counted
    P = LatticePolytope([(0, 0), (0, big), (1, 0)])
    assert count_lattice_points(P, 1) == big + 2
    assert count_lattice_points(P, 3) == (3 * big + 1) + (2 * big + 1) + (big + 1) + 1
    Q = LatticePolytope([(0, 0), (0, 1), (1, 2**61)])
    pts = lattice_points(Q, 2)
    assert pts.points.dtype == object
    assert list(pts) == [(0, 0), (0, 1), (0, 2), (1, 2**61), (1, 2**61 + 1), (2, 2**62)]
    with pytest.raises(BudgetExceeded):
        lattice_points(LatticePolytope([(0, 0), (1, 0), (0, 2**61)]), 4)


def test_long_fiber_is_walked_in_windows():
    P = LatticePolytope([(0,), (200_000,)])
    blocks = list(iter_lattice_points(P, 1))
    assert len(blocks) > 1
    assert sum(len(b) for b in blocks) == 200_001
    assert int(blocks[-1][-1][0]) == 200_000


def test_huge_projection_hits_the_cap_instead_of_memory():
    P = LatticePolytope([(0, 0), (2**40, 0), (0, 1)])
    with pytest.raises(BudgetExceeded):
        count_lattice_points(P, 1)


def test_point_cap():
    P = LatticePolytope([(0, 0), (50, 0), (0, 50)])
    with limits(points=100):
        with pytest.raises(BudgetExceeded):
            lattice_points(P, 1)


# ---------------------------------------------------------------- parallelepipeds

def box_points_brute(rows):
    """Lattice points ``r M`` with ``0 <= r < 1`` by scanning all rational ``r`` with denominator vol."""
    M = np.array(rows, dtype=object)
    n = len(rows)
    vol = abs(det(rows))
    out = set()
    for nums in itertools.product(range(vol), repeat=n):
        p = np.array(nums, dtype=object) @ M
        if all(a % vol == 0 for a in p):
            out.add(tuple(int(a // vol) for a in p))
    return out


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(
    st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_fundamental_parallelepiped_matches_brute_force(rows):
    vol = abs(det(rows))
    if vol == 0:
        with pytest.raises(NotASimplex):
            fundamental_parallelepiped(rows)
        return
    if vol ** len(rows) > 50_000:
        return
    pts, nums, v = fundamental_parallelepiped(rows)
    assert v == vol and len(pts) == vol
    got = {tuple(int(a) for a in p) for p in pts}
    assert len(got) == vol
    assert got == box_points_brute(rows)


@pytest.mark.parametrize("seed", range(40))
def test_parallelepiped_size_is_the_volume(seed):
    rng = random.Random(seed)
    d = rng.choice([2, 3, 4, 5])
    S = random_simplex(rng, d, coord_max=3, max_volume=50)
    elems = parallelepiped_points(S)
    assert len(elems) == S.normalized_volume
    assert elems[0].degree == 0 and not any(elems[0].point)
    assert all(0 <= e.degree <= d for e in elems)


def test_reeve_tetrahedron_box():
    # conv(0, e1, e2, (1, 1, r)) is empty with box points of degree 2 only
    for r in range(2, 7):
        Pp = Parallelepiped([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, r)])
        assert Pp.degree_histogram() == [1, 0, r - 1, 0]
        assert is_empty_simplex(Pp.vertices)


@pytest.mark.parametrize("seed", range(25))
def test_empty_simplices_against_brute_force(seed):
    rng = random.Random(seed)
    d = rng.choice([2, 3])
    P = random_polytope(rng, d, coord_max=3)
    pts = [tuple(int(a) for a in p) for p in lattice_points(P, 1)]
    expected = set()
    for s in itertools.combinations(range(len(pts)), d + 1):
        rows = [pts[i] + (1,) for i in s]
        vol = abs(det(rows))
        if not vol:
            continue
        # the simplex lies in P, so its lattice points are among pts
        M = np.array(rows, dtype=float).T
        lam = np.linalg.solve(M, np.array([p + (1,) for p in pts], dtype=float).T)
        inside = np.all(lam >= -1e-9, axis=0).sum()
        if inside == d + 1:
            expected.add((s, vol))
    assert set(empty_simplices(P)) == expected
    assert set(empty_simplices(P, min_volume=2)) == {e for e in expected if e[1] >= 2}


def test_is_empty_simplex():
    assert is_empty_simplex(LatticePolytope([(0, 0), (1, 0), (0, 1)]))
    assert not is_empty_simplex(LatticePolytope([(0, 0), (2, 0), (0, 2)]))
    with pytest.raises(NotASimplex):
        Parallelepiped([(0, 0), (1, 1), (2, 2)])
