"""Explicit polytopes with known invariants, in fixed coordinates (no chart applied)."""

from __future__ import annotations

from .errors import BadParameters
from .polytope import LatticePolytope


def _unit(d: int, i: int) -> tuple[int, ...]:
    return tuple(int(c == i) for c in range(d))


def berkeley(d: int, j: int) -> LatticePolytope:
    """Empty simplex with vertices ``0, e_1, ..., e_{d-1}`` and ``e_1 + ... + e_j + j e_d``.

    All six dilation invariants equal ``j``; the delta-vector has ``j - 1``
    ones starting at position 2.
    """
    if d < 3 or not 2 <= j <= d - 1:
        raise BadParameters("need d >= 3 and 2 <= j <= d - 1")
    last = tuple(1 if i < j else 0 for i in range(d - 1)) + (j,)
    return LatticePolytope([(0,) * d] + [_unit(d, i) for i in range(d - 1)] + [last])


def gap_simplex(m: int) -> LatticePolytope:
    """Simplex of dimension ``2m - 1`` whose top vertex is ``(m-1, ..., m-1, m)``."""
    if m < 4:
        raise BadParameters("need m >= 4")
    d = 2 * m - 1
    return LatticePolytope([(0,) * d] + [_unit(d, i) for i in range(d - 1)]
                           + [(m - 1,) * (d - 1) + (m,)])


def one_hole_simplex(d: int) -> LatticePolytope:
    """Simplex whose top vertex is ``(d+1, ..., d+1, d+2)``; ``(1, ..., 1)`` is interior."""
    if d < 3:
        raise BadParameters("need d >= 3")
    return LatticePolytope([(0,) * d] + [_unit(d, i) for i in range(d - 1)]
                           + [(d + 1,) * (d - 1) + (d + 2,)])


def two_block_simplex() -> LatticePolytope:
    """13-dimensional simplex built from two blocks of sizes 7 and 6.

    The first block is the ``m = 4`` member of :func:`gap_simplex`; the second
    is ``e_1, ..., e_5, (1, ..., 1, 2)`` in six coordinates.
    """
    a_rows = [_unit(7, i) for i in range(6)] + [(3,) * 6 + (4,)]
    b_rows = [_unit(6, i) for i in range(5)] + [(1,) * 5 + (2,)]
    rows = [r + (0,) * 6 for r in a_rows] + [(0,) * 7 + r for r in b_rows]
    return LatticePolytope([(0,) * 13] + rows)


def boston(d: int) -> LatticePolytope:
    """Prism-like polytope on ``v_0..v_d`` and ``v_i + e_d`` with ``M = d(d-2) + 1``.

    ``v_0 = 0``, ``v_i = e_i`` for ``i < d`` and ``v_d = e_1 + ... + e_{d-1} + M e_d``.
    """
    if d < 4:
        raise BadParameters("need d >= 4")
    M = d * (d - 2) + 1
    base = [(0,) * d] + [_unit(d, i) for i in range(d - 1)] + [(1,) * (d - 1) + (M,)]
    up = [v[:-1] + (v[-1] + 1,) for v in base]
    return LatticePolytope(base + up)


def minkowski_pair() -> tuple[LatticePolytope, LatticePolytope]:
    """Two polytopes with the integer decomposition property whose sum lacks it."""
    P = LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
    Q = LatticePolytope([(0, 0, 0), (1, 1, 3)])
    return P, Q


FAMILIES = {
    "berkeley": (berkeley, ("d", "j")),
    "gap_simplex": (gap_simplex, ("m",)),
    "one_hole_simplex": (one_hole_simplex, ("d",)),
    "two_block_simplex": (two_block_simplex, ()),
    "boston": (boston, ("d",)),
}
