"""Integer decomposition and very ampleness of dilates, and the six dilation thresholds.

The thresholds are, for a lattice polytope ``P`` of dimension ``d``:

* ``va``: smallest ``k`` with ``kP`` very ample;
* ``midp``: smallest ``k`` with ``kP`` having the integer decomposition property (IDP);
* ``idp``: smallest ``k`` with ``nP`` having IDP for every ``n >= k``;
* ``hilb``: top degree of the Hilbert basis of the cone over ``P``;
* ``hole``: top degree of a hole, 1 without holes;
* ``ehr``: top nonzero degree of the delta-vector, 1 when there is none.

They always satisfy ``1 <= va <= midp <= idp <= hole <= ehr <= d`` and
``va <= hilb <= hole <= d - 1`` (for ``d >= 2``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .budget import check_deadline
from .ehrhart import DeltaVector, delta_vector, mu_ehr
from .enumeration import iter_lattice_points, lattice_points
from .errors import BudgetExceeded, ConsistencyViolation, SearchFailed
from .polytope import LatticePolytope, Point
from .semigroup import (HilbertBasis, HoleSet, box_points, hilbert_basis_graded,
                        hilbert_basis_pointed, simplex_semigroup)

BLOCK = 1 << 22


@dataclass(frozen=True)
class IDPCheck:
    """Outcome of an IDP test of ``kP``; on failure ``witness`` lies in ``n(kP)``."""

    holds: bool
    k: int
    n: int | None = None
    witness: Point | None = None

    def __bool__(self) -> bool:
        return self.holds


def _idp_simplex(P: LatticePolytope, k: int) -> IDPCheck:
    S = simplex_semigroup(P)
    for n in range(2, P.dim):
        x = S.failure(n, k)
        if x is not None:
            return IDPCheck(False, k, n, x)
    return IDPCheck(True, k)


def _idp_peeling(P: LatticePolytope, k: int) -> IDPCheck:
    """One-step peeling: ``x`` in ``n(kP)`` needs some ``y`` in ``kP`` with ``x - y`` in ``(n-1)(kP)``.

    Checking ``n = 2, 3, ...`` in order makes the one-step test exact at the
    first failing ``n``, and blocks arrive in lexicographic order, so the first
    failure found is the lex-smallest one.
    """
    A, b = P.facets.arrays
    Y = lattice_points(P, k).points.astype(A.dtype)
    AY = Y @ A.T
    for n in range(2, P.dim):
        limit = (n - 1) * k * b
        for block in iter_lattice_points(P, n * k):
            check_deadline()
            thr = block.astype(A.dtype) @ A.T - limit[None, :]
            ok = np.zeros(len(block), dtype=bool)
            step = max(1, BLOCK // max(1, len(block) * len(b)))
            for s in range(0, len(Y), step):
                pending = ~ok
                if not pending.any():
                    break
                sub = AY[s:s + step]
                ok[pending] = np.all(sub[None, :, :] >= thr[pending][:, None, :], axis=2).any(axis=1)
            if not ok.all():
                x = block[np.flatnonzero(~ok)[0]]
                return IDPCheck(False, k, n, tuple(int(a) for a in x))
    return IDPCheck(True, k)


def is_idp(P: LatticePolytope, k: int = 1, method: str = "auto") -> IDPCheck:
    """Test whether ``kP`` has the integer decomposition property.

    Only sums of at most ``d - 1`` points need checking, because the Hilbert
    basis of the cone over any lattice polytope lives in degrees below ``d``.
    On failure the witness is the lex-smallest bad point for the smallest bad
    number of summands, in chart coordinates of ``P`` scaled by ``nk``.

    Args:
        P: the polytope.
        k: dilation factor, at least 1.
        method: ``"simplex"`` (group dynamic program, simplices only),
            ``"peeling"`` (lattice-point enumeration) or ``"auto"``.
    """
    if k < 1:
        raise ValueError("dilation factor must be positive")
    if method == "auto":
        method = "simplex" if P.is_simplex else "peeling"
    if method == "simplex":
        return _idp_simplex(P, k)
    if method == "peeling":
        return _idp_peeling(P, k)
    raise ValueError(f"unknown method {method!r}")


def _vertex_thresholds(P: LatticePolytope) -> list[int]:
    """For each vertex, the least ``k`` such that ``kP - kv`` holds the vertex cone's Hilbert basis."""

    def build():
        img = P.image
        A = [list(a) for a in P.facets.A]
        out = []
        for v in img.vertices:
            slack = [bi - sum(a * c for a, c in zip(row, v)) for row, bi in zip(A, P.facets.b)]
            gens = [tuple(w - c for w, c in zip(u, v)) for u in img.vertices if u != v]
            need = 1
            for h in hilbert_basis_pointed(gens):
                for row, s in zip(A, slack):
                    val = sum(a * c for a, c in zip(row, h))
                    if s > 0 and val > 0:
                        need = max(need, -(-val // s))
                    elif s == 0 and val > 0:
                        raise ConsistencyViolation("vertex-cone element leaves the cone")
            out.append(need)
        return out

    return P.image.memo("vertex_thresholds", build)


def is_very_ample(P: LatticePolytope, k: int = 1) -> bool:
    """True iff for each vertex ``v`` the lattice points of ``kP - kv`` generate the vertex cone."""
    if k < 1:
        raise ValueError("dilation factor must be positive")
    if P.dim <= 1:
        return True
    return all(t <= k for t in _vertex_thresholds(P))


def mu_va(P: LatticePolytope) -> int:
    if P.dim <= 1:
        return 1
    return max(_vertex_thresholds(P))


def mu_midp(P: LatticePolytope, method: str = "auto") -> int:
    for k in range(1, max(P.dim - 1, 1)):
        if is_idp(P, k, method):
            return k
    return max(P.dim - 1, 1)


def mu_idp(P: LatticePolytope, method: str = "auto") -> int:
    d = P.dim
    if d <= 2:
        return 1
    top = d - 1
    if not is_idp(P, top, method):
        raise ConsistencyViolation("(d-1)P fails the integer decomposition property")
    k = top
    while k > 1 and is_idp(P, k - 1, method):
        k -= 1
    return k


@dataclass(frozen=True)
class MuProfile:
    """The six thresholds. ``hole_bracket`` is set when the hole degree is only bracketed."""

    d: int
    va: int
    midp: int
    idp: int
    hilb: int
    hole: int | None
    ehr: int
    hole_bracket: tuple[int, int] | None = None
    witnesses: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        d = self.d
        top = max(d, 1)
        low, high = (self.hole, self.hole) if self.hole is not None else self.hole_bracket
        chain = [1 <= self.va, self.va <= self.midp, self.midp <= self.idp,
                 self.idp <= high, low <= self.ehr, self.ehr <= top,
                 self.va <= self.hilb, self.hilb <= high, high <= max(d - 1, 1)]
        if not all(chain):
            raise ConsistencyViolation(f"inequality chain fails for {self.as_tuple()}")

    @property
    def complete(self) -> bool:
        return self.hole is not None

    def as_tuple(self) -> tuple:
        return (self.va, self.midp, self.idp, self.hilb, self.hole, self.ehr)

    def as_dict(self) -> dict:
        return {"va": self.va, "midp": self.midp, "idp": self.idp,
                "hilb": self.hilb, "hole": self.hole, "ehr": self.ehr}


def check_theorem_restrictions(p: MuProfile) -> list[str]:
    """Check the known restrictions on the thresholds; returns the rules that passed.

    Raises:
        ConsistencyViolation: a rule fails, which means a computation is wrong.
    """
    d = p.d
    rules = {
        "midp >= (d-1)/2 implies idp = midp": not (2 * p.midp >= d - 1) or p.idp == p.midp,
        "midp <= (d-1)/2 implies idp <= (d-3)/2 + midp":
            not (2 * p.midp <= d - 1) or 2 * p.idp <= d - 3 + 2 * p.midp,
        "idp is never midp + 1": p.idp != p.midp + 1,
        "idp = d-1 implies midp = d-1": p.idp != d - 1 or p.midp == d - 1,
        "midp = 1 or hilb = 1 forces ones": not (p.midp == 1 or p.hilb == 1)
            or ((p.va, p.midp, p.idp, p.hilb) == (1, 1, 1, 1) and p.hole in (1, None)),
    }
    failed = [name for name, ok in rules.items() if not ok]
    if failed:
        raise ConsistencyViolation(f"profile {p.as_tuple()} (d={d}) breaks: {failed}")
    return list(rules)


def mu_profile(P: LatticePolytope, *, hilbert: HilbertBasis | None = None,
               holes: HoleSet | None = None, delta: DeltaVector | None = None) -> MuProfile:
    """All six thresholds of ``P``.

    When the hole computation runs out of budget the result carries
    ``hole=None`` and the bracket ``[max(idp, hilb), d - 1]`` instead.
    """
    d = P.dim
    delta = delta if delta is not None else delta_vector(P)
    ehr = mu_ehr(P, delta)
    hilbert = hilbert if hilbert is not None else hilbert_basis_graded(P)
    hilb = hilbert.max_degree
    va = mu_va(P)
    midp_check = None
    midp = max(d - 1, 1)
    for k in range(1, max(d - 1, 1)):
        check = is_idp(P, k)
        if check:
            midp = k
            break
        midp_check = check
    idp = mu_idp(P)
    witnesses = {}
    if midp_check is not None:
        witnesses["midp"] = {"k": midp_check.k, "n": midp_check.n, "x": list(midp_check.witness)}
    bracket = None
    try:
        hole = (holes if holes is not None else box_points(P)).max_degree
    except BudgetExceeded:
        hole = None
        bracket = (max(idp, hilb), max(d - 1, 1))
    profile = MuProfile(d, va, midp, idp, hilb, hole, ehr, bracket, witnesses)
    check_theorem_restrictions(profile)
    return profile


def peel_to_top_dilate(alpha, n: int, P: LatticePolytope) -> tuple[Point, list[Point]]:
    """Split ``alpha`` in ``nP`` (``n >= d - 1``) as ``alpha' + a_1 + ... + a_{n-d+1}``.

    ``alpha'`` lies in ``(d-1)P`` and each ``a_i`` in ``P``; all in chart coordinates.

    Raises:
        SearchFailed: no split exists, which contradicts the known bound.
    """
    d = P.dim
    target = max(d - 1, 0)
    alpha = tuple(int(a) for a in alpha)
    if n < target:
        raise ValueError("need n >= d - 1")
    if not P.contains_chart(alpha, n):
        raise ValueError("alpha is not in nP")
    A, b = P.facets.arrays
    Y = lattice_points(P, 1).points.astype(A.dtype)
    AY = Y @ A.T
    dead: set[tuple[Point, int]] = set()

    def search(x: Point, m: int, parts: list[Point]):
        if m == target:
            return x, parts
        if (x, m) in dead:
            return None
        check_deadline()
        Ax = np.array(x, dtype=A.dtype) @ A.T
        mask = np.all(Ax[None, :] - AY <= (m - 1) * b[None, :], axis=1)
        for y in Y[mask]:
            y = tuple(int(a) for a in y)
            found = search(tuple(a - c for a, c in zip(x, y)), m - 1, parts + [y])
            if found:
                return found
        dead.add((x, m))
        return None

    found = search(alpha, n, [])
    if found is None:
        raise SearchFailed(f"no split of {alpha} in {n}P")
    return found
