"""The delta-vector (h*-vector), the top nonzero degree and the first interior dilate."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .enumeration import Parallelepiped, count_lattice_points, iter_lattice_points
from .errors import ConsistencyViolation
from .polytope import LatticePolytope


@dataclass(frozen=True)
class DeltaVector:
    values: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def top_degree(self) -> int:
        """Largest ``i`` with ``delta_i != 0`` (0 for a unimodular simplex)."""
        return max(i for i, v in enumerate(self.values) if v)


def delta_from_counts(counts: list[int], d: int) -> tuple[int, ...]:
    """Invert ``sum_k L(k) t^k = delta(t) / (1 - t)^(d+1)`` using ``L(0..d)``."""
    return tuple(sum((-1) ** (i - j) * comb(d + 1, i - j) * counts[j] for j in range(i + 1))
                 for i in range(d + 1))


def delta_vector(P: LatticePolytope, method: str = "auto") -> DeltaVector:
    """Delta-vector of ``P`` (with respect to the lattice of its affine hull).

    Args:
        P: the polytope.
        method: ``"counts"`` inverts the lattice-point counts of ``0P..dP``;
            ``"box"`` uses the degree histogram of the fundamental
            parallelepiped and needs a simplex; ``"auto"`` picks ``"box"``
            for simplices.

    Returns:
        The delta-vector; its basic identities are checked before returning.
    """
    d = P.dim
    if method == "auto":
        method = "box" if P.is_simplex else "counts"
    if method == "box":
        delta = tuple(Parallelepiped(P.image.vertices).degree_histogram())
        L1 = d + 1 + delta[1] if d >= 1 else 1
    elif method == "counts":
        counts = [count_lattice_points(P, k) for k in range(d + 1)]
        delta = delta_from_counts(counts, d)
        L1 = counts[1] if d >= 1 else 1
    else:
        raise ValueError(f"unknown method {method!r}")
    _check_delta(delta, P, L1)
    return DeltaVector(delta)


def _check_delta(delta, P: LatticePolytope, L1: int) -> None:
    d = P.dim
    if delta[0] != 1 or any(v < 0 for v in delta):
        raise ConsistencyViolation(f"delta-vector {delta} has a bad entry")
    if sum(delta) != P.normalized_volume:
        raise ConsistencyViolation(f"delta-vector {delta} does not sum to the volume")
    if d >= 1 and delta[1] != L1 - d - 1:
        raise ConsistencyViolation(f"delta_1 of {delta} disagrees with the point count")


def mu_ehr(P: LatticePolytope, delta: DeltaVector | None = None) -> int:
    """Largest ``i > 0`` with ``delta_i != 0``; 1 when there is none."""
    delta = delta if delta is not None else delta_vector(P)
    return max(1, delta.top_degree)


def interior_dilation(P: LatticePolytope) -> int:
    """Smallest ``k > 0`` such that ``kP`` has a lattice point in its relative interior."""
    d = P.dim
    A, b = P.facets.arrays
    for k in range(1, d + 2):
        if d == 0:
            return 1
        for block in iter_lattice_points(P, k):
            slack = k * b[None, :] - block.astype(A.dtype) @ A.T
            if np.any(np.all(slack > 0, axis=1)):
                return k
    raise ConsistencyViolation("no interior lattice point in (d+1)P")
