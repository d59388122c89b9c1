"""Dilation invariants of lattice polytopes.

Exact integer arithmetic throughout; numpy is used for vectorized lattice-point
work with an object-dtype fallback when 64-bit bounds would overflow.
"""

from .budget import Budget, limits
from .ehrhart import DeltaVector, delta_vector, interior_dilation, mu_ehr
from .enumeration import (Parallelepiped, PointSet, count_lattice_points, empty_simplices,
                          fundamental_parallelepiped, is_empty_simplex, iter_lattice_points,
                          lattice_points, parallelepiped_points)
from .errors import (BadParameters, BudgetExceeded, ConsistencyViolation, DilatopeError,
                     DimensionMismatch, Disconnected, EmptyInput, NotASimplex, NotAVertex,
                     NotPointed, SearchFailed)
from .families import (berkeley, boston, gap_simplex, minkowski_pair, one_hole_simplex,
                       two_block_simplex)
from .graphs import (GraphProfile, SimpleGraph, chordless_cycles, edge_polytope,
                     exceptional_pairs, graph_profile, minimal_odd_cycles, mu_hole_graph, odd_cycles,
                     mu_va_hilb_graph, odd_cycle_condition)
from .polytope import LatticePolytope
from .profile import (IDPCheck, MuProfile, check_theorem_restrictions, is_idp, is_very_ample,
                      mu_idp, mu_midp, mu_profile, mu_va, peel_to_top_dilate)
from .semigroup import (HilbertBasis, HoleSet, box_points, hilbert_basis_graded,
                        hilbert_basis_pointed, is_decomposable, is_sum_in_dilate, mu_hilb,
                        mu_hole)

__version__ = "0.1.0"
