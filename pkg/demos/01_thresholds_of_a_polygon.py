"""
A first look at dilation thresholds
===================================

Take a lattice polygon, compute its lattice points and delta-vector, then ask
from which dilation on each property holds.
"""

from dilatope import (LatticePolytope, count_lattice_points, delta_vector, is_idp,
                      lattice_points, mu_profile)

# A triangle with vertices (0,0), (3,1), (1,2). Its normalized area is 5.
T = LatticePolytope([(0, 0), (3, 1), (1, 2)])
print("dimension", T.dim, "normalized volume", T.normalized_volume)

# Lattice points are returned in chart coordinates; map them back for display.
pts = [T.chart.to_ambient(p) for p in lattice_points(T, 1)]
print("lattice points of T:", sorted(pts))

# The Ehrhart counts |kT| for small k and the delta-vector they determine.
print("counts:", [count_lattice_points(T, k) for k in range(5)])
print("delta-vector:", tuple(delta_vector(T)))

# Every lattice polygon has IDP, so each threshold collapses to 1.
print("IDP:", bool(is_idp(T)))
print("profile:", mu_profile(T).as_dict())

# A segment of length 4 sitting in 3-space lives in a one-dimensional chart.
S = LatticePolytope([(0, 0, 0), (4, 8, 12)])
print("segment dim", S.dim, "volume", S.normalized_volume, "profile", mu_profile(S).as_tuple())
