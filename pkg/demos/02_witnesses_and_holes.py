"""
Witnesses and holes in a simplex family
=======================================

For simplices the library works in the group of the fundamental
parallelepiped. This demo walks through a gap simplex, where the IDP
threshold sits strictly between the Hilbert-basis and hole thresholds.
"""

from dilatope import box_points, gap_simplex, hilbert_basis_graded, is_idp, mu_profile

P = gap_simplex(4)
print("dimension", P.dim, "normalized volume", P.normalized_volume)

# Hilbert basis elements of the cone over P, grouped by degree.
hb = hilbert_basis_graded(P)
print("Hilbert basis top degree:", hb.max_degree)

# Holes: lattice points of the cone over P that are not sums of degree-one
# points. Each comes with an empty simplex as witness.
holes = box_points(P)
for h in holes:
    print(f"hole {h.point.x} at degree {h.point.n}")

# Dilates below the IDP threshold report a concrete undecomposable point.
for k in range(1, 5):
    res = is_idp(P, k)
    if res:
        print(f"{k}P has IDP")
    else:
        print(f"{k}P fails IDP: {res.witness} in {res.n}({k}P) is not a sum of {res.n} points")

p = mu_profile(P)
print("profile:", p.as_dict())
