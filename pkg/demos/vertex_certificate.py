"""
Weighted rank as a vertex of the polymatroid cone
=================================================

Fix the singleton values h({a}) = w(a) and intersect the polymatroid cone
with that plane. The weighted rank function lands on a vertex of the
resulting polytope. We check this with exact arithmetic: the constraints
that are tight at the point must have full rank.
"""

from fractions import Fraction

from wrank import UniformMatroid, gamma_polytope, is_extreme_point, phi_vector
from wrank.matroid import triangle
from wrank.setfunc import check_submodular

w = (1, 2, 3)
m = triangle()
v = phi_vector(m, w)
print("phi on the triangle:", {bin(s): str(x) for s, x in v.items()})
print("submodular:", check_submodular(v)[0])

desc = gamma_polytope(m.n, w)
print(f"{len(desc.constraints)} constraints:",
      {k: desc.count(k) for k in ("nonneg", "monotone", "submodular", "singleton")})

cert = is_extreme_point(desc, v)
print(f"tight constraints {len(cert.tight)}, rank {cert.rank} of {2 ** m.n - 1} -> vertex: {cert.is_vertex}")

# Blend two different matroids with the same singleton weights. The result is
# still feasible but lies inside an edge of the polytope.
a = phi_vector(UniformMatroid(1, 2), (1, 1))
b = phi_vector(UniformMatroid(2, 2), (1, 1))
mid = a.combine(b, Fraction(1, 2))
cert = is_extreme_point(gamma_polytope(2, (1, 1)), mid)
print(f"midpoint {[str(x) for x in mid.values]}: rank {cert.rank} of 3 -> vertex: {cert.is_vertex}")
