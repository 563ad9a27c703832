"""CP(1,1,4): a monotone triangle with one orbifold vertex.

The triangle has facet level 2.  One vertex cone has index 4, of type
1/4(1,1), which is a T-singularity and so admits a smoothing.  Its dual is
not lattice equivalent to the dual of CP^2, so the resulting monotone torus
in the smoothing differs from the Clifford torus.
"""

from toricdisks import LatticePolytope, are_equivalent, dual_polytope, is_monotone, vertex_cones
from toricdisks.markov import cyclic_quotient_type, t_singularity_parameters

tri = LatticePolytope(((2, 2), (2, -1), (-10, 2)))
print("monotone, level:", is_monotone(tri))

for cone in vertex_cones(tri):
    r, q = cyclic_quotient_type(*cone.normals)
    print(f"vertex {cone.vertex}: order {cone.order}, type 1/{r}(1,{q}),"
          f" T-parameters (d, n, a) = {t_singularity_parameters(r, q)}")

dual = dual_polytope(tri)
print("dual:", dual.vertices)
ok, witness = are_equivalent(dual, LatticePolytope(((1, 0), (0, 1), (-1, -4))))
print("equivalent to conv{(1,0),(0,1),(-1,-4)}:", ok, "via", witness[0])
print("equivalent to the CP^2 dual:", are_equivalent(dual, LatticePolytope(((1, 0), (0, 1), (-1, -1))))[0])
