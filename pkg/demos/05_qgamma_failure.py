"""A three-dimensional polytope that fails the QGamma condition.

At the vertex (-1, -1, -1) four facets meet, and their normals do not lie on
a common affine hyperplane nu = 1.  The disk-polytope computation refuses it.
"""

from toricdisks import HypothesisError, LatticePolytope, disk_polytope, is_qgamma, vertex_cones
from toricdisks.corpus import NON_QGAMMA

p = LatticePolytope(NON_QGAMMA)
ok, witnesses = is_qgamma(p)
print("QGamma:", ok)
for i, nu in witnesses.items():
    cone = vertex_cones(p)[i]
    print(f"fails at vertex {cone.vertex} with normals {cone.normals}")

try:
    disk_polytope(p)
except HypothesisError as exc:
    print("disk polytope:", exc)
