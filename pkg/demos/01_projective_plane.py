"""The projective plane: facet data, Maslov indices and the disk polytope.

The moment triangle of CP^2 with all facet levels equal to 1 is the
smallest monotone example.  Its central fiber is the Clifford torus, and
the disk polytope should be the triangle spanned by the three facet normals.
"""

from toricdisks import LatticePolytope, analyze, disk_polytope, maslov_of_boundary

tri = LatticePolytope(((1, 1), (1, -2), (-2, 1)), name="cp2")
report = analyze(tri)

print("vertices:", tri.vertices)
for normal, level in tri.facets:
    print(f"  facet normal {normal}, level {level}")
print("simple:", report.is_simple, "| monotone:", report.is_monotone, "h =", report.monotone_level)
print("QGamma:", report.is_qgamma, "| rank of H2:", report.h2_rank)

# Maslov index of a boundary class is read off any vertex cone containing it.
for alpha in [(1, 0), (0, 1), (-1, -1), (1, 1), (2, -1)]:
    mu, vertex = maslov_of_boundary(tri, alpha)
    print(f"  Maslov{alpha} = {mu}  (cone at vertex {tri.vertices[vertex]})")

disks = disk_polytope(tri)
print("disk polytope:", disks.polytope.vertices)
for c in disks.classes:
    print(f"  class {c.boundary}: Maslov {c.maslov}, #disks = {c.count_mod2} mod 2")
