"""Census of reflexive polygons by exhaustive search.

Every lattice polygon in [-3, 3]^2 whose only interior lattice point is the
origin is grown vertex by vertex, then deduplicated by normal form.  Exactly
16 classes remain, and each one equals its own double dual.
"""

from toricdisks import LatticePolytope, are_equivalent, dual_polytope
from toricdisks.corpus import reflexive_polygon_census, reflexive_polygon_embeddings

embeddings = reflexive_polygon_embeddings(box=3)
classes = reflexive_polygon_census(box=3)
print(f"{len(embeddings)} embeddings, {len(classes)} classes")
for verts in classes:
    p = LatticePolytope(verts)
    d = dual_polytope(p)
    self_dual = are_equivalent(p, d)[0]
    back = are_equivalent(dual_polytope(d), p)[0]
    print(f"  area {p.normalized_volume}: {verts}  self-dual {self_dual}, double dual ok {back}")
