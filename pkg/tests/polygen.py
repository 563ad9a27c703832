"""Random lattice polytope generators for property tests."""

import random
from fractions import Fraction

from oracles import random_unimodular
from toricdisks.lattice import LatticePolytope, PolytopeError
from toricdisks.toric import is_simple


def random_polygon(rng: random.Random, box: int = 6) -> LatticePolytope:
    while True:
        pts = [(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(rng.randint(3, 10))]
        try:
            return LatticePolytope.hull(pts)
        except PolytopeError:
            continue


def random_simple_3d(rng: random.Random) -> LatticePolytope:
    """Tetrahedra, transformed boxes and prisms, or random hulls that happen to be simple."""
    while True:
        kind = rng.randrange(4)
        try:
            if kind == 0:
                p = LatticePolytope.hull([tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(4)])
            elif kind == 1:
                lo = [rng.randint(-3, 0) for _ in range(3)]
                hi = [rng.randint(1, 3) for _ in range(3)]
                corners = [(x, y, z) for x in (lo[0], hi[0]) for y in (lo[1], hi[1]) for z in (lo[2], hi[2])]
                p = LatticePolytope(tuple(corners)).transform(random_unimodular(rng, 3, bound=4, steps=4))
            elif kind == 2:
                base = random_polygon(rng, box=3)
                z0, z1 = rng.randint(-3, 0), rng.randint(1, 3)
                p = LatticePolytope(tuple((x, y, z) for x, y in base.vertices for z in (z0, z1)))
                p = p.transform(random_unimodular(rng, 3, bound=4, steps=4))
            else:
                p = LatticePolytope.hull([tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(rng.randint(5, 8))])
        except PolytopeError:
            continue
        if is_simple(p):
            return p


def random_facet_class(rng: random.Random, nfacets: int):
    return [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(nfacets)]
