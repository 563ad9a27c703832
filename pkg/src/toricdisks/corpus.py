"""Bundled test polytopes and the reflexive polygon census."""

from __future__ import annotations

import itertools
import math

from .equivalence import LINEAR, normal_form
from .lattice import LatticePolytope

# Linear normal forms of the 16 reflexive polygons, as produced by
# reflexive_polygon_census(3).
REFLEXIVE_POLYGONS = (
    ((-3, -4), (1, 0), (1, 2)),
    ((-3, -2), (0, 1), (1, 0)),
    ((-2, -3), (1, 0), (1, 3)),
    ((-2, -1), (0, 1), (1, 0)),
    ((-1, -1), (0, 1), (1, 0)),
    ((-3, -2), (0, 1), (1, 0), (1, 1)),
    ((-3, -2), (0, 1), (1, 0), (2, 1)),
    ((-2, -1), (-1, -1), (0, 1), (1, 0)),
    ((-2, -1), (0, -1), (0, 1), (1, 0)),
    ((-1, -2), (-1, 0), (1, 0), (1, 2)),
    ((-1, -1), (-1, 0), (0, 1), (1, 0)),
    ((-1, 0), (0, -1), (0, 1), (1, 0)),
    ((-2, -1), (-1, -1), (0, 1), (1, 0), (1, 1)),
    ((-2, -1), (-1, -1), (0, 1), (1, 0), (2, 1)),
    ((-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0)),
    ((-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0), (1, 1)),
)

CP2 = ((1, 1), (1, -2), (-2, 1))
CP2_DUAL = ((1, 0), (0, 1), (-1, -1))
P114 = ((2, 2), (2, -1), (-10, 2))
P114_DUAL = ((1, 0), (0, 1), (-1, -4))
SQUARE = ((1, 1), (1, -1), (-1, 1), (-1, -1))
DIAMOND = ((1, 0), (-1, 0), (0, 1), (0, -1))
SKEW = ((2, 1), (1, -2), (-2, 1))

CUBE = tuple(itertools.product((-1, 1), repeat=3))
OCTAHEDRON = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))
CP3 = ((-1, -1, -1), (3, -1, -1), (-1, 3, -1), (-1, -1, 3))
SQUARE_PYRAMID = ((1, 1, -1), (1, -1, -1), (-1, 1, -1), (-1, -1, -1), (0, 0, 1))
CP2_X_CP1 = tuple((x, y, z) for x, y in CP2 for z in (-1, 1))
UNIT_CUBE = tuple(itertools.product((0, 1), repeat=3))

# The square pyramid with one base corner moved; the four facet normals at
# (-1, -1, -1) admit no covector taking the value 1 on all of them.
NON_QGAMMA = ((-1, -1, -1), (-1, 1, -1), (0, 0, 1), (0, 1, -2), (1, -1, -1))


def _named(items):
    return {name: LatticePolytope(verts, name=name) for name, verts in items}


def monotone_corpus() -> dict[str, LatticePolytope]:
    """Monotone polytopes in dimensions 2 and 3."""
    items = [(f"reflexive-{i:02d}", v) for i, v in enumerate(REFLEXIVE_POLYGONS)]
    items += [
        ("cp2", CP2),
        ("p114", P114),
        ("square", SQUARE),
        ("cube", CUBE),
        ("octahedron", OCTAHEDRON),
        ("cp3", CP3),
        ("square-pyramid", SQUARE_PYRAMID),
        ("cp2xcp1", CP2_X_CP1),
    ]
    return _named(items)


def corpus() -> dict[str, LatticePolytope]:
    """Monotone corpus plus non-monotone and non-QGamma samples."""
    out = monotone_corpus()
    out.update(_named([("skew", SKEW), ("unit-cube", UNIT_CUBE), ("non-qgamma", NON_QGAMMA)]))
    return out


# -- census ----------------------------------------------------------------------


def _hull2(pts):
    # counter-clockwise monotone chain, collinear points dropped
    pts = sorted(set(pts))

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def _origin_position(h) -> int:
    """1 if the origin is interior to the ccw polygon ``h``, 0 on the boundary, -1 outside."""
    pos = 1
    for a, b in zip(h, h[1:] + h[:1]):
        c = a[0] * b[1] - a[1] * b[0]
        if c < 0:
            return -1
        if c == 0:
            pos = 0
    return pos


def _interior_points(h) -> int:
    # Pick: 2A = 2I + B - 2
    twice_area = sum(a[0] * b[1] - a[1] * b[0] for a, b in zip(h, h[1:] + h[:1]))
    boundary = sum(math.gcd(a[0] - b[0], a[1] - b[1]) for a, b in zip(h, h[1:] + h[:1]))
    return (twice_area - boundary + 2) // 2


def _only_origin_inside(h) -> bool:
    if len(h) < 3:
        return False
    pos = _origin_position(h)
    return pos >= 0 and _interior_points(h) == (1 if pos == 1 else 0)


def reflexive_polygon_embeddings(box: int = 3) -> list[tuple]:
    """All lattice polygons with vertices in ``[-box, box]^2`` whose only interior lattice point is 0.

    Grows polygons one vertex at a time from triangles containing the origin;
    every intermediate polygon keeps the origin and no other interior point.
    """
    pts = [
        (x, y)
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if math.gcd(x, y) == 1  # vertices of such polygons are primitive
    ]
    states = set()
    for tri in itertools.combinations(pts, 3):
        h = _hull2(tri)
        if _only_origin_inside(h):
            states.add(h)
    frontier = set(states)
    while frontier:
        grown = set()
        for s in frontier:
            for p in pts:
                if p in s:
                    continue
                h = _hull2(s + (p,))
                if h not in states and h not in grown and _only_origin_inside(h):
                    grown.add(h)
        states |= grown
        frontier = grown
    return sorted(s for s in states if _origin_position(s) == 1)


def reflexive_polygon_census(box: int = 3) -> list[tuple]:
    """Distinct linear normal forms among :func:`reflexive_polygon_embeddings`."""
    keys = {normal_form(LatticePolytope(v), LINEAR).vertices for v in reflexive_polygon_embeddings(box)}
    return sorted(keys, key=lambda k: (len(k), k))
