"""Toric criteria and membrane invariants of a lattice polytope.

The polytope lives in ``N_R``; facet normals live in the dual lattice ``M``.
A membrane class is either a rational vector of facet coefficients (one
entry per facet, in the polytope's facet order) or a boundary class in
``M = H_1(L)`` of the central fiber torus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .lattice import (
    LatticePolytope,
    PolytopeError,
    contains_origin_interior,
    dot,
    lattice_index,
    rank,
    solve_rational,
)


class HypothesisError(Exception):
    """A criterion required by the requested computation does not hold."""

    def __init__(self, hypothesis: str, reason: str):
        super().__init__(f"hypothesis failed: {hypothesis} ({reason})")
        self.hypothesis = hypothesis
        self.reason = reason


MONOTONE_REASON = "all facet levels h must be equal and positive"
QGAMMA_REASON = "facet normals at every vertex must lie on an affine hyperplane nu = 1"


@dataclass(frozen=True)
class FacetData:
    normal: tuple
    level: int


@dataclass(frozen=True)
class VertexCone:
    """A vertex with the normals of its adjacent facets.

    ``order`` is the index of the lattice spanned by the normals inside its
    saturation; for a simple vertex it equals ``|det|`` of the normals.
    """

    vertex: tuple
    normals: tuple
    order: int

    @property
    def is_simple(self) -> bool:
        return len(self.normals) == len(self.vertex)


@dataclass(frozen=True)
class SingularFace:
    vertices: tuple
    dim: int
    normals: tuple
    order: int
    simple: bool


def facet_data(p: LatticePolytope) -> list[FacetData]:
    return [FacetData(v, h) for v, h in p.facets]


def vertex_cones(p: LatticePolytope) -> list[VertexCone]:
    out = []
    for x, inc in zip(p.vertices, p.incidence):
        normals = tuple(p.facets[k][0] for k in inc)
        out.append(VertexCone(x, normals, lattice_index(normals)))
    return out


def is_simple(p: LatticePolytope) -> bool:
    return all(len(inc) == p.dim for inc in p.incidence)


def is_monotone(p: LatticePolytope) -> tuple[bool, int | None]:
    """Return ``(True, h)`` when every facet sits at the same level ``h > 0``."""
    levels = {h for _, h in p.facets}
    if len(levels) == 1 and contains_origin_interior(p):
        return True, levels.pop()
    return False, None


def qgamma_witness(normals: Sequence[Sequence[int]]):
    """Rational covector ``nu`` with ``nu(f) = 1`` for every normal, or ``None``."""
    return solve_rational(normals, [1] * len(normals))


def is_qgamma(p: LatticePolytope) -> tuple[bool, dict]:
    """Check the per-vertex hyperplane criterion.

    On success the second item maps vertex index to its witness covector;
    on failure it maps the first offending vertex index to ``None``.
    """
    witnesses = {}
    for i, cone in enumerate(vertex_cones(p)):
        nu = qgamma_witness(cone.normals)
        if nu is None:
            return False, {i: None}
        witnesses[i] = nu
    return True, witnesses


def singular_faces(p: LatticePolytope) -> list[SingularFace]:
    """Proper faces whose adjacent normals are not a basis of the lattice they span."""
    out = []
    for d in range(p.dim - 1):
        for face in p.faces[d]:
            idx = p.face_normals(face)
            normals = tuple(p.facets[k][0] for k in idx)
            independent = rank(normals) == len(normals)
            order = lattice_index(normals)
            if not independent or order != 1:
                verts = tuple(p.vertices[i] for i in sorted(face))
                out.append(SingularFace(verts, d, normals, order, independent))
    return out


def h2_rank(p: LatticePolytope) -> int:
    """``dim ker`` of the map sending each facet to its normal."""
    normals = [v for v, _ in p.facets]
    return len(normals) - rank(normals)


def _require_qgamma(p: LatticePolytope) -> dict:
    ok, witnesses = is_qgamma(p)
    if not ok:
        raise HypothesisError("QGamma", "Maslov index not defined on H2(X, L): " + QGAMMA_REASON)
    return witnesses


def _check_class(p: LatticePolytope, coefficients: Sequence) -> list[Fraction]:
    if len(coefficients) != len(p.facets):
        raise PolytopeError(
            f"class has {len(coefficients)} coefficients, polytope has {len(p.facets)} facets"
        )
    return [Fraction(c) for c in coefficients]


def boundary_of_class(p: LatticePolytope, coefficients: Sequence) -> tuple:
    """Image of a facet-form class in ``M``: the sum of coefficient times normal."""
    coeffs = _check_class(p, coefficients)
    return tuple(
        sum(c * v[i] for c, (v, _) in zip(coeffs, p.facets)) for i in range(p.dim)
    )


def maslov_of_facet_class(p: LatticePolytope, coefficients: Sequence) -> Fraction:
    """Every facet disk has Maslov index 2, so the index is twice the coefficient sum."""
    _require_qgamma(p)
    return 2 * sum(_check_class(p, coefficients))


def area_of_facet_class(p: LatticePolytope, coefficients: Sequence) -> Fraction:
    coeffs = _check_class(p, coefficients)
    return sum(c * h for c, (_, h) in zip(coeffs, p.facets))


def cone_coefficients(normals: Sequence[Sequence[int]], alpha: Sequence[int]):
    """Nonnegative rational coefficients writing ``alpha`` in the cone of ``normals``.

    Searches simplicial subcones (Caratheodory); returns ``(indices, coeffs)``
    or ``None``.
    """
    n = len(alpha)
    for subset in itertools.combinations(range(len(normals)), n):
        cols = [normals[k] for k in subset]
        if rank(cols) < n:
            continue
        a = [[cols[j][i] for j in range(n)] for i in range(n)]
        c = solve_rational(a, alpha)
        if c is not None and all(x >= 0 for x in c):
            return subset, c
    return None


def maslov_of_boundary(p: LatticePolytope, alpha: Sequence[int]) -> tuple[Fraction, int]:
    """Maslov index of a membrane with boundary class ``alpha``.

    Uses the witness covector of a vertex whose normal cone contains
    ``alpha``; returns ``(2 nu(alpha), vertex index)`` for the lowest such
    vertex.  Agreement across every containing cone is asserted.
    """
    alpha = tuple(alpha)
    if len(alpha) != p.dim:
        raise PolytopeError("boundary class has the wrong dimension")
    if not any(alpha):
        raise PolytopeError("boundary class must be nonzero")
    witnesses = _require_qgamma(p)
    values = []
    for i, cone in enumerate(vertex_cones(p)):
        if cone_coefficients(cone.normals, alpha) is not None:
            values.append((2 * dot(witnesses[i], alpha), i))
    if not values:
        raise AssertionError(f"class {alpha} lies in no vertex cone")
    first = values[0][0]
    assert all(v == first for v, _ in values), f"cone witnesses disagree on {alpha}"
    return values[0]


def dual_polytope(p: LatticePolytope) -> LatticePolytope:
    """Convex hull of the primitive facet normals."""
    if not contains_origin_interior(p):
        raise HypothesisError("origin interior", "all facet levels h must be positive")
    return LatticePolytope.hull([v for v, _ in p.facets])


@dataclass(frozen=True)
class DiskClass:
    boundary: tuple
    maslov: Fraction
    vertex: int
    count_mod2: int = 1


@dataclass(frozen=True)
class DiskPolytope:
    """Holomorphic-disk polytope of the central monotone torus.

    ``classes`` annotates each vertex of the polytope as a Maslov-2 boundary
    class with an odd disk count.
    """

    polytope: LatticePolytope
    classes: tuple
    simple: bool
    qgamma: bool
    monotone_level: int


def _require_surface_or_higher(p: LatticePolytope):
    if p.dim < 2:
        raise PolytopeError("degenerate polytope: toric analysis needs dimension >= 2")


def disk_polytope(p: LatticePolytope) -> DiskPolytope:
    _require_surface_or_higher(p)
    mono, h = is_monotone(p)
    qg, _ = is_qgamma(p)
    failed = [(name, why) for name, ok, why in (
        ("monotone", mono, MONOTONE_REASON),
        ("QGamma", qg, QGAMMA_REASON),
    ) if not ok]
    if failed:
        raise HypothesisError(", ".join(n for n, _ in failed), "; ".join(w for _, w in failed))
    dual = dual_polytope(p)
    classes = []
    for alpha in dual.vertices:
        m, vertex = maslov_of_boundary(p, alpha)
        assert m == 2, f"vertex {alpha} of the dual has Maslov index {m}"
        classes.append(DiskClass(alpha, m, vertex))
    return DiskPolytope(dual, tuple(classes), is_simple(p), qg, h)


@dataclass(frozen=True)
class ToricReport:
    polytope: LatticePolytope
    is_simple: bool
    is_monotone: bool
    monotone_level: int | None
    is_qgamma: bool
    qgamma_witnesses: dict = field(repr=False)
    h2_rank: int
    singular_faces: tuple
    origin_interior: bool
    dual: LatticePolytope | None
    maslov_table: tuple = field(repr=False)


def analyze(p: LatticePolytope) -> ToricReport:
    _require_surface_or_higher(p)
    simple = is_simple(p)
    mono, h = is_monotone(p)
    qg, witnesses = is_qgamma(p)
    assert qg or not simple, "simple polytope failed the QGamma criterion"
    interior = contains_origin_interior(p)
    dual = dual_polytope(p) if interior else None
    table = ()
    if qg and interior:
        table = tuple((v, maslov_of_boundary(p, v)[0]) for v, _ in p.facets)
    return ToricReport(
        polytope=p,
        is_simple=simple,
        is_monotone=mono,
        monotone_level=h,
        is_qgamma=qg,
        qgamma_witnesses=witnesses,
        h2_rank=h2_rank(p),
        singular_faces=tuple(singular_faces(p)),
        origin_interior=interior,
        dual=dual,
        maslov_table=table,
    )
