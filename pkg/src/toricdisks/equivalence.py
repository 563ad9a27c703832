"""Normal forms and equivalence of lattice polytopes under GL(n, Z).

A polytope with vertex rows ``V`` is carried by ``g`` to rows ``V g^T``.
For every ordered, linearly independent ``n``-tuple of vertices we take the
column Hermite normal form ``B U = H`` of the tuple and record the sorted
rows of ``V U``.  Replacing ``V`` by ``V G`` replaces ``U`` by ``G^{-1} U``,
so the set of candidates is a GL(n, Z) invariant and its lexicographic
minimum is a complete key.  Affine mode repeats this with each vertex moved
to the origin in turn.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .lattice import (
    LatticePolytope,
    PolytopeError,
    det,
    hermite_normal_form,
    identity,
    matmul,
    transpose,
)

LINEAR = "linear"
AFFINE = "affine"


@dataclass(frozen=True)
class NormalFormKey:
    vertices: tuple
    mode: str

    def polytope(self) -> LatticePolytope:
        return LatticePolytope(self.vertices)


def _check_mode(mode: str):
    if mode not in (LINEAR, AFFINE):
        raise ValueError(f"unknown mode {mode!r}")


def _inverse_unimodular(u):
    # the HNF of a unimodular matrix is the identity, so u @ w = I
    h, w = hermite_normal_form(u)
    if h != identity(len(u)):
        raise ValueError("matrix is not unimodular")
    return w


def _best(rows: Sequence[tuple], n: int, shift: tuple):
    best = None
    for tup in itertools.permutations(range(len(rows)), n):
        basis = [rows[i] for i in tup]
        if det(basis) == 0:
            continue
        _, u = hermite_normal_form(basis)
        cand = tuple(sorted(tuple(x) for x in matmul(rows, u)))
        if best is None or cand < best[0]:
            best = (cand, u, shift)
    return best


def _canonical(p: LatticePolytope, mode: str):
    _check_mode(mode)
    n = p.dim
    verts = list(p.vertices)
    if mode == LINEAR:
        best = _best(verts, n, (0,) * n)
    else:
        best = None
        for origin in verts:
            moved = [tuple(a - b for a, b in zip(x, origin)) for x in verts]
            cand = _best(moved, n, origin)
            if best is None or cand[0] < best[0]:
                best = cand
    assert best is not None, "full-dimensional polytope has a vertex basis"
    return best


def normal_form(p: LatticePolytope, mode: str = LINEAR) -> NormalFormKey:
    return NormalFormKey(_canonical(p, mode)[0], mode)


def lattice_invariants(p: LatticePolytope) -> tuple:
    """Counts preserved by affine lattice automorphisms.

    ``(vertices, facets, normalized volume, #points, #points of 2p)``.
    """
    return (
        len(p.vertices),
        len(p.facets),
        p.normalized_volume,
        p.count_lattice_points(1),
        p.count_lattice_points(2),
    )


def are_equivalent(a: LatticePolytope, b: LatticePolytope, mode: str = LINEAR):
    """Decide equivalence; return ``(True, (g, t))`` with ``g a + t = b`` or ``(False, None)``.

    ``t`` is the zero vector in linear mode.
    """
    _check_mode(mode)
    if a.dim != b.dim:
        raise PolytopeError("dimension mismatch")
    cheap_a = (len(a.vertices), len(a.facets), a.normalized_volume)
    cheap_b = (len(b.vertices), len(b.facets), b.normalized_volume)
    if cheap_a != cheap_b:
        return False, None
    ka, ua, sa = _canonical(a, mode)
    kb, ub, sb = _canonical(b, mode)
    # point counts on the canonical representatives, whose coordinates are small
    if lattice_invariants(LatticePolytope(ka)) != lattice_invariants(LatticePolytope(kb)):
        return False, None
    if ka != kb:
        return False, None
    # (a - sa) ua = (b - sb) ub  =>  b = (a - sa) ua ub^-1 + sb
    right = matmul(ua, _inverse_unimodular(ub))
    g = transpose(right)
    shift = tuple(
        sb_i - sum(g[i][j] * sa[j] for j in range(a.dim)) for i, sb_i in enumerate(sb)
    )
    image = a.transform(g, shift)
    if image.vertices != b.vertices:
        raise AssertionError("equivalence witness does not map a onto b")
    return True, (g, shift)
