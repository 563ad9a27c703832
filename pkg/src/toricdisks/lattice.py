"""Exact integer linear algebra and facet enumeration for lattice polytopes.

Everything here works on plain Python ``int`` and ``fractions.Fraction``;
there is no floating point.  Vectors are tuples, matrices are tuples of
row tuples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Vector = tuple
Matrix = tuple


class PolytopeError(ValueError):
    """Invalid or degenerate polytope input."""


# ---------------------------------------------------------------------------
# vectors and matrices


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive_part(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its coordinates.

    >>> primitive_part((-6, 9, 15))
    (-2, 3, 5)
    """
    g = math.gcd(*v) if len(v) else 0
    if g == 0:
        raise PolytopeError("no primitive direction: zero vector")
    return tuple(int(x) // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    return len(v) > 0 and math.gcd(*v) == 1


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*m))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def apply(m: Sequence[Sequence], v: Sequence) -> Vector:
    """Matrix times column vector."""
    return tuple(dot(row, v) for row in m)


def det(m: Sequence[Sequence]):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    a[i][j] = num // prev
                else:
                    a[i][j] = num / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m: Sequence[Sequence]) -> int:
    return len(row_echelon(m)[1])


def row_echelon(m: Sequence[Sequence]):
    """Reduced row echelon form over the rationals.

    Returns ``(rows, pivots)`` where ``rows`` is a list of Fraction rows.
    """
    a = [[Fraction(x) for x in row] for row in m]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def solve_rational(a: Sequence[Sequence], b: Sequence):
    """Solve ``a x = b`` exactly; return one solution or ``None``.

    Free variables (if any) are set to zero.
    """
    ncols = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    rows, pivots = row_echelon(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(rows, pivots):
        x[c] = row[ncols]
    return tuple(x)


def cross(vectors: Sequence[Sequence[int]]) -> Vector:
    """Generalized cross product of ``n - 1`` vectors in dimension ``n``.

    The result is orthogonal (under ``dot``) to every input and vanishes
    iff they are linearly dependent.
    """
    n = len(vectors) + 1
    out = []
    for i in range(n):
        minor = [tuple(v[j] for j in range(n) if j != i) for v in vectors]
        out.append((-1) ** i * det(minor))
    return tuple(out)


# ---------------------------------------------------------------------------
# Hermite and Smith normal forms


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Column-style Hermite normal form.

    Returns ``(H, U)`` with ``H = m @ U`` and ``U`` unimodular.  ``H`` is in
    lower echelon form: the pivot of each nonzero column is positive and sits
    strictly below the pivot of the previous column, columns after the last
    pivot are zero, and in every pivot row the entries left of the pivot lie
    in ``[0, pivot)``.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    h = [list(map(int, row)) for row in m]
    u = [list(row) for row in identity(cols)]

    def colop(j, k, a, b, c, d):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + d col_k)
        for mat in (h, u):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    j = 0
    for i in range(rows):
        if j == cols:
            break
        for k in range(j + 1, cols):
            x, y = h[i][j], h[i][k]
            if y == 0:
                continue
            g, s, t = xgcd(x, y)
            # unimodular: [[s, -y/g], [t, x/g]] has det (s x + t y) / g = 1
            colop(j, k, s, t, -y // g, x // g)
        p = h[i][j]
        if p == 0:
            continue
        if p < 0:
            for mat in (h, u):
                for row in mat:
                    row[j] = -row[j]
            p = -p
        for k in range(j):
            q = h[i][k] // p
            if q:
                colop(k, j, 1, -q, 0, 1)
        j += 1
    return tuple(map(tuple, h)), tuple(map(tuple, u))


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s a + t b = g = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def smith_invariants(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero invariant factors ``d1 | d2 | ...`` of an integer matrix."""
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    out = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remainder into the pivot position
            nz = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            nz += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            _, pi, pj = min(nz)
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            else:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
        out.append(abs(a[t][t]))
        t += 1
    return tuple(out)


def lattice_index(vectors: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by ``vectors`` in its saturation."""
    return math.prod(smith_invariants(vectors))


# ---------------------------------------------------------------------------
# polytopes


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    base = points[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in points[1:]]
    return rank(diffs) if diffs else 0


def _hull_facets(points: Sequence[Vector], n: int) -> list[tuple[Vector, int]]:
    """Facets of ``conv(points)`` as ``(primitive outward normal, level)``.

    Every affinely independent ``n``-subset spans a candidate hyperplane; it
    is kept when all points lie on one side of it.
    """
    facets = set()
    for subset in itertools.combinations(range(len(points)), n):
        base = points[subset[0]]
        diffs = [tuple(x - y for x, y in zip(points[i], base)) for i in subset[1:]]
        normal = cross(diffs)
        if not any(normal):
            continue
        normal = primitive_part(normal)
        level = dot(normal, base)
        values = [dot(normal, p) for p in points]
        if max(values) == level:
            facets.add((normal, level))
        elif min(values) == level:
            facets.add((tuple(-x for x in normal), -level))
    return sorted(facets)


def _check_points(points: Iterable[Sequence[int]]) -> list[Vector]:
    pts = []
    for p in points:
        row = tuple(p)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise PolytopeError(f"non-integer coordinate in {row!r}")
        pts.append(row)
    if not pts:
        raise PolytopeError("degenerate polytope: no points")
    n = len(pts[0])
    if n < 1 or any(len(p) != n for p in pts):
        raise PolytopeError("dimension mismatch among points")
    return pts


@dataclass(frozen=True)
class LatticePolytope:
    """A full-dimensional convex polytope with integer vertices.

    ``vertices`` must list exactly the extreme points; they are stored in
    lexicographic order.  Use :meth:`hull` to build a polytope from an
    arbitrary point cloud.
    """

    vertices: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        pts = _check_points(self.vertices)
        if len(set(pts)) != len(pts):
            raise PolytopeError("duplicate vertex")
        n = len(pts[0])
        if len(pts) < n + 1 or affine_rank(pts) < n:
            raise PolytopeError("degenerate polytope: not full-dimensional")
        pts.sort()
        object.__setattr__(self, "vertices", tuple(pts))
        redundant = [p for p in pts if not self._is_extreme(p)]
        if redundant:
            raise PolytopeError(f"redundant (non-extreme) point {redundant[0]}")

    @classmethod
    def hull(cls, points: Iterable[Sequence[int]], name: str | None = None) -> "LatticePolytope":
        pts = sorted(set(_check_points(points)))
        n = len(pts[0])
        if len(pts) < n + 1 or affine_rank(pts) < n:
            raise PolytopeError("degenerate polytope: not full-dimensional")
        facets = _hull_facets(pts, n)
        extreme = [p for p in pts if _tight_rank(p, facets) == n]
        return cls(tuple(extreme), name=name)

    def _is_extreme(self, p) -> bool:
        return _tight_rank(p, self.facets) == self.dim

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def facets(self) -> tuple[tuple[Vector, int], ...]:
        """Sorted ``(normal, level)`` pairs; see :func:`facet_enumeration`."""
        return tuple(_hull_facets(self.vertices, self.dim))

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the facets containing it."""
        return tuple(
            tuple(k for k, (v, h) in enumerate(self.facets) if dot(v, x) == h)
            for x in self.vertices
        )

    @cached_property
    def faces(self) -> dict[int, tuple[frozenset, ...]]:
        """Proper faces by dimension, each a frozenset of vertex indices."""
        facet_sets = {
            frozenset(i for i, x in enumerate(self.vertices) if dot(v, x) == h)
            for v, h in self.facets
        }
        found = set(facet_sets)
        frontier = set(facet_sets)
        while frontier:
            new = set()
            for a in frontier:
                for b in facet_sets:
                    c = a & b
                    if c and c not in found:
                        new.add(c)
            found |= new
            frontier = new
        out: dict[int, list] = {d: [] for d in range(self.dim)}
        for f in found:
            d = affine_rank([self.vertices[i] for i in f])
            out[d].append(f)
        return {d: tuple(sorted(fs, key=sorted)) for d, fs in out.items()}

    def face_normals(self, face: frozenset) -> tuple[int, ...]:
        """Indices of the facets containing every vertex of ``face``."""
        common = set(range(len(self.facets)))
        for i in face:
            common &= set(self.incidence[i])
        return tuple(sorted(common))

    def transform(self, m: Sequence[Sequence[int]], shift: Sequence[int] | None = None) -> "LatticePolytope":
        """Image under ``x -> m x + shift``; ``m`` must be unimodular."""
        shift = shift or (0,) * self.dim
        pts = [tuple(a + b for a, b in zip(apply(m, x), shift)) for x in self.vertices]
        return LatticePolytope(tuple(pts), name=self.name)

    def contains(self, x: Sequence) -> bool:
        return all(dot(v, x) <= h for v, h in self.facets)

    def interior_contains(self, x: Sequence) -> bool:
        return all(dot(v, x) < h for v, h in self.facets)

    @cached_property
    def normalized_volume(self) -> int:
        """``n!`` times the Euclidean volume."""
        return sum(abs(det(s)) for s in self._simplices())

    def _simplices(self):
        # pulling triangulation from the lowest vertex, recursing into faces
        def triangulate(face: frozenset, d: int):
            if d == 0:
                return [[next(iter(face))]]
            apex = min(face)
            simplices = []
            for sub in self.faces[d - 1]:
                if sub <= face and apex not in sub:
                    for s in triangulate(sub, d - 1):
                        simplices.append([apex] + s)
            return simplices

        apex = 0
        out = []
        for f in self.faces[self.dim - 1]:
            if apex in f:
                continue
            for s in triangulate(f, self.dim - 1):
                base = self.vertices[apex]
                out.append([tuple(x - y for x, y in zip(self.vertices[i], base)) for i in s])
        return out

    def lattice_points(self, dilation: int = 1) -> list[Vector]:
        """All integer points of ``dilation * self`` (box enumeration)."""
        k = dilation
        lo = [k * min(x[i] for x in self.vertices) for i in range(self.dim)]
        hi = [k * max(x[i] for x in self.vertices) for i in range(self.dim)]
        out = []
        for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            if all(dot(v, p) <= k * h for v, h in self.facets):
                out.append(p)
        return out

    def count_lattice_points(self, dilation: int = 1) -> int:
        if self.dim == 2:
            # Pick's theorem: A = I + B/2 - 1, so #(P ∩ Z²) = A + B/2 + 1
            k = dilation
            boundary = 0
            for i, j in self._polygon_edges():
                a, b = self.vertices[i], self.vertices[j]
                boundary += math.gcd(a[0] - b[0], a[1] - b[1])
            twice_area = k * k * self.normalized_volume
            return (twice_area + k * boundary) // 2 + 1
        return len(self.lattice_points(dilation))

    def _polygon_edges(self):
        return [tuple(sorted(f)) for f in self.faces[1]]


def _tight_rank(p, facets) -> int:
    tight = [v for v, h in facets if dot(v, p) == h]
    return rank(tight) if tight else 0


def facet_enumeration(p: LatticePolytope | Sequence[Sequence[int]]) -> list[tuple[Vector, int]]:
    """Facets as ``(primitive outward normal, level)``, sorted by normal.

    Accepts a :class:`LatticePolytope` or a raw point list.
    """
    if isinstance(p, LatticePolytope):
        return list(p.facets)
    pts = sorted(set(_check_points(p)))
    n = len(pts[0])
    if len(pts) < n + 1 or affine_rank(pts) < n:
        raise PolytopeError("degenerate polytope: not full-dimensional")
    return _hull_facets(pts, n)


def vertex_facet_incidence(p: LatticePolytope) -> dict[Vector, list[int]]:
    return {x: list(inc) for x, inc in zip(p.vertices, p.incidence)}


def contains_origin_interior(p: LatticePolytope) -> bool:
    return all(h > 0 for _, h in p.facets)
