"""Toric degenerations of the projective plane indexed by Markov triples.

A Markov triple ``(a, b, c)`` gives the weighted projective plane with
weights ``(a^2, b^2, c^2)``; its monotone moment triangle has dual
conv(u0, u1, u2) where ``a^2 u0 + b^2 u1 + c^2 u2 = 0``.  Distinct triples
give lattice-inequivalent duals, hence distinct monotone tori.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .equivalence import LINEAR, NormalFormKey, are_equivalent, normal_form
from .lattice import LatticePolytope, PolytopeError, hermite_normal_form, is_primitive, solve_rational, xgcd
from .toric import VertexCone, dual_polytope, is_monotone, is_qgamma, is_simple, vertex_cones


class DistinctnessError(AssertionError):
    pass


@dataclass(frozen=True, order=True)
class MarkovTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if not (0 < a <= b <= c):
            raise ValueError(f"triple must satisfy 0 < a <= b <= c, got {(a, b, c)}")
        if a * a + b * b + c * c != 3 * a * b * c:
            raise ValueError(f"{(a, b, c)} is not a Markov triple")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    @property
    def weights(self) -> tuple[int, int, int]:
        return (self.a ** 2, self.b ** 2, self.c ** 2)

    def mutations(self) -> list[tuple[int, int, int]]:
        """The three Vieta moves, each replacing one entry ``x`` by ``3yz - x``."""
        a, b, c = self.a, self.b, self.c
        return [(3 * b * c - a, b, c), (a, 3 * a * c - b, c), (a, b, 3 * a * b - c)]


def markov_enumerate(max_c: int) -> list[MarkovTriple]:
    """All Markov triples with largest entry at most ``max_c``, in BFS order from (1, 1, 1)."""
    if max_c < 1:
        raise ValueError("max_c must be positive")
    root = MarkovTriple(1, 1, 1)
    seen = {root}
    out = [root]
    queue = deque([root])
    while queue:
        t = queue.popleft()
        for m in t.mutations():
            s = tuple(sorted(m))
            # leaving the bound never returns: the larger entry only grows further up the tree
            if s[0] < 1 or s[2] > max_c:
                continue
            child = MarkovTriple(*s)
            if child not in seen:
                seen.add(child)
                out.append(child)
                queue.append(child)
    return out


def fan_rays(weights, branch: int = 0) -> tuple[tuple[int, int], ...]:
    """Primitive ``u_i`` in Z^2 spanning Z^2 with ``sum w_i u_i = 0``.

    The rays are read off a unimodular matrix ``U`` with ``w U = (1, 0, 0)``;
    ``branch`` (0..5) selects which ordering of the weights is fed to the
    Hermite reduction, giving a different but equivalent answer.
    """
    order = list(itertools.permutations(range(3)))[branch]
    w = [weights[i] for i in order]
    h, u = hermite_normal_form([w])
    if h[0] != (1, 0, 0):
        raise PolytopeError("weights are not coprime")
    rays = [None] * 3
    for pos, i in enumerate(order):
        rays[i] = (u[pos][1], u[pos][2])
    assert all(sum(weights[i] * rays[i][k] for i in range(3)) == 0 for k in range(2))
    for r in rays:
        assert is_primitive(r), f"ray {r} is not primitive"
    return tuple(rays)


def monotone_triangle(rays) -> LatticePolytope:
    """The triangle ``{u_i(x) <= h}`` for the least ``h`` making its vertices integral."""
    corners = []
    for i, j in ((1, 2), (0, 2), (0, 1)):
        corners.append(solve_rational([rays[i], rays[j]], [1, 1]))
    h = math.lcm(*(Fraction(x).denominator for c in corners for x in c))
    pts = [tuple(int(h * x) for x in c) for c in corners]
    return LatticePolytope(tuple(pts))


def triangle_for_triple(t: MarkovTriple, branch: int = 0) -> LatticePolytope:
    """Monotone moment triangle of the weighted plane P(a^2, b^2, c^2), in linear normal form."""
    tri = monotone_triangle(fan_rays(t.weights, branch))
    return normal_form(tri, LINEAR).polytope()


def cyclic_quotient_type(u0, u1) -> tuple[int, int]:
    """``(r, q)`` with the 2D cone spanned by ``u0, u1`` of type ``1/r (1, q)``.

    The cone is moved to ``cone((0, 1), (r, -q))`` with ``0 <= q < r``.
    """
    if len(u0) != 2 or len(u1) != 2:
        raise PolytopeError("T-check only defined for surfaces")
    x, y = u0
    g = math.gcd(x, y)
    if g != 1:
        raise PolytopeError("cone rays must be primitive")
    # s x + t y = 1; rows (y, -x) and (s, t) send u0 to (0, 1)
    _, s, t = xgcd(x, y)
    p = y * u1[0] - x * u1[1]
    q0 = s * u1[0] + t * u1[1]
    r = abs(p)
    if r == 0:
        raise PolytopeError("cone is not full-dimensional")
    return r, (-q0) % r


def t_singularity_parameters(r: int, q: int):
    """First ``(d, n, a)`` with ``r = d n^2``, ``q = d n a - 1 (mod r)``, gcd(a, n) = 1, else ``None``."""
    for n in range(1, math.isqrt(r) + 1):
        if r % (n * n):
            continue
        d = r // (n * n)
        for a in range(1, n + 1):
            if math.gcd(a, n) == 1 and (d * n * a - 1 - q) % r == 0:
                return d, n, a
    return None


def is_t_singularity(r: int, q: int) -> bool:
    """Whether ``1/r (1, q)`` is a T-singularity ``1/(d n^2) (1, d n a - 1)``."""
    return t_singularity_parameters(r, q) is not None


def t_singularity_check(cone: VertexCone) -> bool:
    if len(cone.vertex) != 2:
        raise PolytopeError("T-check only defined for surfaces")
    if len(cone.normals) != 2:
        return False
    return is_t_singularity(*cyclic_quotient_type(*cone.normals))


@dataclass(frozen=True)
class DegenerationRecord:
    triple: MarkovTriple
    weights: tuple
    triangle: LatticePolytope
    monotone_level: int
    dual: LatticePolytope
    key: NormalFormKey
    vertex_types: tuple
    t_singular: tuple

    @property
    def smoothable(self) -> bool:
        return all(self.t_singular)


def degeneration_record(t: MarkovTriple) -> DegenerationRecord:
    tri = triangle_for_triple(t)
    mono, h = is_monotone(tri)
    assert mono, f"triangle for {t} is not monotone"
    assert is_simple(tri) and is_qgamma(tri)[0]
    dual = dual_polytope(tri)
    assert len(dual.vertices) == 3
    cones = vertex_cones(tri)
    types = tuple(cyclic_quotient_type(*c.normals) for c in cones)
    return DegenerationRecord(
        triple=t,
        weights=t.weights,
        triangle=tri,
        monotone_level=h,
        dual=dual,
        key=normal_form(dual, LINEAR),
        vertex_types=types,
        t_singular=tuple(t_singularity_check(c) for c in cones),
    )


@dataclass(frozen=True)
class ToriCertificate:
    records: tuple
    pairwise_distinct: bool

    @property
    def count(self) -> int:
        return len(self.records)


def certify_distinct_tori(max_c: int) -> ToriCertificate:
    """Build every record up to ``max_c`` and check the dual keys are pairwise distinct."""
    records = tuple(degeneration_record(t) for t in markov_enumerate(max_c))
    keys = [r.key for r in records]
    if len(set(keys)) != len(keys):
        raise DistinctnessError("distinctness violated: repeated dual normal form")
    for r, s in itertools.combinations(records, 2):
        if are_equivalent(r.dual, s.dual, LINEAR)[0]:
            raise DistinctnessError(f"distinctness violated: {r.triple} ~ {s.triple}")
    return ToriCertificate(records, True)


def dual_area(t: MarkovTriple) -> int:
    """Normalized area of the dual triangle: the sum of the weights."""
    return sum(t.weights)

