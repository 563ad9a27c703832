import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import markov_pair_scan, t_shape_brute_force
from toricdisks.corpus import CP2, CP2_DUAL, P114_DUAL
from toricdisks.equivalence import AFFINE, LINEAR, are_equivalent
from toricdisks.lattice import LatticePolytope, PolytopeError, lattice_index
from toricdisks.markov import (
    MarkovTriple,
    certify_distinct_tori,
    cyclic_quotient_type,
    degeneration_record,
    dual_area,
    fan_rays,
    is_t_singularity,
    markov_enumerate,
    t_singularity_check,
    t_singularity_parameters,
    triangle_for_triple,
)
from toricdisks.toric import VertexCone, dual_polytope, is_monotone, is_qgamma, is_simple, vertex_cones

TRIPLES = markov_enumerate(1000)


def test_enumerate_small():
    assert markov_enumerate(1) == [MarkovTriple(1, 1, 1)]
    assert [tuple(t) for t in markov_enumerate(5)] == [(1, 1, 1), (1, 1, 2), (1, 2, 5)]


def test_enumerate_bfs_order():
    assert [tuple(t) for t in markov_enumerate(100)] == [
        (1, 1, 1), (1, 1, 2), (1, 2, 5), (2, 5, 29), (1, 5, 13), (1, 13, 34), (1, 34, 89),
    ]


def test_enumerate_matches_scan():
    found = {tuple(t) for t in TRIPLES}
    assert len(found) == len(TRIPLES) == 13
    assert found == markov_pair_scan(1000)


def test_enumerate_rejects_nonpositive():
    with pytest.raises(ValueError):
        markov_enumerate(0)


def test_triple_validation():
    with pytest.raises(ValueError):
        MarkovTriple(1, 2, 3)
    with pytest.raises(ValueError):
        MarkovTriple(2, 1, 1)


def test_mutations_stay_markov():
    for t in TRIPLES:
        for m in t.mutations():
            a, b, c = m
            assert a * a + b * b + c * c == 3 * a * b * c
            MarkovTriple(*sorted(m))


def test_weights_relation():
    for t in TRIPLES:
        for branch in range(6):
            rays = fan_rays(t.weights, branch)
            assert all(math.gcd(*r) == 1 for r in rays)
            for k in range(2):
                assert sum(w * r[k] for w, r in zip(t.weights, rays)) == 0
            assert lattice_index(rays) == 1


def test_triangle_examples():
    cp2 = triangle_for_triple(MarkovTriple(1, 1, 1))
    assert are_equivalent(cp2, LatticePolytope(CP2))[0]
    t114 = triangle_for_triple(MarkovTriple(1, 1, 2))
    assert t114.vertices == ((-10, -12), (2, 0), (2, 3))
    assert is_monotone(t114) == (True, 2)
    assert are_equivalent(dual_polytope(t114), LatticePolytope(P114_DUAL))[0]
    t125 = triangle_for_triple(MarkovTriple(1, 2, 5))
    d = dual_polytope(t125)
    assert not are_equivalent(d, LatticePolytope(CP2_DUAL))[0]
    assert not are_equivalent(d, LatticePolytope(P114_DUAL))[0]


def test_triangles_are_monotone_simple_qgamma():
    for t in TRIPLES:
        tri = triangle_for_triple(t)
        assert is_simple(tri) and is_monotone(tri)[0] and is_qgamma(tri)[0]
        assert len(dual_polytope(tri).vertices) == 3


def test_least_level():
    # no smaller positive level keeps all vertices integral
    for t in TRIPLES[:8]:
        tri = triangle_for_triple(t)
        h = is_monotone(tri)[1]
        for k in range(1, h):
            assert any(x * k % h for v in tri.vertices for x in v)


def test_branch_independence():
    for t in TRIPLES:
        base = triangle_for_triple(t, 0)
        for branch in range(1, 6):
            assert are_equivalent(base, triangle_for_triple(t, branch), AFFINE)[0], (t, branch)


def test_t_check_examples():
    smooth = vertex_cones(LatticePolytope(CP2))[0]
    assert t_singularity_check(smooth)
    assert t_singularity_parameters(1, 0) == (1, 1, 1)
    assert t_singularity_parameters(4, 1) == (1, 2, 1)
    assert is_t_singularity(4, 1)
    assert not is_t_singularity(3, 1)
    assert not t_shape_brute_force(3, 1)
    tri = LatticePolytope(((2, 2), (2, -1), (-10, 2)))
    cone = next(c for c in vertex_cones(tri) if c.order == 4)
    assert cyclic_quotient_type(*cone.normals) == (4, 1)
    assert t_singularity_check(cone)
    third = VertexCone(vertex=(0, 0), normals=((0, 1), (3, -1)), order=3)
    assert cyclic_quotient_type(*third.normals) == (3, 1)
    assert not t_singularity_check(third)


def test_t_check_rejects_non_surface():
    with pytest.raises(PolytopeError, match="T-check only defined for surfaces"):
        t_singularity_check(VertexCone(vertex=(0, 0, 0), normals=((1, 0, 0), (0, 1, 0), (0, 0, 1)), order=1))


@given(st.integers(1, 60), st.data())
def test_t_shape_matches_brute_force(r, data):
    q = data.draw(st.integers(0, r - 1))
    assert is_t_singularity(r, q) is t_shape_brute_force(r, q)


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40))
def test_cyclic_type_normal_presentation(x, y, z, w):
    if math.gcd(x, y) != 1 or x * w - y * z == 0:
        return
    r, q = cyclic_quotient_type((x, y), (z, w))
    assert r == abs(x * w - y * z)
    assert 0 <= q < r
    # u1 + q u0 is divisible by r, the defining property of type 1/r(1, q)
    assert (z + q * x) % r == 0 and (w + q * y) % r == 0


def test_records_all_t_singular():
    for t in TRIPLES:
        rec = degeneration_record(t)
        assert rec.smoothable
        assert rec.monotone_level > 0
        for (r, q) in rec.vertex_types:
            assert is_t_singularity(r, q)


def test_vertex_types_of_114():
    rec = degeneration_record(MarkovTriple(1, 1, 2))
    assert sorted(rec.vertex_types) == [(1, 0), (1, 0), (4, 1)]


def test_dual_area():
    for t in TRIPLES:
        assert dual_polytope(triangle_for_triple(t)).normalized_volume == dual_area(t)


def test_dual_area_grows_along_branches():
    known = set(TRIPLES)
    for t in TRIPLES:
        for m in t.mutations():
            child = tuple(sorted(m))
            if child[2] > t.c and MarkovTriple(*child) in known:
                assert dual_area(MarkovTriple(*child)) > dual_area(t)


@pytest.mark.parametrize("max_c, count", [(1, 1), (5, 3), (100, 7)])
def test_certify(max_c, count):
    cert = certify_distinct_tori(max_c)
    assert cert.pairwise_distinct and cert.count == count
    assert count == len({t for t in markov_pair_scan(max_c)})
    keys = [r.key for r in cert.records]
    assert len(set(keys)) == count
    for i, r in enumerate(cert.records):
        for s in cert.records[i + 1:]:
            assert not are_equivalent(r.dual, s.dual, LINEAR)[0]
