"""Structured (JSON) and text reports for each command.

Rationals are written as strings ``"p/q"`` (or ``"p"``) so that parsing a
report with :func:`decode_rational` recovers the exact values.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import toric
from .equivalence import AFFINE, LINEAR, are_equivalent, normal_form
from .lattice import LatticePolytope, PolytopeError
from .markov import (
    ToriCertificate,
    cyclic_quotient_type,
    is_t_singularity,
    markov_enumerate,
    t_singularity_parameters,
)

# Which criterion backs each verdict.
BASIS = {
    "simple": "every vertex lies on exactly n facets",
    "monotone": "central torus is monotone iff all facet levels h are equal (and positive)",
    "qgamma": "QGamma iff the facet normals at each vertex lie on an affine hyperplane nu = 1",
    "simple_implies_qgamma": "n independent normals always admit nu",
    "h2_rank": "H2 of the toric space is the kernel of facet -> normal",
    "singular_faces": "a face is singular iff its adjacent normals are not a lattice basis",
    "maslov": "facet disks have Maslov index 2; boundary classes use 2 nu on a containing vertex cone",
    "area": "a facet disk has area equal to its facet level h",
    "disks": "disk polytope of the central monotone torus equals conv(facet normals)",
    "equivalence": "symplectomorphic tori have disk polytopes equal up to GL(n, Z)",
    "tori": "distinct QGamma toric degenerations give distinct monotone tori",
}


def rational(x) -> str:
    return str(Fraction(x))


def decode_rational(s: str) -> Fraction:
    return Fraction(s)


def _poly(p: LatticePolytope) -> dict:
    doc = {"dim": p.dim, "vertices": [list(v) for v in p.vertices]}
    if p.name is not None:
        doc["name"] = p.name
    return doc


def _facets(p: LatticePolytope) -> list:
    return [{"normal": list(v), "level": h} for v, h in p.facets]


def analyze_report(p: LatticePolytope) -> dict:
    r = toric.analyze(p)
    doc = {
        "command": "analyze",
        "input": _poly(p),
        "facets": _facets(p),
        "simple": r.is_simple,
        "monotone": r.is_monotone,
        "monotone_level": r.monotone_level,
        "qgamma": r.is_qgamma,
        "qgamma_witnesses": {
            str(i): None if nu is None else [rational(x) for x in nu]
            for i, nu in sorted(r.qgamma_witnesses.items())
        },
        "h2_rank": r.h2_rank,
        "origin_interior": r.origin_interior,
        "singular_faces": [
            {
                "dim": f.dim,
                "vertices": [list(v) for v in f.vertices],
                "normals": [list(v) for v in f.normals],
                "order": f.order,
                "simple": f.simple,
            }
            for f in r.singular_faces
        ],
        "dual": None if r.dual is None else _poly(r.dual),
        "maslov_table": [{"normal": list(v), "maslov": rational(m)} for v, m in r.maslov_table],
        "keys": {"affine": [list(v) for v in normal_form(p, AFFINE).vertices]},
        "basis": {k: BASIS[k] for k in ("simple", "monotone", "qgamma", "h2_rank", "singular_faces", "maslov")},
    }
    if r.dual is not None:
        doc["keys"]["dual_linear"] = [list(v) for v in normal_form(r.dual, LINEAR).vertices]
    return doc


def dual_report(p: LatticePolytope) -> dict:
    d = toric.dual_polytope(p)
    return {"command": "dual", "input": _poly(p), "dual": _poly(d), "facets": _facets(p)}


def disks_report(p: LatticePolytope) -> dict:
    dp = toric.disk_polytope(p)
    return {
        "command": "disks",
        "input": _poly(p),
        "disk_polytope": _poly(dp.polytope),
        "monotone_level": dp.monotone_level,
        "hypotheses": {"monotone": True, "qgamma": dp.qgamma, "simple": dp.simple},
        "classes": [
            {
                "boundary": list(c.boundary),
                "maslov": rational(c.maslov),
                "vertex_cone": c.vertex,
                "disks_mod2": c.count_mod2,
            }
            for c in dp.classes
        ],
        "basis": {k: BASIS[k] for k in ("disks", "maslov")},
    }


def maslov_report(p: LatticePolytope, boundary=None, coefficients=None) -> dict:
    doc = {"command": "maslov", "input": _poly(p), "facets": _facets(p)}
    if boundary is not None:
        m, vertex = toric.maslov_of_boundary(p, boundary)
        doc.update(boundary=list(boundary), maslov=rational(m), vertex_cone=vertex)
    else:
        m = toric.maslov_of_facet_class(p, coefficients)
        area = toric.area_of_facet_class(p, coefficients)
        doc.update(
            coefficients=[rational(c) for c in coefficients],
            boundary=[rational(x) for x in toric.boundary_of_class(p, coefficients)],
            maslov=rational(m),
            area=rational(area),
        )
    doc["basis"] = {k: BASIS[k] for k in ("maslov", "area")}
    return doc


def equiv_report(a: LatticePolytope, b: LatticePolytope, affine: bool = False) -> dict:
    mode = AFFINE if affine else LINEAR
    ok, witness = are_equivalent(a, b, mode)
    doc = {
        "command": "equiv",
        "mode": mode,
        "a": _poly(a),
        "b": _poly(b),
        "equivalent": ok,
        "keys": {
            "a": [list(v) for v in normal_form(a, mode).vertices],
            "b": [list(v) for v in normal_form(b, mode).vertices],
        },
        "witness": None,
        "basis": {"equivalence": BASIS["equivalence"]},
    }
    if ok:
        g, t = witness
        doc["witness"] = {"matrix": [list(r) for r in g], "translation": list(t)}
    return doc


def markov_report(max_c: int) -> dict:
    triples = markov_enumerate(max_c)
    return {"command": "markov", "max": max_c, "count": len(triples), "triples": [list(t) for t in triples]}


def tori_report(cert: ToriCertificate, max_c: int) -> dict:
    return {
        "command": "certify-tori",
        "max": max_c,
        "count": cert.count,
        "certificate": "pairwise distinct" if cert.pairwise_distinct else "violated",
        "records": [
            {
                "triple": list(r.triple),
                "weights": list(r.weights),
                "triangle": [list(v) for v in r.triangle.vertices],
                "monotone_level": r.monotone_level,
                "dual": [list(v) for v in r.dual.vertices],
                "dual_key": [list(v) for v in r.key.vertices],
                "vertex_types": [list(t) for t in r.vertex_types],
                "t_singular": list(r.t_singular),
                "smoothable": r.smoothable,
            }
            for r in cert.records
        ],
        "basis": {"tori": BASIS["tori"], "equivalence": BASIS["equivalence"]},
    }


def tcheck_report(p: LatticePolytope, vertex: int) -> dict:
    if p.dim != 2:
        raise PolytopeError("T-check only defined for surfaces")
    cones = toric.vertex_cones(p)
    if not 0 <= vertex < len(cones):
        raise IndexError(f"vertex index {vertex} out of range 0..{len(cones) - 1}")
    cone = cones[vertex]
    doc = {"command": "t-check", "input": _poly(p), "vertex": list(cone.vertex),
           "normals": [list(v) for v in cone.normals]}
    r, q = cyclic_quotient_type(*cone.normals)
    params = t_singularity_parameters(r, q)
    doc.update(
        order=r,
        q=q,
        t_singularity=is_t_singularity(r, q),
        parameters=None if params is None else dict(zip(("d", "n", "a"), params)),
    )
    return doc


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- text rendering ------------------------------------------------------------


def _pt(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def to_text(doc: dict) -> str:
    cmd = doc["command"]
    lines = []
    if "input" in doc:
        name = doc["input"].get("name")
        lines.append(f"polytope{' ' + name if name else ''}: " + " ".join(_pt(v) for v in doc["input"]["vertices"]))
    if cmd == "analyze":
        for f in doc["facets"]:
            lines.append(f"  facet normal {_pt(f['normal'])}  h = {f['level']}")
        lines.append(f"simple: {doc['simple']}")
        lvl = f" (h = {doc['monotone_level']})" if doc["monotone"] else ""
        lines.append(f"monotone: {doc['monotone']}{lvl}")
        lines.append(f"QGamma: {doc['qgamma']}")
        if not doc["qgamma"]:
            bad = next(iter(doc["qgamma_witnesses"]))
            lines.append(f"  fails at vertex {bad} {_pt(doc['input']['vertices'][int(bad)])}")
        lines.append(f"h2 rank: {doc['h2_rank']}")
        if doc["singular_faces"]:
            for f in doc["singular_faces"]:
                kind = "" if f["simple"] else " (non-simple)"
                lines.append(f"singular face dim {f['dim']}: " + " ".join(_pt(v) for v in f["vertices"])
                             + f"  order {f['order']}{kind}")
        else:
            lines.append("singular faces: none")
        if doc["dual"] is not None:
            lines.append("dual: " + " ".join(_pt(v) for v in doc["dual"]["vertices"]))
        for row in doc["maslov_table"]:
            lines.append(f"  Maslov({_pt(row['normal'])}) = {row['maslov']}")
    elif cmd == "dual":
        lines.append("dual: " + " ".join(_pt(v) for v in doc["dual"]["vertices"]))
    elif cmd == "disks":
        lines.append(f"disk polytope (monotone h = {doc['monotone_level']}):")
        for c in doc["classes"]:
            lines.append(f"  {_pt(c['boundary'])}  Maslov {c['maslov']}  #_disks = {c['disks_mod2']} (mod 2)")
    elif cmd == "maslov":
        lines.append(f"boundary: {_pt(doc['boundary'])}")
        lines.append(f"Maslov index: {doc['maslov']}")
        if "area" in doc:
            lines.append(f"area: {doc['area']}")
    elif cmd == "equiv":
        lines.append("a: " + " ".join(_pt(v) for v in doc["a"]["vertices"]))
        lines.append("b: " + " ".join(_pt(v) for v in doc["b"]["vertices"]))
        lines.append(f"equivalent ({doc['mode']}): {doc['equivalent']}")
        if doc["witness"]:
            lines.append("  matrix: " + " ".join(_pt(r) for r in doc["witness"]["matrix"]))
            if doc["mode"] == AFFINE:
                lines.append("  translation: " + _pt(doc["witness"]["translation"]))
    elif cmd == "markov":
        lines.append(f"{doc['count']} Markov triples with c <= {doc['max']}")
        lines.extend("  " + _pt(t) for t in doc["triples"])
    elif cmd == "certify-tori":
        for r in doc["records"]:
            lines.append(f"{_pt(r['triple'])}  weights {_pt(r['weights'])}  dual " + " ".join(_pt(v) for v in r["dual"])
                         + f"  smoothable {r['smoothable']}")
        lines.append(f"{doc['count']} records, certificate: {doc['certificate']}")
    elif cmd == "t-check":
        lines.append(f"vertex {_pt(doc['vertex'])}: cone of type 1/{doc['order']}(1, {doc['q']})")
        lines.append(f"T-singularity: {doc['t_singularity']}")
        if doc["parameters"]:
            p = doc["parameters"]
            lines.append(f"  d = {p['d']}, n = {p['n']}, a = {p['a']}")
    return "\n".join(lines) + "\n"
