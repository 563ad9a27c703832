"""Exact toric invariants of monotone Lagrangian tori from lattice polytopes."""

from .equivalence import AFFINE, LINEAR, NormalFormKey, are_equivalent, normal_form
from .lattice import (
    LatticePolytope,
    PolytopeError,
    contains_origin_interior,
    facet_enumeration,
    hermite_normal_form,
    primitive_part,
    smith_invariants,
    vertex_facet_incidence,
)
from .markov import (
    MarkovTriple,
    certify_distinct_tori,
    markov_enumerate,
    t_singularity_check,
    triangle_for_triple,
)
from .formats import ParseError, format_polytope, parse_polytope, read_polytope
from .toric import (
    HypothesisError,
    analyze,
    area_of_facet_class,
    disk_polytope,
    dual_polytope,
    h2_rank,
    is_monotone,
    is_qgamma,
    is_simple,
    maslov_of_boundary,
    maslov_of_facet_class,
    singular_faces,
    vertex_cones,
)

__version__ = "0.1.0"
