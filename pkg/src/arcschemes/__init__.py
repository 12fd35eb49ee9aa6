"""arcschemes: coherent closure of graphs and circular-arc decomposition.

The package computes the smallest coherent configuration refining a
graph's edge relation (2-dimensional Weisfeiler-Leman stabilization),
implements circular-arc models with their reduction, and produces
constructive certificates for circular-arc graphs whose scheme is an
association scheme.
"""

from .arcs import (
    ArcFunction,
    ReducedArcFunction,
    check_neighborhood_condition,
    degree_check,
    intersection_graph,
    is_regular_equivalent,
    reduce,
    standard_model,
)
from .characterize import (
    Decomposition,
    DecomposeOutcome,
    SchemeDecomposition,
    decompose_caw,
    is_elementary_caw,
    predicted_aut_order,
    predicted_scheme,
    scheme_decomposition,
    verify_wreath_theorem,
)
from .closure import RelationSet, closure_of_graph, coherent_closure
from .graphs import (
    Graph,
    VertexPartition,
    complete,
    count_automorphisms,
    cycle,
    edge_level_partition,
    elementary_caw,
    empty_graph,
    from_edges,
    lex_product,
    quotient_graph,
    twin_relation,
)
from .kernels import BACKEND
from .schemes import (
    CoherentConfiguration,
    IsoVerdict,
    SchemeEquivalence,
    VerifyReport,
    dihedral_scheme,
    equivalence_from_colors,
    equivalences,
    intersection_number,
    is_association,
    is_fusion_of,
    point_scheme,
    quotient,
    rank2_scheme,
    restriction,
    schemes_isomorphic,
    verify,
    wreath_product,
)

__version__ = "0.1.0"

__all__ = [
    "ArcFunction",
    "BACKEND",
    "CoherentConfiguration",
    "Decomposition",
    "DecomposeOutcome",
    "Graph",
    "IsoVerdict",
    "ReducedArcFunction",
    "RelationSet",
    "SchemeDecomposition",
    "SchemeEquivalence",
    "VertexPartition",
    "VerifyReport",
    "check_neighborhood_condition",
    "closure_of_graph",
    "coherent_closure",
    "complete",
    "count_automorphisms",
    "cycle",
    "decompose_caw",
    "degree_check",
    "dihedral_scheme",
    "edge_level_partition",
    "elementary_caw",
    "empty_graph",
    "equivalence_from_colors",
    "equivalences",
    "from_edges",
    "intersection_graph",
    "intersection_number",
    "is_association",
    "is_elementary_caw",
    "is_fusion_of",
    "is_regular_equivalent",
    "lex_product",
    "point_scheme",
    "predicted_aut_order",
    "predicted_scheme",
    "quotient",
    "quotient_graph",
    "rank2_scheme",
    "reduce",
    "restriction",
    "scheme_decomposition",
    "schemes_isomorphic",
    "standard_model",
    "twin_relation",
    "verify",
    "verify_wreath_theorem",
    "wreath_product",
]
