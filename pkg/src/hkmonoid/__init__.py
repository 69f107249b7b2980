"""Hecke-Kiselman monoids: word problem tools, the cycle monoid C_n,
matrix-type representations and the maximal-ideal catalog of PI algebras."""
from .catalog import catalog, component_descriptors, maximal_ideal_descriptors, one_dim_rep
from .cycle import (
    AffineMap,
    all_idempotents,
    classify_level,
    f_map,
    idempotent_for_subset,
    infiniteness_witness,
    snqi_word,
    support,
)
from .errors import HKError
from .graph import (
    OrientedGraph,
    acyclic_full_subgraphs,
    components,
    cycle_graph,
    cyclic_core,
    is_pi,
    parse_graph,
    path_graph,
)
from .linalg import RationalMatrix, full_rank_factorization, rank
from .matrix_type import (
    THETA,
    Element,
    MatrixTypeData,
    build_rep,
    c3_data,
    evaluate_sandwich,
    extend_rep,
    load_data,
    multiply,
    verify_homomorphism,
)
from .rewriting import are_equal, enumerate_monoid, idempotents_acyclic, normalize, relations
from .words import format_word, parse_word

__version__ = "0.1.0"
