"""Neighbourhood corona products, exact automorphism enumeration, and
distinguishing number/index machinery."""

from .automorphisms import (
    AutomorphismGroup,
    CoronaDecomposition,
    DecompositionError,
    HypothesisViolation,
    SearchCapExceeded,
    decompose_corona_automorphism,
    enumerate_automorphisms,
    induced_edge_permutation,
    restriction_to_base,
)
from .config import RunConfig, load_config
from .constructive import (
    BladeTuple,
    ReplacementPattern,
    blade_capacity,
    compute_M,
    corona_edge_labeling,
    corona_vertex_labeling,
    enumerate_blade_tuples,
    friendship_distinguishing_formula,
    friendship_splitting_formula,
    friendship_splitting_labeling,
    replacement_patterns,
    splitting_edge_labeling,
    splitting_vertex_labeling,
    y_sequence,
)
from .corona import (
    BaseRole,
    CopyRole,
    CoronaGraph,
    CoronaIndex,
    neighbourhood_corona,
    role_of,
    splitting_graph,
)
from .distinguishing import (
    DegenerateEdgeCase,
    DistinguishingReport,
    distinguishing_index,
    distinguishing_number,
    is_distinguishing_edge,
    is_distinguishing_vertex,
)
from .families import complete, cycle, friendship, path, star
from .formats import encode_graph6, parse_edge_list, parse_graph, parse_graph6
from .graphs import (
    EdgeLabeling,
    Graph,
    GraphError,
    LabelingError,
    Permutation,
    VertexLabeling,
    apply_permutation,
    degree,
    edge_labeling,
    is_automorphism,
    make_graph,
    vertex_labeling,
)
from .harness import Corpus, TheoremReport, default_corpus, run_theorem_harness

__all__ = [name for name in dir() if not name.startswith("_")]
