"""Directed-graph census of simplices and almost-simplices, closing
probabilities, motif analysis, and signature-prescribed synthesis."""

__version__ = "0.1.0"

from .graph import (
    DirectedGraph,
    DuplicateEdge,
    GraphError,
    Malformed,
    ParseError,
    SelfLoop,
    TooManyEdges,
    VertexOutOfRange,
    disjoint_union,
    generate_er,
    parse_graph,
    serialize_graph,
)
from .complexes import FlagComplex, boundary, build_flag_complex, coboundaries_table, local_coboundaries
from .almost import (
    AlmostSimplex,
    CensusCounts,
    CensusRow,
    GraphTooLarge,
    ads_enumerator,
    brute_force_census,
    complete,
    count_all_ads,
    is_completed,
    sub_almost_simplices,
)
from .closing import (
    BaselineReport,
    ClosingProfile,
    build_profile,
    compute_p,
    compute_p_hat,
    compute_p_hat2,
    er_baseline,
    invert_p_hat,
)
from .motifs import MotifReport, census_motifs, chance_level
from .synthesis import (
    GadgetStats,
    Infeasible,
    InvalidTarget,
    SynthesisTarget,
    gadget,
    measure_gadget,
    measure_signature,
    synthesize,
)
from .report import analyze_graph, canonical_json

__all__ = [name for name in dir() if not name.startswith("_")]
