"""Certified lower bounds on the gap lambda_min(G) + lambda_1(G) of regular graphs.

The bound comes from a homogeneous fractional decomposition of the graph into
regular pieces. The package builds such decompositions (odd cycles, line-graph
cliques, LP-optimal weights over a candidate family) and checks them.
"""

from ._kernels import BACKEND
from .cycles import CycleList, cycles_per_edge, enumerate_cycles, odd_cycle_decomposition, odd_girth
from .decomposition import (
    BoundCertificate,
    ClassReport,
    FractionalDecomposition,
    certify,
    check_degree_identity,
    classify,
    compute_bound,
    homogeneity,
    line_graph_star_decomposition,
    replay_proof_chain,
    support,
    verify_edge_condition,
)
from .drg import (
    IntersectionArray,
    check_distance_regular,
    common_distance_q,
    corollary_bound,
    path_count_p,
    predicted_cycle_count,
    taylor_minorant,
)
from .graph import (
    Graph,
    blow_up_odd_cycle,
    complete,
    complete_bipartite,
    cycle,
    emit_edge_list,
    emit_graph6,
    generate,
    hypercube,
    is_bipartite,
    is_connected,
    is_regular,
    line_graph,
    parse_edge_list,
    parse_graph6,
    petersen,
)
from .iso import canonical_form, isomorphic
from .optimizer import CandidateFamily, build_decomposition_lp, optimize_bound, standard_families
from .simplex import LinearProgram, LPSolution, solve_lp
from .spectral import SpectralSummary, cycle_lambda_min, eigenvalues_symmetric, spectral_summary

__version__ = "0.1.0"
