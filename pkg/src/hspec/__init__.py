"""Spectral radius and minimum H-eigenvalue of k-uniform hypergraphs, with
certified checks of the nonregularity spectral-gap bounds."""

from .bounds import (
    CERTIFIED,
    FAILED,
    NOT_APPLICABLE,
    WITHIN_TOL,
    BoundReport,
    analyze,
    bound_alon_sudakov,
    bound_cor32,
    bound_eq11,
    bound_thm31_k4f,
    bound_thm31_k5f,
    bound_thm31_main,
    verify_corollary32,
    verify_theorem31,
    verify_theorem33,
)
from .hypergraph import (
    Hypergraph,
    HyperPath,
    HypergraphError,
    KhgParseError,
    complete_hypergraph,
    components,
    degree_profile,
    delete_edge,
    diameter,
    distance,
    enumerate_connected,
    gen_random,
    gen_random_connected,
    is_connected,
    is_regular,
    parse_khg,
    read_khg,
    shortest_path,
    to_khg,
)
from .mu import MuEstimate, mu_estimate, mu_odd_bipartite_exact, rayleigh_gradient
from .spectral import SpectralEnclosure, exact_ratio_bounds, rho_enclose, rho_regular_exact
from .structure import edge_connectivity, edge_disjoint_path_count, odd_bipartition
from .tensor import adjacency_apply, componentwise_power, eigen_residual, k_norm_normalize, rayleigh

__version__ = "0.1.0"
