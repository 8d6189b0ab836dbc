"""Exact spectral analysis of the n-Queens graph."""
from .board import BoardCoord, QueensGraph, build_graph, coords_adjacent, degree, edge_count, vertex_index
from .exact import (
    ExactMatrix,
    MultiplicityCertificate,
    SizeGuardError,
    apply_adjacency,
    is_eigenvector,
    is_linearly_independent,
    nullity_certified,
    rank_exact_bareiss,
    rank_mod_p,
)
from .families import (
    BoardVector,
    basis_minus4,
    e_vector,
    f_vector,
    n_minus_4_family,
    predicted_integer_spectrum,
    x_block_vector,
)
from .harness import check_conjecture, integer_spectrum_exact, run_range, verify_families
from .spectrum import Spectrum, cluster_count, dense_spectrum, integer_candidates

__version__ = "0.1.0"
