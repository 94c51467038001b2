"""Extremal index of complete signed graphs, via Seidel matrices.

A complete signed graph whose negative edges form the graph H has adjacency
matrix S(H), the Seidel matrix of H. This package builds the graphs that
maximise the index for n vertices and m <= n^2/4 negative edges, computes
that index in closed form, and checks it against an exhaustive search at
small n.
"""

__version__ = "0.1.0"

from .eigen import ConvergenceError, Spectrum, eigen_decompose
from .extremal import (
    BracketError,
    CubicSolution,
    DomainError,
    ExtremalParams,
    char_cubic,
    construct_Hnm,
    extremal_params,
    hnm_variants,
    max_index,
    quotient_matrix,
    solve_xi,
    xi_bounds,
)
from .graph import (
    Graph,
    are_isomorphic,
    complete_bipartite,
    delete_vertex,
    make_graph,
    parse_edge_list,
    read_edge_list,
    star_union,
    write_edge_list,
)
from .oracle import VerificationReport, conjecture_graph, enumerate_graphs, find_maximizers, verify_theorem
from .spectra import (
    negative_term_count,
    principal_eigenvector,
    quadratic_form,
    seidel_index,
    seidel_matrix,
    switch,
)
