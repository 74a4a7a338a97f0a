"""Spectra of T-vertex and T-edge neighbourhood coronas."""

from .corona import CoronaResult, corona, t_edge_neighborhood_corona, t_vertex_neighborhood_corona
from .graphs import Graph, adjacency_matrix, incidence_matrix, laplacian_matrix, line_graph, total_graph
from .spectra import Spectrum, coronal, det_at, eigenvalues_symmetric, multiset_equal, real_roots_monic

__all__ = [
    "CoronaResult",
    "Graph",
    "Spectrum",
    "adjacency_matrix",
    "corona",
    "coronal",
    "det_at",
    "eigenvalues_symmetric",
    "incidence_matrix",
    "laplacian_matrix",
    "line_graph",
    "multiset_equal",
    "real_roots_monic",
    "t_edge_neighborhood_corona",
    "t_vertex_neighborhood_corona",
    "total_graph",
]

__version__ = "0.1.0"
