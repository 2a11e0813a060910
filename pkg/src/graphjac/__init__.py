"""Exact Jacobians of finite multigraphs.

Reduced-Laplacian Smith normal forms, plane duality and face-cycle matrices,
glued cycle families with closed-form groups, chip-firing divisors, the
rotor construction, and Tutte polynomials.
"""
from .errors import GraphJacError, GuardError, InputError
from .intlinalg import (AbelianGroup, IntMatrix, cokernel_group, determinant,
                        smith_normal_form)
from .jacobian import groups_isomorphic, jacobian, laplacian, picard, spanning_tree_count
from .multigraph import Multigraph, are_isomorphic, format_graph, parse_graph
from .planar import (PlanarEmbedding, dual_graph, face_cycle_matrix, jacobian_via_faces,
                     trace_faces)
from .tuttepoly import TuttePolynomial, tutte_polynomial

__all__ = [
    "AbelianGroup", "GraphJacError", "GuardError", "InputError", "IntMatrix", "Multigraph",
    "PlanarEmbedding", "TuttePolynomial", "are_isomorphic", "cokernel_group", "determinant",
    "dual_graph", "face_cycle_matrix", "format_graph", "groups_isomorphic", "jacobian",
    "jacobian_via_faces", "laplacian", "parse_graph", "picard", "smith_normal_form",
    "spanning_tree_count", "trace_faces", "tutte_polynomial",
]
