"""Laplacians, Jacobians and Picard groups of multigraphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GuardError, InputError
from .intlinalg import AbelianGroup, IntMatrix, cokernel_group, determinant
from .multigraph import Multigraph

BRUTE_FORCE_MAX_EDGES = 16


@dataclass(frozen=True)
class LaplacianPair:
    full: IntMatrix
    reduced: IntMatrix
    removed_vertex: int


def laplacian(g: Multigraph) -> IntMatrix:
    """Degree matrix minus adjacency matrix (off-diagonal = -multiplicity)."""
    if g.allows_loops:
        raise InputError("laplacian expects a loopless graph; call without_loops() first")
    n = g.vertex_count
    L = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return IntMatrix.from_rows(L, n)


def reduced_laplacian(g: Multigraph, removed: int = 0) -> IntMatrix:
    return laplacian_pair(g, removed).reduced


def laplacian_pair(g: Multigraph, removed: int = 0) -> LaplacianPair:
    if not 0 <= removed < g.vertex_count:
        raise InputError(f"removed vertex {removed} out of range")
    full = laplacian(g)
    return LaplacianPair(full, full.delete(removed), removed)


def _loopless(g: Multigraph) -> Multigraph:
    # loops never change the Laplacian, so duals with bridges are fine here
    return g.without_loops() if g.allows_loops else g


def jacobian(g: Multigraph, removed: int = 0) -> AbelianGroup:
    """Cokernel of a reduced Laplacian; does not depend on ``removed``."""
    g = _loopless(g)
    g.require_connected()
    return cokernel_group(reduced_laplacian(g, removed))


def picard(g: Multigraph) -> AbelianGroup:
    """Cokernel of the full Laplacian: the Jacobian times one free factor."""
    g = _loopless(g)
    g.require_connected()
    return cokernel_group(laplacian(g))


def spanning_tree_count(g: Multigraph) -> int:
    """Matrix-tree theorem: determinant of the reduced Laplacian."""
    g = _loopless(g)
    g.require_connected()
    return determinant(reduced_laplacian(g, 0))


def brute_force_spanning_tree_count(g: Multigraph, max_edges: int = BRUTE_FORCE_MAX_EDGES) -> int:
    """Count spanning trees by testing every (n-1)-subset of edges for acyclicity."""
    g = _loopless(g)
    if g.edge_count > max_edges:
        raise GuardError(f"brute-force tree enumeration limited to {max_edges} edges")
    n = g.vertex_count
    if n == 0:
        return 0
    count = 0
    for subset in combinations(g.edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            count += 1
    return count


def groups_isomorphic(a: AbelianGroup, b: AbelianGroup) -> bool:
    # both are stored canonically, so isomorphism is equality of invariants
    return a.torsion == b.torsion and a.free_rank == b.free_rank
