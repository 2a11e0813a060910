"""Glued cycle families and their closed-form Jacobians.

Every constructor returns a loopless :class:`Multigraph` with a fixed vertex
labeling (documented per function) and, where the family is planar, a
matching plane embedding. The ``*_formula`` functions give the closed-form
group; tests compare them with the SNF of the reduced Laplacian.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import InputError
from .intlinalg import AbelianGroup
from .jacobian import jacobian
from .multigraph import Multigraph, cycle_graph, parse_graph
from .planar import PlanarEmbedding, circle_coordinates, embedding_from_coordinates

FAMILIES = ("vertex_glue", "cycles_path", "doubled_cycle", "fan",
            "three_cycle_chords", "triangle_chords", "chain")


def _rotation_from_edge_order(g: Multigraph, order: Sequence[Sequence[int]],
                              outer: int | None = None) -> PlanarEmbedding:
    """Embedding from a cyclic list of incident edge ids per vertex (no loops)."""
    rotations = []
    for v, edge_ids in enumerate(order):
        rotations.append(tuple((e, 0 if g.edges[e][0] == v else 1) for e in edge_ids))
    return PlanarEmbedding(g, tuple(rotations), outer)


# -- one vertex ---------------------------------------------------------------

def glue_at_vertex(g1: Multigraph, v1: int, g2: Multigraph, v2: int) -> Multigraph:
    """Identify ``v1`` of ``g1`` with ``v2`` of ``g2``.

    Vertices of ``g1`` keep their ids; the other vertices of ``g2`` follow in
    their original order.
    """
    if not 0 <= v1 < g1.vertex_count or not 0 <= v2 < g2.vertex_count:
        raise InputError("gluing vertex out of range")
    n1 = g1.vertex_count
    relabel = {}
    nxt = n1
    for x in range(g2.vertex_count):
        if x == v2:
            relabel[x] = v1
        else:
            relabel[x] = nxt
            nxt += 1
    edges = g1.edges + tuple((relabel[a], relabel[b]) for a, b in g2.edges)
    return Multigraph(n1 + g2.vertex_count - 1, edges)


# -- two cycles sharing a path ------------------------------------------------

def _check_cycles_path(n: int, k: int, p: int) -> None:
    if n < 2 or k < 2 or not 1 <= p < min(n, k):
        raise InputError(f"need n, k >= 2 and 1 <= p < min(n, k); got n={n}, k={k}, p={p}")


def glue_cycles_along_path(n: int, k: int, p: int) -> Multigraph:
    """C_n and C_k sharing ``p`` consecutive edges, traversed the same way.

    Labeling: C_n is the cycle 0, 1, ..., n-1 and the shared path is 0..p.
    The rest of C_k runs p -> n -> n+1 -> ... -> n+k-p-2 -> 0.
    """
    _check_cycles_path(n, k, p)
    edges = [(i, (i + 1) % n) for i in range(n)]
    arc = [p] + list(range(n, n + k - p - 1)) + [0]
    edges += [(arc[i], arc[i + 1]) for i in range(len(arc) - 1)]
    return Multigraph(n + k - p - 1, tuple(edges))


def cycles_path_embedding(n: int, k: int, p: int) -> PlanarEmbedding:
    g = glue_cycles_along_path(n, k, p)
    # theta graph: branch vertices 0 and p, three internally disjoint paths
    shared_first, shared_last = 0, p - 1
    n_first, n_last = p, n - 1
    k_first, k_last = n, n + k - p - 1
    order: list[list[int]] = [[] for _ in range(g.vertex_count)]
    order[0] = [shared_first, n_last, k_last]
    order[p] = [shared_last, k_first, n_first]
    for v in range(g.vertex_count):
        if v not in (0, p):
            order[v] = [e for e, (a, b) in enumerate(g.edges) if v in (a, b)]
    return _rotation_from_edge_order(g, order)


def jacobian_glued_cycles_formula(n: int, k: int, p: int) -> AbelianGroup:
    """Z/d x Z/((nk - p^2)/d) with d = gcd(n, k, p)."""
    _check_cycles_path(n, k, p)
    d = gcd(gcd(n, k), p)
    return AbelianGroup.from_cyclic_factors([d, (n * k - p * p) // d])


# -- doubled cycle ------------------------------------------------------------

def doubled_cycle(n: int) -> Multigraph:
    """C_n with every edge doubled; edges 2i and 2i+1 join i and i+1 (mod n)."""
    if n < 2:
        raise InputError("doubled cycle needs n >= 2")
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n)] * 2
    return Multigraph(n, tuple(edges))


def doubled_cycle_embedding(n: int) -> PlanarEmbedding:
    return embedding_from_coordinates(doubled_cycle(n), circle_coordinates(n))


def doubled_cycle_formula(n: int) -> AbelianGroup:
    """(Z/2)^(n-2) x Z/2n."""
    if n < 2:
        raise InputError("doubled cycle needs n >= 2")
    return AbelianGroup.from_cyclic_factors([2] * (n - 2) + [2 * n])


# -- fans ---------------------------------------------------------------------

def fan(m: int, n: int) -> Multigraph:
    """Join of m isolated vertices with the path P_n.

    Path vertices are 0..n-1 in order; the m apex vertices are n..n+m-1.
    """
    if m < 1 or n < 1:
        raise InputError("fan needs m >= 1 and n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(i, n + j) for j in range(m) for i in range(n)]
    return Multigraph(n + m, tuple(edges))


def fan_embedding(n: int) -> PlanarEmbedding:
    """F_{1,n}: path on an upper half circle, apex at its center."""
    g = fan(1, n)
    coords = [(math.cos(math.pi * i / max(n - 1, 1)), math.sin(math.pi * i / max(n - 1, 1)))
              for i in range(n)] + [(0.0, 0.0)]
    if n == 1:
        coords[0] = (1.0, 0.0)
    return embedding_from_coordinates(g, coords)


def fan_jacobian_order(n: int) -> int:
    """|Jac(F_{1,n})| via x_n = 3 x_{n-1} - x_{n-2}, seeded x_1 = 1, x_2 = 3."""
    if n < 1:
        raise InputError("fan order needs n >= 1")
    prev, cur = 1, 3
    if n == 1:
        return prev
    for _ in range(n - 2):
        prev, cur = cur, 3 * cur - prev
    return cur


def fan_formula(n: int) -> AbelianGroup:
    return AbelianGroup.cyclic(fan_jacobian_order(n))


# -- C_n with two nested chords -------------------------------------------------

def _check_three_cycle(n: int, p1: int, p2: int, a: int) -> None:
    p = p1 + p2
    if p1 < 1 or p2 < 1:
        raise InputError("runs A and B need at least one edge each")
    if a < 2:
        raise InputError(f"a = {a}: inner chord would join adjacent or equal vertices")
    if n - p - a < 2:
        raise InputError(f"n - p - a = {n - p - a}: outer chord would join adjacent vertices")


def three_cycle_chords(n: int, p1: int, p2: int, a: int) -> Multigraph:
    """C_n (vertices v_0..v_{n-1}) plus chords v_0 v_{p+a} and v_{p1} v_{p1+a}.

    Run A is v_0..v_{p1} (p1 edges), run B is v_{p1+a}..v_{p+a} (p2 edges)
    with p = p1 + p2; the two chords split the disk into a chain of three
    cycles of lengths a+1, p+2 and n-p-a+1.
    """
    _check_three_cycle(n, p1, p2, a)
    p = p1 + p2
    edges = list(cycle_graph(n).edges) + [(0, p + a), (p1, p1 + a)]
    return Multigraph(n, tuple(edges))


def three_cycle_embedding(n: int, p1: int, p2: int, a: int) -> PlanarEmbedding:
    return embedding_from_coordinates(three_cycle_chords(n, p1, p2, a), circle_coordinates(n))


def q_of_a(n: int, p1: int, p2: int, a: int) -> int:
    """n(p+1) - p^2 + a(n-p)(p+2) - (p+2)a^2."""
    _check_three_cycle(n, p1, p2, a)
    p = p1 + p2
    return n * (p + 1) - p * p + a * (n - p) * (p + 2) - (p + 2) * a * a


def three_cycle_formula(n: int, p1: int, p2: int, a: int) -> AbelianGroup:
    return AbelianGroup.cyclic(q_of_a(n, p1, p2, a))


# -- C_n with an inscribed triangle ------------------------------------------

def _check_triangle(n: int, a: int, b: int, c: int) -> None:
    if a + b + c != n:
        raise InputError(f"a + b + c = {a + b + c} must equal n = {n}")
    if min(a, b, c) < 2:
        raise InputError("triangle vertices must be pairwise non-adjacent on C_n (a, b, c >= 2)")


def triangle_chords(n: int, a: int, b: int, c: int) -> Multigraph:
    """C_n (vertices 0..n-1) plus the triangle on vertices 0, a, a+b."""
    _check_triangle(n, a, b, c)
    edges = list(cycle_graph(n).edges) + [(0, a), (a, a + b), (a + b, 0)]
    return Multigraph(n, tuple(edges))


def triangle_embedding(n: int, a: int, b: int, c: int) -> PlanarEmbedding:
    return embedding_from_coordinates(triangle_chords(n, a, b, c), circle_coordinates(n))


def triangle_formula(n: int, a: int, b: int, c: int) -> AbelianGroup:
    """Z/d x Z/(f/d), d = gcd(a+1, b+1, c+1)."""
    _check_triangle(n, a, b, c)
    A, B, C = a + 1, b + 1, c + 1
    d = gcd(gcd(A, B), C)
    f = n * A * B * C - (a * a * B * C + b * b * A * C + c * c * A * B)
    return AbelianGroup.from_cyclic_factors([d, f // d])


# -- chains of cycles ---------------------------------------------------------

def _chain_build(lengths: Sequence[int]) -> tuple[Multigraph, list[int]]:
    if not lengths:
        raise InputError("chain needs at least one cycle")
    if any(x < 3 for x in lengths):
        raise InputError("every cycle in a chain needs length >= 3")
    n1 = lengths[0]
    edges = list(cycle_graph(n1).edges)
    boundary = list(range(n1))  # outer face, cyclic vertex order
    u, v = 0, 1
    nv = n1
    for length in lengths[1:]:
        new = list(range(nv, nv + length - 2))
        nv += length - 2
        path = [v] + new + [u]
        edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
        at = boundary.index(u)
        boundary[at + 1:at + 1] = list(reversed(new))
        seq = [u] + list(reversed(new)) + [v]
        j = (len(seq) - 1) // 2
        u, v = seq[j], seq[j + 1]
    return Multigraph(nv, tuple(edges)), boundary


def chain_of_cycles(lengths: Sequence[int]) -> Multigraph:
    """Cycles C_{n_1}, ..., C_{n_k}, each sharing one edge with its neighbors.

    The first cycle is 0..n_1-1; cycle i+1 is glued on an edge of the path
    added for cycle i (never the edge shared with cycle i-1), and its new
    vertices get the next free ids.
    """
    return _chain_build(lengths)[0]


def chain_embedding(lengths: Sequence[int]) -> PlanarEmbedding:
    g, boundary = _chain_build(lengths)
    coords = [None] * g.vertex_count
    ring = circle_coordinates(len(boundary))
    for pos, v in enumerate(boundary):
        coords[v] = ring[pos]
    return embedding_from_coordinates(g, coords)


def chain_order(lengths: Sequence[int]) -> int:
    """x_1 = n_1, x_2 = n_1 n_2 - 1, x_i = n_i x_{i-1} - x_{i-2}."""
    if not lengths or any(x < 3 for x in lengths):
        raise InputError("chain needs at least one cycle, each of length >= 3")
    prev, cur = 1, lengths[0]
    for length in lengths[1:]:
        prev, cur = cur, length * cur - prev
    return cur


def chain_orders(lengths: Sequence[int]) -> list[int]:
    return [chain_order(lengths[:i]) for i in range(1, len(lengths) + 1)]


def chain_formula(lengths: Sequence[int]) -> AbelianGroup:
    return AbelianGroup.cyclic(chain_order(lengths))


# -- family dispatch ----------------------------------------------------------

@dataclass(frozen=True)
class GluedFamilySpec:
    """A family tag plus its integer parameters, e.g. ``("cycles_path", (8, 10, 4))``.

    ``vertex_glue`` is the exception: its parameters are
    ``(g1, v1, g2, v2)`` with two graphs.
    """

    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "params", tuple(self.params))
        arity = {"cycles_path": 3, "doubled_cycle": 1, "fan": 2,
                 "three_cycle_chords": 4, "triangle_chords": 4, "vertex_glue": 4}
        want = arity.get(self.family)
        if want is not None and len(self.params) != want:
            raise InputError(f"{self.family} takes {want} parameters, got {len(self.params)}")

    def build(self) -> Multigraph:
        f, p = self.family, self.params
        if f == "vertex_glue":
            return glue_at_vertex(*p)
        if f == "cycles_path":
            return glue_cycles_along_path(*p)
        if f == "doubled_cycle":
            return doubled_cycle(*p)
        if f == "fan":
            return fan(*p)
        if f == "three_cycle_chords":
            return three_cycle_chords(*p)
        if f == "triangle_chords":
            return triangle_chords(*p)
        return chain_of_cycles(p)

    def formula_group(self) -> AbelianGroup:
        """Closed-form Jacobian where one exists; SNF of the graph otherwise."""
        f, p = self.family, self.params
        if f == "vertex_glue":
            g1, _, g2, _ = p
            return jacobian(g1) * jacobian(g2)
        if f == "cycles_path":
            return jacobian_glued_cycles_formula(*p)
        if f == "doubled_cycle":
            return doubled_cycle_formula(*p)
        if f == "fan":
            m, n = p
            return fan_formula(n) if m == 1 else jacobian(self.build())
        if f == "three_cycle_chords":
            return three_cycle_formula(*p)
        if f == "triangle_chords":
            return triangle_formula(*p)
        return chain_formula(p)

    def embedding(self) -> PlanarEmbedding | None:
        f, p = self.family, self.params
        if f == "cycles_path":
            return cycles_path_embedding(*p)
        if f == "doubled_cycle":
            return doubled_cycle_embedding(*p)
        if f == "fan" and p[0] == 1:
            return fan_embedding(p[1])
        if f == "three_cycle_chords":
            return three_cycle_embedding(*p)
        if f == "triangle_chords":
            return triangle_embedding(*p)
        if f == "chain":
            return chain_embedding(p)
        return None


def parse_family(family: str, args: Sequence[str]) -> GluedFamilySpec:
    """Spec from command-line tokens; ``vertex_glue`` takes ``G1 v1 G2 v2`` (file paths)."""
    try:
        if family == "vertex_glue":
            if len(args) != 4:
                raise InputError("vertex_glue takes: <graph1> <v1> <graph2> <v2>")
            from pathlib import Path
            g1 = parse_graph(Path(args[0]).read_text(encoding="utf-8"))
            g2 = parse_graph(Path(args[2]).read_text(encoding="utf-8"))
            return GluedFamilySpec(family, (g1, int(args[1]), g2, int(args[3])))
        return GluedFamilySpec(family, tuple(int(a) for a in args))
    except (ValueError, OSError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad parameters for {family}: {exc}") from None
