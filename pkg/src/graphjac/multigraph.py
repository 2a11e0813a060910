"""Finite multigraphs with dense integer vertex and edge ids.

A :class:`Multigraph` is an immutable value. Vertices are ``0..n-1``; edges are
stored as endpoint pairs and the id of an edge is its position in ``edges``.
Parallel edges are always allowed. Loops are only allowed when the graph is
built with ``allows_loops=True`` (the Tutte-polynomial and dual-graph setting);
everything Jacobian-related works with loopless graphs.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GuardError, InputError

Edge = tuple[int, int]

ISOMORPHISM_MAX_VERTICES = 12


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[Edge, ...] = ()
    allows_loops: bool = False

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError(f"negative vertex count {self.vertex_count}")
        normalized = []
        for i, pair in enumerate(self.edges):
            u, v = (int(x) for x in pair)
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InputError(f"edge {i} = ({u}, {v}) has an endpoint out of range")
            if u == v and not self.allows_loops:
                raise InputError(f"edge {i} is a loop at vertex {u}; graph is loopless")
            normalized.append((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def build(cls, vertex_count: int, endpoint_pairs: Iterable[Sequence[int]] = (),
              allows_loops: bool = False) -> "Multigraph":
        return cls(vertex_count, tuple(tuple(p) for p in endpoint_pairs), allows_loops)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise InputError(f"vertex {v} out of range 0..{self.vertex_count - 1}")

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < len(self.edges):
            raise InputError(f"edge {e} out of range 0..{len(self.edges) - 1}")

    def degree(self, v: int) -> int:
        """Number of edge ends at ``v``; a loop counts twice."""
        self._check_vertex(v)
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def multiplicities(self) -> Counter:
        """Counter over unordered vertex pairs ``(min, max)``."""
        return Counter((min(a, b), max(a, b)) for a, b in self.edges)

    def adjacency(self) -> list[dict[int, int]]:
        """Per-vertex map neighbor -> edge multiplicity (loops map v -> count)."""
        adj: list[dict[int, int]] = [dict() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a][b] = adj[a].get(b, 0) + 1
            if a != b:
                adj[b][a] = adj[b].get(a, 0) + 1
        return adj

    def loop_count(self) -> int:
        return sum(a == b for a, b in self.edges)

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return len(self.components()) == 1

    def require_connected(self) -> None:
        if not self.is_connected():
            raise GuardError("graph is not connected")

    def genus(self) -> int:
        """Circuit rank ``m - n + 1`` of a connected graph."""
        self.require_connected()
        return len(self.edges) - self.vertex_count + 1

    def delete_edge(self, e: int) -> "Multigraph":
        """Remove edge ``e``; later edge ids shift down by one, vertices keep their ids."""
        self._check_edge(e)
        return Multigraph(self.vertex_count, self.edges[:e] + self.edges[e + 1:],
                          self.allows_loops)

    def contract_edge(self, e: int, drop_loops: bool = False) -> tuple["Multigraph", list[int]]:
        """Contract edge ``e``.

        The merged vertex keeps the smaller endpoint id and vertices above the
        larger endpoint shift down by one. Returns the new graph together with
        ``vertex_map`` (old id -> new id). Edges parallel to ``e`` become loops:
        they are kept in loop mode, discarded when ``drop_loops`` is set, and
        rejected otherwise.
        """
        self._check_edge(e)
        u, v = self.edges[e]
        if u == v:
            raise InputError(f"edge {e} is a loop and cannot be contracted")
        keep, gone = min(u, v), max(u, v)
        vertex_map = [x - (x > gone) for x in range(self.vertex_count)]
        vertex_map[gone] = vertex_map[keep]
        new_edges = []
        for i, (a, b) in enumerate(self.edges):
            if i == e:
                continue
            a2, b2 = vertex_map[a], vertex_map[b]
            if a2 == b2 and not self.allows_loops:
                if drop_loops:
                    continue
                raise InputError(f"contracting edge {e} turns edge {i} into a loop")
            new_edges.append((a2, b2))
        return Multigraph(self.vertex_count - 1, tuple(new_edges), self.allows_loops), vertex_map

    def add_edge(self, u: int, v: int) -> "Multigraph":
        return Multigraph(self.vertex_count, self.edges + ((u, v),), self.allows_loops)

    def without_loops(self) -> "Multigraph":
        return Multigraph(self.vertex_count, tuple(p for p in self.edges if p[0] != p[1]), False)

    def with_loops_allowed(self) -> "Multigraph":
        return Multigraph(self.vertex_count, self.edges, True)

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Apply the vertex bijection ``perm`` (old id -> new id); edge order is kept."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise InputError("relabeling is not a permutation of the vertices")
        return Multigraph(self.vertex_count, tuple((perm[a], perm[b]) for a, b in self.edges),
                          self.allows_loops)

    def disjoint_union(self, other: "Multigraph") -> "Multigraph":
        shift = self.vertex_count
        return Multigraph(self.vertex_count + other.vertex_count,
                          self.edges + tuple((a + shift, b + shift) for a, b in other.edges),
                          self.allows_loops or other.allows_loops)


def build(vertex_count: int, endpoint_pairs: Iterable[Sequence[int]] = (),
          allows_loops: bool = False) -> Multigraph:
    return Multigraph.build(vertex_count, endpoint_pairs, allows_loops)


# -- small named graphs used across the package and the tests ---------------

def cycle_graph(n: int) -> Multigraph:
    """C_n for n >= 2 (C_2 is a doubled edge)."""
    if n < 2:
        raise InputError("a cycle needs at least 2 vertices")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Multigraph:
    return Multigraph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


# -- isomorphism --------------------------------------------------------------

def are_isomorphic(g1: Multigraph, g2: Multigraph,
                   max_vertices: int = ISOMORPHISM_MAX_VERTICES) -> bool:
    """Decide isomorphism by backtracking over degree-compatible vertex maps.

    Edge multiplicities (and loop counts) must match exactly. Refuses graphs
    with more than ``max_vertices`` vertices.
    """
    if max(g1.vertex_count, g2.vertex_count) > max_vertices:
        raise GuardError(f"isomorphism test limited to {max_vertices} vertices")
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    n = g1.vertex_count
    adj1, adj2 = g1.adjacency(), g2.adjacency()
    deg1, deg2 = g1.degrees(), g2.degrees()

    def signature(adj, deg, v):
        return (deg[v], adj[v].get(v, 0), tuple(sorted(deg[w] for w in adj[v] if w != v)))

    sig1 = [signature(adj1, deg1, v) for v in range(n)]
    sig2 = [signature(adj2, deg2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False

    # most constrained vertices first: rare signatures, then high degree
    counts = Counter(sig1)
    order = sorted(range(n), key=lambda v: (counts[sig1[v]], -deg1[v], v))
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or sig2[w] != sig1[v]:
                continue
            ok = True
            for j in range(i):
                x = order[j]
                if adj1[v].get(x, 0) != adj2[w].get(image[x], 0):
                    ok = False
                    break
            if not ok:
                continue
            image[v], used[w] = w, True
            if extend(i + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)


# -- text format --------------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: expected an integer, got {token!r}") from None


def parse_graph(text: str, allows_loops: bool = False, extra_keys: Sequence[str] = ()) -> Multigraph:
    """Parse the line format ``n <count>`` followed by ``e <u> <v>`` lines.

    Lines whose first token is in ``extra_keys`` are skipped so that richer
    formats (embeddings, rotors) can share the graph section.
    """
    n = None
    edges = []
    for lineno, tokens in _content_lines(text):
        key = tokens[0]
        if key == "n":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate 'n' header")
            if len(tokens) != 2:
                raise InputError(f"line {lineno}: expected 'n <vertex_count>'")
            n = _int(tokens[1], lineno)
        elif key == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before 'n' header")
            if len(tokens) != 3:
                raise InputError(f"line {lineno}: expected 'e <u> <v>'")
            edges.append((_int(tokens[1], lineno), _int(tokens[2], lineno)))
        elif key in extra_keys:
            continue
        else:
            raise InputError(f"line {lineno}: unknown record {key!r}")
    if n is None:
        raise InputError("missing 'n <vertex_count>' header")
    return Multigraph(n, tuple(edges), allows_loops)


def format_graph(g: Multigraph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
