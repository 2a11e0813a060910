"""Two-variable Tutte polynomial of a connected multigraph.

Two independent routes are provided:

* :func:`tutte_polynomial`: deletion-contraction with a memo table, exact
  but exponential, guarded at ``max_edges``;
* :func:`tutte_polynomial_frontier`: the rank-generating subset expansion
  summed by a vertex-elimination sweep over connectivity partitions of the
  active vertices; cost grows with the sweep width rather than the edge
  count, which is what the rotor supergraphs need.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb

from .errors import GuardError
from .multigraph import Multigraph

DELETION_CONTRACTION_MAX_EDGES = 18


@dataclass(frozen=True)
class TuttePolynomial:
    """Coefficients ``{(i, j): c}`` of ``x^i y^j``; zero terms are dropped."""

    coefficients: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, coeffs: dict) -> "TuttePolynomial":
        return cls(tuple(sorted((k, c) for k, c in coeffs.items() if c)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coefficients)

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x ** i * y ** j for (i, j), c in self.coefficients)

    def __str__(self) -> str:
        terms = []
        for (i, j), c in sorted(self.coefficients, key=lambda t: (-t[0][0] - t[0][1], -t[0][0])):
            mono = "".join(([f"x^{i}" if i > 1 else "x"] if i else [])
                           + ([f"y^{j}" if j > 1 else "y"] if j else []))
            terms.append(mono if c == 1 and mono else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def format_lines(self) -> str:
        """``i j c`` per nonzero coefficient, sorted lexicographically by (i, j)."""
        return "".join(f"{i} {j} {c}\n" for (i, j), c in self.coefficients)


def polynomials_equal(a: TuttePolynomial, b: TuttePolynomial) -> bool:
    return a.coefficients == b.coefficients


def _poly_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, 0) + c
    return out


def _poly_shift(p: dict, di: int, dj: int) -> dict:
    return {(i + di, j + dj): c for (i, j), c in p.items()}


# -- deletion-contraction -----------------------------------------------------

def _key(n: int, edges: tuple) -> tuple:
    # Relabel by a degree-refined order and sort the edge list. The key pins
    # down the labeled graph, so equal keys imply isomorphic graphs: no false
    # memo hits, only some missed ones.
    deg = [0] * n
    nbr = [[] for _ in range(n)]
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
        nbr[a].append(b)
        nbr[b].append(a)
    sig = [(deg[v], tuple(sorted(deg[w] for w in nbr[v]))) for v in range(n)]
    order = sorted(range(n), key=lambda v: sig[v])
    rank = {v: r for r, v in enumerate(order)}
    return n, tuple(sorted(tuple(sorted((rank[a], rank[b]))) for a, b in edges))


def _is_bridge(n: int, edges: tuple, e: int) -> bool:
    u, v = edges[e]
    adj = [[] for _ in range(n)]
    for i, (a, b) in enumerate(edges):
        if i != e:
            adj[a].append(b)
            adj[b].append(a)
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return False
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def _contract(n: int, edges: tuple, e: int) -> tuple[int, tuple]:
    u, v = edges[e]
    keep, gone = min(u, v), max(u, v)

    def f(x):
        return keep if x == gone else x - (x > gone)

    return n - 1, tuple((f(a), f(b)) for i, (a, b) in enumerate(edges) if i != e)


def _dc(n: int, edges: tuple, memo: dict) -> dict:
    loops = sum(a == b for a, b in edges)
    if loops:
        rest = tuple(p for p in edges if p[0] != p[1])
        return _poly_shift(_dc(n, rest, memo), 0, loops)
    if not edges:
        return {(0, 0): 1}
    key = _key(n, edges)
    if key in memo:
        return memo[key]
    if _is_bridge(n, edges, 0):
        result = _poly_shift(_dc(*_contract(n, edges, 0), memo), 1, 0)
    else:
        deleted = _dc(n, edges[1:], memo)
        contracted = _dc(*_contract(n, edges, 0), memo)
        result = _poly_add(deleted, contracted)
    memo[key] = result
    return result


def tutte_polynomial(g: Multigraph, max_edges: int = DELETION_CONTRACTION_MAX_EDGES,
                     edge_order=None) -> TuttePolynomial:
    """Deletion-contraction: bridges give a factor x, loops a factor y.

    ``edge_order`` optionally permutes the edges before recursion; the result
    does not depend on it.
    """
    g.require_connected()
    if g.edge_count > max_edges:
        raise GuardError(f"deletion-contraction limited to {max_edges} edges (got {g.edge_count})")
    edges = g.edges if edge_order is None else tuple(g.edges[i] for i in edge_order)
    memo: dict = {}  # per call, never shared between calls
    return TuttePolynomial.from_dict(_dc(g.vertex_count, tuple(edges), memo))


# -- frontier sweep -----------------------------------------------------------

def _elimination_order(g: Multigraph) -> list[int]:
    """Greedy order that keeps few vertices active (introduced, not finished)."""
    n = g.vertex_count
    adj = g.adjacency()
    remaining_deg = [sum(m for w, m in adj[v].items() if w != v) for v in range(n)]
    placed = [False] * n
    order = []
    start = min(range(n), key=lambda v: (remaining_deg[v], v))
    frontier_score = [0] * n
    nxt = start
    for _ in range(n):
        v = nxt
        placed[v] = True
        order.append(v)
        for w, m in adj[v].items():
            if w != v and not placed[w]:
                frontier_score[w] += m
        candidates = [w for w in range(n) if not placed[w]]
        if not candidates:
            break
        # prefer the vertex most tied to what is already placed
        nxt = max(candidates, key=lambda w: (frontier_score[w], -remaining_deg[w], -w))
    return order


def _canon(blocks: tuple) -> tuple:
    relabel = {}
    return tuple(relabel.setdefault(b, len(relabel)) for b in blocks)


def tutte_polynomial_frontier(g: Multigraph) -> TuttePolynomial:
    """Tutte polynomial via ``sum_A (x-1)^(k(A)-1) (y-1)^(|A|-n+k(A))``.

    Vertices are introduced in a greedy order; an edge is decided (in or out
    of A) when its later endpoint is introduced, and a vertex retires once
    all its edges are decided. The state is the partition of the active
    vertices into components of A; the weight is a polynomial in
    (components closed, |A|).
    """
    g.require_connected()
    n = g.vertex_count
    order = _elimination_order(g)
    pos = {v: i for i, v in enumerate(order)}
    loops = [0] * n
    edges_at = defaultdict(list)  # edges decided when their later endpoint arrives
    last_use = [pos[v] for v in range(n)]
    for a, b in g.edges:
        if a == b:
            loops[a] += 1
            continue
        later = a if pos[a] > pos[b] else b
        edges_at[later].append((a, b))
        for x in (a, b):
            last_use[x] = max(last_use[x], pos[later])

    active: list[int] = []
    # state: block label per active vertex -> {(closed_components, |A|): count}
    states: dict[tuple, dict] = {(): {(0, 0): 1}}
    for step, v in enumerate(order):
        # introduce v as its own block
        new_states = {}
        for blocks, poly in states.items():
            key = _canon(blocks + (max(blocks, default=-1) + 1,))
            new_states[key] = poly
        states = new_states
        active.append(v)
        idx = {x: i for i, x in enumerate(active)}
        for a, b in edges_at[v]:
            ia, ib = idx[a], idx[b]
            new_states = defaultdict(dict)
            for blocks, poly in states.items():
                out = new_states[blocks]
                for k, c in poly.items():
                    out[k] = out.get(k, 0) + c
                ba, bb = blocks[ia], blocks[ib]
                merged = _canon(tuple(ba if x == bb else x for x in blocks))
                out = new_states[merged]
                for (kc, m), c in poly.items():
                    out[(kc, m + 1)] = out.get((kc, m + 1), 0) + c
            states = dict(new_states)
        # retire vertices whose edges are all decided
        retire = [i for i, x in enumerate(active) if last_use[x] <= step]
        if retire:
            keep = [i for i in range(len(active)) if i not in retire]
            new_states = defaultdict(dict)
            for blocks, poly in states.items():
                kept_labels = {blocks[i] for i in keep}
                closed = len({blocks[i] for i in retire} - kept_labels)
                key = _canon(tuple(blocks[i] for i in keep))
                out = new_states[key]
                for (kc, m), c in poly.items():
                    out[(kc + closed, m)] = out.get((kc + closed, m), 0) + c
            states = dict(new_states)
            active = [active[i] for i in keep]
    (final,) = states.values()

    # loops: each is independently in or out of A and never changes k(A)
    total_loops = sum(loops)
    coeffs: dict[tuple[int, int], int] = defaultdict(int)
    for (k, m), c in final.items():
        for extra in range(total_loops + 1):
            cc = c * comb(total_loops, extra)
            i_pow = k - 1
            j_pow = m + extra - n + k
            # expand (x-1)^i_pow (y-1)^j_pow
            for s in range(i_pow + 1):
                cs = comb(i_pow, s) * (-1) ** (i_pow - s)
                for t in range(j_pow + 1):
                    coeffs[(s, t)] += cc * cs * comb(j_pow, t) * (-1) ** (j_pow - t)
    return TuttePolynomial.from_dict(coeffs)


def tutte(g: Multigraph) -> TuttePolynomial:
    """Deletion-contraction inside its size guard, the frontier sweep beyond it."""
    if g.edge_count <= DELETION_CONTRACTION_MAX_EDGES:
        return tutte_polynomial(g)
    return tutte_polynomial_frontier(g)
