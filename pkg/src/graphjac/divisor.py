"""Chip-firing on divisors: lending/borrowing moves, equivalence, q-reduced forms.

A divisor is a plain tuple of integers indexed by vertex id; the host graph
is passed to every call.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import InputError
from .intlinalg import in_image
from .jacobian import laplacian
from .multigraph import Multigraph

Divisor = tuple[int, ...]


def _check(g: Multigraph, D: Sequence[int]) -> None:
    if len(D) != g.vertex_count:
        raise InputError(f"divisor has {len(D)} entries, graph has {g.vertex_count} vertices")


def degree(D: Sequence[int]) -> int:
    return sum(D)


def fire_set(g: Multigraph, D: Sequence[int], vertices, times: int = 1) -> Divisor:
    """Every vertex in ``vertices`` lends ``times`` times (negative = borrows)."""
    _check(g, D)
    inside = set(vertices)
    out = list(D)
    for u, v in g.edges:
        if (u in inside) != (v in inside):
            src, dst = (u, v) if u in inside else (v, u)
            out[src] -= times
            out[dst] += times
    return tuple(out)


def lend(g: Multigraph, D: Sequence[int], v: int) -> Divisor:
    """``v`` sends one chip along each incident edge."""
    if not 0 <= v < g.vertex_count:
        raise InputError(f"vertex {v} out of range")
    return fire_set(g, D, [v])


def borrow(g: Multigraph, D: Sequence[int], v: int) -> Divisor:
    """``v`` receives one chip along each incident edge."""
    if not 0 <= v < g.vertex_count:
        raise InputError(f"vertex {v} out of range")
    return fire_set(g, D, [v], times=-1)


def apply_script(g: Multigraph, D: Sequence[int], script: Sequence[int]) -> Divisor:
    """Vertex ``v`` lends ``script[v]`` times: ``D - L script``."""
    _check(g, D)
    Ls = laplacian(g).apply(script)
    return tuple(d - x for d, x in zip(D, Ls))


def linearly_equivalent(g: Multigraph, D1: Sequence[int], D2: Sequence[int]) -> bool:
    _check(g, D1)
    _check(g, D2)
    if degree(D1) != degree(D2):
        return False
    diff = [a - b for a, b in zip(D1, D2)]
    return in_image(laplacian(g), diff)


def _distances(g: Multigraph, q: int) -> list[int]:
    adj = g.adjacency()
    dist = [-1] * g.vertex_count
    dist[q] = 0
    queue = deque([q])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _make_nonnegative_off(g: Multigraph, D: Sequence[int], q: int) -> Divisor:
    # Work inward from the farthest layer: firing the ball of radius r-1 around
    # q only moves chips across its boundary, so layer r gains chips and the
    # layers beyond r are untouched.
    dist = _distances(g, q)
    D = tuple(D)
    for r in range(max(dist), 0, -1):
        ball = [v for v in range(g.vertex_count) if dist[v] < r]
        layer = [v for v in range(g.vertex_count) if dist[v] == r]
        gain = fire_set(g, [0] * g.vertex_count, ball)
        need = max((-(D[v] // gain[v]) if D[v] < 0 else 0) for v in layer)
        # every layer-r vertex has a neighbor in the ball, so gain[v] >= 1
        if need:
            D = fire_set(g, D, ball, need)
    return D


def dhar_burn(g: Multigraph, D: Sequence[int], q: int) -> set[int]:
    """Run Dhar's burning process from ``q``; return the set of unburnt vertices."""
    adj = g.adjacency()
    burnt = {q}
    pressure = [0] * g.vertex_count
    for y, mult in adj[q].items():
        pressure[y] += mult
    frontier = [y for y in adj[q] if y != q]
    while frontier:
        nxt = []
        for v in frontier:
            if v in burnt or D[v] >= pressure[v]:
                continue
            burnt.add(v)
            for y, mult in adj[v].items():
                if y not in burnt:
                    pressure[y] += mult
                    nxt.append(y)
        frontier = nxt
    return set(range(g.vertex_count)) - burnt


def is_q_reduced(g: Multigraph, D: Sequence[int], q: int) -> bool:
    _check(g, D)
    if any(D[v] < 0 for v in range(g.vertex_count) if v != q):
        return False
    return not dhar_burn(g, D, q)


def q_reduce(g: Multigraph, D: Sequence[int], q: int = 0) -> Divisor:
    """The unique q-reduced divisor linearly equivalent to ``D``."""
    _check(g, D)
    if not 0 <= q < g.vertex_count:
        raise InputError(f"vertex {q} out of range")
    g.require_connected()
    D = _make_nonnegative_off(g, D, q)
    while True:
        unburnt = dhar_burn(g, D, q)
        if not unburnt:
            return D
        # firing the unburnt set keeps every vertex off q nonnegative
        D = fire_set(g, D, unburnt)


def is_winnable(g: Multigraph, D: Sequence[int]) -> bool:
    """True iff ``D`` is equivalent to a divisor with no negative entry."""
    return q_reduce(g, D, 0)[0] >= 0


def parse_divisor(text: str) -> Divisor:
    tokens = []
    for raw in text.splitlines():
        tokens += raw.split("#", 1)[0].split()
    try:
        return tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise InputError(f"divisor file contains a non-integer token: {exc}") from None


def format_divisor(D: Sequence[int]) -> str:
    return " ".join(str(x) for x in D) + "\n"
