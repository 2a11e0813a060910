"""Rotors and the two supergraphs of the rotor construction.

A rotor ``(R, f, v)`` is a graph with an automorphism ``f`` of order ``n``
whose orbit through ``v`` has ``n`` distinct vertices. Given a back-graph
``S`` and a map ``g`` from that orbit into ``V(S)`` (not necessarily
injective), the two supergraphs attach orbit vertex ``f^i(v)`` to

* twist 0: ``g(f^i(v))``
* twist 1: ``g(f^-i(v))``, i.e. the mirror image of the rotor is attached.

Attaching means identifying the two vertices (``mode="identify"``) or
joining them by a new edge (``mode="edge_join"``).
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from .errors import GuardError, InputError
from .intlinalg import AbelianGroup
from .jacobian import groups_isomorphic, jacobian
from .multigraph import (ISOMORPHISM_MAX_VERTICES, Multigraph, are_isomorphic,
                         format_graph, parse_graph)
from .tuttepoly import polynomials_equal, tutte

MODES = ("identify", "edge_join")


@dataclass(frozen=True)
class Rotor:
    graph: Multigraph
    automorphism: tuple[int, ...]
    base: int
    order: int

    def __post_init__(self):
        object.__setattr__(self, "automorphism", tuple(int(x) for x in self.automorphism))

    def orbit(self) -> list[int]:
        """``[v, f(v), ..., f^(n-1)(v)]``."""
        out, x = [], self.base
        for _ in range(self.order):
            out.append(x)
            x = self.automorphism[x]
        return out


@dataclass(frozen=True)
class Attachment:
    mapping: Mapping[int, int]
    back_graph: Multigraph


@dataclass(frozen=True)
class RotorReport:
    jac_G: AbelianGroup
    jac_H: AbelianGroup
    groups_match: bool
    tutte_match: bool | None = None
    graphs_isomorphic: bool | None = None
    mode: str = "identify"

    def format(self) -> str:
        def tri(x):
            return "skipped" if x is None else str(x).lower()

        human = [
            f"mode: {self.mode}",
            f"Jac(G) = {self.jac_G}",
            f"Jac(H) = {self.jac_H}",
            f"Jacobians {'match' if self.groups_match else 'DIFFER'}",
        ]
        machine = [
            f"mode={self.mode}",
            f"jac_G={self.jac_G}",
            f"jac_H={self.jac_H}",
            f"groups_match={tri(self.groups_match)}",
            f"tutte_match={tri(self.tutte_match)}",
            f"graphs_isomorphic={tri(self.graphs_isomorphic)}",
        ]
        return "\n".join(human + [""] + machine) + "\n"


def rotor_violations(r: Rotor) -> list[str]:
    """Which rotor invariants fail (empty list = valid rotor)."""
    g, f = r.graph, r.automorphism
    n = g.vertex_count
    problems = []
    if sorted(f) != list(range(n)):
        return [f"automorphism is not a permutation of 0..{n - 1}"]
    if g.relabel(f).multiplicities() != g.multiplicities():
        problems.append("permutation does not preserve edge multiplicities")
    if r.order < 1:
        problems.append(f"order {r.order} must be positive")
        return problems
    power = list(range(n))
    period = None
    for k in range(1, r.order + 1):
        power = [f[x] for x in power]
        if power == list(range(n)):
            period = k
            break
    if period != r.order:
        found = "greater than the declared order" if period is None else str(period)
        problems.append(f"automorphism has order {found}, expected {r.order}")
    if not 0 <= r.base < n:
        problems.append(f"base vertex {r.base} out of range")
    elif len(set(r.orbit())) != r.order:
        problems.append(f"orbit of base vertex {r.base} has {len(set(r.orbit()))} "
                        f"distinct vertices, expected {r.order}")
    return problems


def validate_rotor(r: Rotor) -> bool:
    return not rotor_violations(r)


def _check_attachment(r: Rotor, att: Attachment) -> None:
    orbit = r.orbit()
    if set(att.mapping) != set(orbit):
        raise InputError(f"attachment must be defined exactly on the orbit {orbit}")
    for x, y in att.mapping.items():
        if not 0 <= y < att.back_graph.vertex_count:
            raise InputError(f"attachment sends {x} to {y}, not a vertex of the back-graph")


def attachment_targets(r: Rotor, att: Attachment, twist: int) -> list[tuple[int, int]]:
    """(rotor vertex, back-graph vertex) pairs for the given twist."""
    if twist not in (0, 1):
        raise InputError(f"twist must be 0 or 1, got {twist}")
    orbit = r.orbit()
    n = r.order
    return [(orbit[i], att.mapping[orbit[(-i) % n if twist else i]]) for i in range(n)]


def supergraph(r: Rotor, att: Attachment, twist: int = 0, mode: str = "identify") -> Multigraph:
    """Glue the rotor to the back-graph.

    Vertex ids: identify mode keeps rotor ids for rotor vertices and numbers
    the remaining back-graph vertices after them; edge_join mode keeps rotor
    ids and shifts back-graph ids by ``|V(R)|``. Rotor edges come first, then
    back-graph edges, then (edge_join) the new edges in orbit order.
    """
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}, got {mode!r}")
    _check_attachment(r, att)
    R, S = r.graph, att.back_graph
    nr = R.vertex_count
    pairs = attachment_targets(r, att, twist)
    union = R.disjoint_union(S)
    if mode == "edge_join":
        return Multigraph(union.vertex_count,
                          union.edges + tuple((x, y + nr) for x, y in pairs))

    parent = list(range(union.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in pairs:
        rx, ry = find(x), find(y + nr)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    label = {}
    for x in range(union.vertex_count):
        root = find(x)
        if root not in label:
            label[root] = len(label)
    edges = []
    for i, (a, b) in enumerate(union.edges):
        la, lb = label[find(a)], label[find(b)]
        if la == lb:
            raise InputError(f"identification turns edge {i} ({a}, {b}) into a loop")
        edges.append((la, lb))
    return Multigraph(len(label), tuple(edges))


def verify_pair(r: Rotor, att: Attachment, mode: str = "identify", tutte_check: bool = False,
                isomorphism_check: bool = False, twists: tuple[int, int] = (0, 1)) -> RotorReport:
    """Build both supergraphs and compare their Jacobians (and optionally more).

    Isomorphism is only attempted up to the brute-force vertex limit and is
    reported as None beyond it.
    """
    G = supergraph(r, att, twists[0], mode)
    H = supergraph(r, att, twists[1], mode)
    for name, X in (("G", G), ("H", H)):
        if not X.is_connected():
            raise GuardError(f"supergraph {name} is not connected")
    jG, jH = jacobian(G), jacobian(H)
    tutte_match = None
    if tutte_check:
        tutte_match = polynomials_equal(tutte(G), tutte(H))
    iso = None
    if isomorphism_check and G.vertex_count <= ISOMORPHISM_MAX_VERTICES:
        iso = are_isomorphic(G, H)
    return RotorReport(jG, jH, groups_isomorphic(jG, jH), tutte_match, iso, mode)


# -- file formats -------------------------------------------------------------

def parse_rotor(text: str) -> Rotor:
    """Graph lines plus ``auto <images...>``, ``base <v>`` and ``order <n>``."""
    g = parse_graph(text, extra_keys=("auto", "base", "order"))
    fields: dict[str, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens and tokens[0] in ("auto", "base", "order"):
            if tokens[0] in fields:
                raise InputError(f"line {lineno}: duplicate {tokens[0]!r} record")
            try:
                fields[tokens[0]] = [int(t) for t in tokens[1:]]
            except ValueError:
                raise InputError(f"line {lineno}: expected integers") from None
    for key in ("auto", "base", "order"):
        if key not in fields:
            raise InputError(f"rotor file is missing the {key!r} record")
    if len(fields["auto"]) != g.vertex_count:
        raise InputError("'auto' must list one image per vertex")
    if len(fields["base"]) != 1 or len(fields["order"]) != 1:
        raise InputError("'base' and 'order' take a single integer")
    return Rotor(g, tuple(fields["auto"]), fields["base"][0], fields["order"][0])


def format_rotor(r: Rotor) -> str:
    return (format_graph(r.graph)
            + "auto " + " ".join(str(x) for x in r.automorphism) + "\n"
            + f"base {r.base}\norder {r.order}\n")


def parse_attachment(text: str) -> dict[int, int]:
    mapping: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if tokens[0] != "attach" or len(tokens) != 3:
            raise InputError(f"line {lineno}: expected 'attach <orbit-vertex> <S-vertex>'")
        try:
            x, y = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise InputError(f"line {lineno}: expected integers") from None
        if x in mapping:
            raise InputError(f"line {lineno}: vertex {x} attached twice")
        mapping[x] = y
    return mapping


def format_attachment(mapping: Mapping[int, int]) -> str:
    return "".join(f"attach {x} {y}\n" for x, y in mapping.items())


def tutte_rotor() -> Rotor:
    """The bundled order-3 rotor (see ``data/tutte_rotor.rotor``)."""
    text = resources.files("graphjac").joinpath("data/tutte_rotor.rotor").read_text(encoding="utf-8")
    return parse_rotor(text)


def tutte_rotor_coordinates() -> list[tuple[float, float]]:
    """A straight-line plane drawing of the bundled rotor, terminals outermost."""
    import math

    def polar(radius, degrees):
        t = math.radians(degrees)
        return (radius * math.cos(t), radius * math.sin(t))

    # a, b, c at 90, -30, 210 degrees; p, q, r halfway between; t_i inside
    coords = [polar(4, 90), polar(4, -30), polar(4, 210),
              polar(4, 30), polar(4, -90), polar(4, 150),
              polar(2, 60), polar(2, -60), polar(2, 180),
              (0.0, 0.0)]
    return coords
