"""Combinatorial plane embeddings (rotation systems), faces, duals and face-cycle matrices.

A dart is an edge end: ``(e, 0)`` leaves ``edges[e][0]`` towards ``edges[e][1]``
and ``(e, 1)`` goes the other way. A rotation system lists, for every vertex,
the darts leaving it in cyclic order. Faces are the orbits of

    next(d) = successor of twin(d) in the rotation at head(d),

so every dart lies on exactly one face and each face orbit carries its own
direction of traversal. Two faces sharing an edge traverse it in opposite
directions, which is what makes the signed face/edge incidence matrix
reproduce the face-cycle matrix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import GuardError, InputError
from .intlinalg import AbelianGroup, IntMatrix, cokernel_group
from .multigraph import Multigraph, format_graph, parse_graph

Dart = tuple[int, int]


def twin(d: Dart) -> Dart:
    return (d[0], 1 - d[1])


def tail(g: Multigraph, d: Dart) -> int:
    return g.edges[d[0]][d[1]]


def head(g: Multigraph, d: Dart) -> int:
    return g.edges[d[0]][1 - d[1]]


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[Dart, ...], ...]
    face_of: dict = field(compare=False, repr=False)

    @property
    def lengths(self) -> list[int]:
        return [len(f) for f in self.faces]

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class PlanarEmbedding:
    graph: Multigraph
    rotations: tuple[tuple[Dart, ...], ...]
    outer: int | None = None

    def __post_init__(self):
        g = self.graph
        rot = tuple(tuple((int(e), int(s)) for e, s in r) for r in self.rotations)
        object.__setattr__(self, "rotations", rot)
        if len(rot) != g.vertex_count:
            raise InputError(f"rotation system has {len(rot)} vertices, graph has {g.vertex_count}")
        seen = set()
        for v, darts in enumerate(rot):
            for d in darts:
                e, s = d
                if not 0 <= e < g.edge_count or s not in (0, 1):
                    raise InputError(f"rotation at {v} names an invalid dart {e}:{s}")
                if tail(g, d) != v:
                    raise InputError(f"dart {e}:{s} does not leave vertex {v}")
                if d in seen:
                    raise InputError(f"dart {e}:{s} appears twice in the rotation system")
                seen.add(d)
        if len(seen) != 2 * g.edge_count:
            raise InputError("rotation system does not list every dart")

    def successor(self) -> dict[Dart, Dart]:
        """Rotation successor of each dart around its tail."""
        succ = {}
        for darts in self.rotations:
            for i, d in enumerate(darts):
                succ[d] = darts[(i + 1) % len(darts)]
        return succ

    def with_outer(self, outer: int | None) -> "PlanarEmbedding":
        return PlanarEmbedding(self.graph, self.rotations, outer)


def trace_faces(emb: PlanarEmbedding, check_euler: bool = True) -> FaceSet:
    """Face orbits in discovery order (darts scanned by edge id, then end).

    Raises :class:`GuardError` when the graph is disconnected or
    V - E + F != 2, i.e. the rotation system is not a plane embedding.
    """
    g = emb.graph
    succ = emb.successor()
    face_of = {}
    faces = []
    for e in range(g.edge_count):
        for s in (0, 1):
            start = (e, s)
            if start in face_of:
                continue
            orbit = []
            d = start
            while d not in face_of:
                face_of[d] = len(faces)
                orbit.append(d)
                d = succ[twin(d)]
            faces.append(tuple(orbit))
    if g.edge_count == 0:
        faces = [()]
    if check_euler:
        if not g.is_connected():
            raise GuardError("plane embeddings are only supported for connected graphs")
        if g.vertex_count - g.edge_count + len(faces) != 2:
            raise GuardError(
                f"Euler check failed: V - E + F = {g.vertex_count} - {g.edge_count} + "
                f"{len(faces)} (not a plane embedding)")
    return FaceSet(tuple(faces), face_of)


def outer_face(emb: PlanarEmbedding, faces: FaceSet | None = None) -> int:
    """Designated outer face, defaulting to the longest (lowest index on ties)."""
    faces = trace_faces(emb) if faces is None else faces
    if emb.outer is not None:
        if not 0 <= emb.outer < len(faces):
            raise InputError(f"outer face {emb.outer} out of range 0..{len(faces) - 1}")
        return emb.outer
    lengths = faces.lengths
    return max(range(len(lengths)), key=lambda i: (lengths[i], -i))


def dual_graph(emb: PlanarEmbedding) -> tuple[Multigraph, list[int]]:
    """Dual multigraph (loop mode) and, per primal edge, the dual edge id.

    Dual vertex i is face i; dual edge e joins the faces on the two sides of
    primal edge e, so bridges become loops.
    """
    faces = trace_faces(emb)
    edges = tuple((faces.face_of[(e, 0)], faces.face_of[(e, 1)])
                  for e in range(emb.graph.edge_count))
    return Multigraph(len(faces), edges, allows_loops=True), list(range(len(edges)))


def inner_faces(emb: PlanarEmbedding, faces: FaceSet | None = None) -> list[int]:
    faces = trace_faces(emb) if faces is None else faces
    out = outer_face(emb, faces)
    return [i for i in range(len(faces)) if i != out]


def face_incidence_matrix(emb: PlanarEmbedding) -> IntMatrix:
    """Signed inner-face/edge incidence B_f (rows: inner faces, columns: edges).

    Entry +1 when the face traverses the edge from its first to its second
    endpoint, -1 for the opposite direction, 0 when the edge is not on the
    face or the face runs along both of its sides.
    """
    g = emb.graph
    faces = trace_faces(emb)
    rows = []
    for i in inner_faces(emb, faces):
        row = [0] * g.edge_count
        for e, s in faces.faces[i]:
            row[e] += 1 if s == 0 else -1
        rows.append(row)
    return IntMatrix.from_rows(rows, g.edge_count)


def face_cycle_matrix(emb: PlanarEmbedding, check: bool = True) -> IntMatrix:
    """g x g matrix over inner faces: diagonal = edges bordering the face and
    another face, off-diagonal = minus the number of shared edges.

    With ``check`` (default) the entry formula is compared against the
    product ``B_f B_f^T`` of the signed incidence matrix and a mismatch raises.
    """
    g = emb.graph
    g.require_connected()
    faces = trace_faces(emb)
    inner = inner_faces(emb, faces)
    index = {f: k for k, f in enumerate(inner)}
    k = len(inner)
    B = [[0] * k for _ in range(k)]
    for e in range(g.edge_count):
        f0, f1 = faces.face_of[(e, 0)], faces.face_of[(e, 1)]
        if f0 == f1:
            continue
        for f in (f0, f1):
            if f in index:
                B[index[f]][index[f]] += 1
        if f0 in index and f1 in index:
            B[index[f0]][index[f1]] -= 1
            B[index[f1]][index[f0]] -= 1
    result = IntMatrix.from_rows(B, k)
    if check:
        Bf = face_incidence_matrix(emb)
        if Bf @ Bf.T != result:
            raise GuardError("face-cycle matrix disagrees with B_f B_f^T")
    return result


def jacobian_via_faces(emb: PlanarEmbedding) -> AbelianGroup:
    return cokernel_group(face_cycle_matrix(emb))


# -- building embeddings ------------------------------------------------------

def embedding_from_coordinates(g: Multigraph, coords: Sequence[tuple[float, float]],
                               outer: int | None = None) -> PlanarEmbedding:
    """Rotation system of a straight-line drawing (counterclockwise order).

    Parallel edges share a direction; they are drawn as a thin lens, ordered
    by increasing edge id around the smaller endpoint and decreasing id around
    the larger one. Loops are not supported.
    """
    if len(coords) != g.vertex_count:
        raise InputError("one coordinate pair per vertex is required")
    around: list[list] = [[] for _ in range(g.vertex_count)]
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            raise InputError("embedding_from_coordinates cannot place loops")
        for s, (a, b) in enumerate(((u, v), (v, u))):
            angle = math.atan2(coords[b][1] - coords[a][1], coords[b][0] - coords[a][0])
            tie = e if a < b else -e
            around[a].append((angle, tie, (e, s)))
    rotations = tuple(tuple(d for _, _, d in sorted(r)) for r in around)
    return PlanarEmbedding(g, rotations, outer)


def circle_coordinates(n: int) -> list[tuple[float, float]]:
    return [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)]


def cycle_embedding(n: int) -> PlanarEmbedding:
    from .multigraph import cycle_graph
    return embedding_from_coordinates(cycle_graph(n), circle_coordinates(n))


# -- text format --------------------------------------------------------------

def parse_embedding(text: str) -> PlanarEmbedding:
    """Graph lines, then ``rot <v> <edge>:<end> ...`` per vertex, optional ``outer <face>``."""
    g = parse_graph(text, extra_keys=("rot", "outer"))
    rotations: list[tuple[Dart, ...] | None] = [None] * g.vertex_count
    outer = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        try:
            if tokens[0] == "rot":
                v = int(tokens[1])
                if not 0 <= v < g.vertex_count:
                    raise InputError(f"line {lineno}: vertex {v} out of range")
                if rotations[v] is not None:
                    raise InputError(f"line {lineno}: duplicate rotation for vertex {v}")
                darts = []
                for tok in tokens[2:]:
                    e, s = tok.split(":")
                    darts.append((int(e), int(s)))
                rotations[v] = tuple(darts)
            elif tokens[0] == "outer":
                if outer is not None or len(tokens) != 2:
                    raise InputError(f"line {lineno}: malformed 'outer' record")
                outer = int(tokens[1])
        except (ValueError, IndexError):
            raise InputError(f"line {lineno}: malformed record {raw.strip()!r}") from None
    rotations = [r if r is not None else () for r in rotations]
    return PlanarEmbedding(g, tuple(rotations), outer)


def format_embedding(emb: PlanarEmbedding) -> str:
    lines = [format_graph(emb.graph).rstrip("\n")]
    for v, darts in enumerate(emb.rotations):
        lines.append(" ".join([f"rot {v}"] + [f"{e}:{s}" for e, s in darts]))
    if emb.outer is not None:
        lines.append(f"outer {emb.outer}")
    return "\n".join(lines) + "\n"


def format_faces(emb: PlanarEmbedding) -> str:
    """One line per face: index, length, darts; the outer face is marked."""
    faces = trace_faces(emb)
    out = outer_face(emb, faces)
    lines = []
    for i, f in enumerate(faces.faces):
        mark = " outer" if i == out else ""
        darts = " ".join(f"{e}:{s}" for e, s in f)
        lines.append(f"face {i} len {len(f)}{mark}: {darts}".rstrip())
    return "\n".join(lines) + "\n"
