"""Command-line entry point: ``graphjac <command> ...``.

Exit status: 0 on success, 1 for unreadable or malformed input, 2 when a
computation guard refuses (disconnected graph, size guard, Euler failure).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .divisor import format_divisor, is_winnable, parse_divisor, q_reduce
from .errors import GuardError, InputError
from .gluing import FAMILIES, parse_family
from .intlinalg import parse_matrix, smith_normal_form
from .jacobian import jacobian, picard
from .multigraph import format_graph, parse_graph
from .planar import dual_graph, format_faces, jacobian_via_faces, parse_embedding
from .rotor import Attachment, parse_attachment, parse_rotor, tutte_rotor, verify_pair
from .tuttepoly import tutte

FORMATS = """\
file formats (UTF-8 text, '#' starts a comment):
  graph      'n <vertex_count>' then one 'e <u> <v>' line per edge, in edge-id order
  matrix     first line 'rows cols', then whitespace-separated integer rows
  embedding  graph lines, then 'rot <v> <edge>:<end> ...' per vertex (cyclic order;
             dart <edge>:0 leaves the edge's first endpoint), optional 'outer <face>'
  divisor    whitespace-separated integers, one per vertex in id order
  rotor      graph lines plus 'auto <image of 0> <image of 1> ...', 'base <v>', 'order <n>'
  attachment one 'attach <orbit-vertex> <S-vertex>' line per orbit vertex
groups print as 'trivial' or 'Z/d1 x Z/d2 x ... x Z^r' with d1 | d2 | ...
"""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _cmd_jac(args, out: TextIO) -> None:
    # loops never change the Jacobian, so dual graphs can be fed straight back
    g = parse_graph(_read(args.graph), allows_loops=True)
    if args.faces:
        if args.embedding is None:
            raise InputError("--faces needs an embedding file after the graph file")
        emb = parse_embedding(_read(args.embedding))
        if emb.graph.vertex_count != g.vertex_count or emb.graph.edges != g.edges:
            raise InputError("embedding describes a different graph")
        out.write(f"{jacobian_via_faces(emb)}\n")
    elif args.picard:
        out.write(f"{picard(g)}\n")
    elif args.embedding is not None:
        raise InputError("an embedding file is only read with --faces")
    else:
        out.write(f"{jacobian(g, args.removed)}\n")


def _cmd_snf(args, out: TextIO) -> None:
    diag = smith_normal_form(parse_matrix(_read(args.matrix)))
    out.write(" ".join(str(d) for d in diag) + "\n")


def _cmd_faces(args, out: TextIO) -> None:
    emb = parse_embedding(_read(args.embedding))
    if args.outer is not None:
        emb = emb.with_outer(args.outer)
    out.write(format_faces(emb))


def _cmd_dual(args, out: TextIO) -> None:
    dual, _ = dual_graph(parse_embedding(_read(args.embedding)))
    out.write(format_graph(dual))


def _cmd_glue(args, out: TextIO) -> None:
    spec = parse_family(args.family, args.params)
    if args.emit in ("graph", "both"):
        out.write(format_graph(spec.build()))
    if args.emit in ("group", "both"):
        out.write(f"{spec.formula_group()}\n")


def _cmd_chip(args, out: TextIO) -> None:
    g = parse_graph(_read(args.graph))
    D = parse_divisor(_read(args.divisor))
    if args.action == "reduce":
        out.write(format_divisor(q_reduce(g, D, args.q)))
    else:
        out.write("winnable\n" if is_winnable(g, D) else "not winnable\n")


def _cmd_rotor(args, out: TextIO) -> None:
    rotor = tutte_rotor() if args.rotor == "bundled" else parse_rotor(_read(args.rotor))
    S = parse_graph(_read(args.back_graph))
    att = Attachment(parse_attachment(_read(args.attachment)), S)
    mode = args.mode.replace("-", "_")
    report = verify_pair(rotor, att, mode, tutte_check=args.tutte, isomorphism_check=args.iso)
    out.write(report.format())


def _cmd_tutte(args, out: TextIO) -> None:
    g = parse_graph(_read(args.graph), allows_loops=True)
    out.write(tutte(g).format_lines())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphjac",
        description="Exact Jacobians (critical groups) of multigraphs.",
        epilog=FORMATS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("jac", help="Jacobian of a graph",
                       usage="graphjac jac [--faces] graph [embedding] [--removed V] [--picard]",
                       epilog=FORMATS,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("graph")
    p.add_argument("embedding", nargs="?", help="plane embedding of the same graph (with --faces)")
    p.add_argument("--faces", action="store_true",
                   help="compute from the face-cycle matrix of the given embedding")
    p.add_argument("--removed", type=int, default=0, help="vertex deleted from the Laplacian")
    p.add_argument("--picard", action="store_true", help="print the Picard group instead")
    p.set_defaults(run=_cmd_jac)

    p = sub.add_parser("snf", help="Smith normal form diagonal of an integer matrix")
    p.add_argument("matrix")
    p.set_defaults(run=_cmd_snf)

    p = sub.add_parser("faces", help="trace the faces of a plane embedding")
    p.add_argument("embedding")
    p.add_argument("--outer", type=int, help="override the outer face index")
    p.set_defaults(run=_cmd_faces)

    p = sub.add_parser("dual", help="dual multigraph of a plane embedding")
    p.add_argument("embedding")
    p.set_defaults(run=_cmd_dual)

    p = sub.add_parser("glue", help="build a glued family and/or print its closed-form group",
                       description="families: " + ", ".join(FAMILIES)
                       + "; vertex_glue takes <graph1> <v1> <graph2> <v2>")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*")
    p.add_argument("--emit", choices=("graph", "group", "both"), default="group")
    p.set_defaults(run=_cmd_glue)

    p = sub.add_parser("chip", help="chip-firing: q-reduce a divisor or test winnability")
    p.add_argument("action", choices=("reduce", "winnable"))
    p.add_argument("graph")
    p.add_argument("divisor")
    p.add_argument("--q", type=int, default=0, help="base vertex for reduce")
    p.set_defaults(run=_cmd_chip)

    p = sub.add_parser("rotor", help="rotor construction checks")
    p.add_argument("action", choices=("verify",))
    p.add_argument("rotor", help="rotor file, or 'bundled' for the shipped order-3 rotor")
    p.add_argument("back_graph")
    p.add_argument("attachment")
    p.add_argument("--mode", choices=("identify", "edge-join"), default="identify")
    p.add_argument("--tutte", action="store_true", help="also compare Tutte polynomials")
    p.add_argument("--iso", action="store_true", help="also test isomorphism (small graphs)")
    p.set_defaults(run=_cmd_rotor)

    p = sub.add_parser("tutte", help="Tutte polynomial as 'i j c' lines")
    p.add_argument("graph")
    p.set_defaults(run=_cmd_tutte)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        args.run(args, out)
    except GuardError as exc:
        err.write(f"graphjac: {exc}\n")
        return 2
    except InputError as exc:
        err.write(f"graphjac: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
