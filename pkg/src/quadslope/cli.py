"""Command line interface.

Exit codes: 0 ok, 1 input error, 2 verification failure, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from .drawer import SearchExhausted
from .drawing import verify_drawing
from .fixtures import FIXTURE_NAMES, fixture_drawing
from .graph import Graph, GraphFormatError, parse_edge_list, parse_graph6
from .io import DocumentError, DrawingDocument, dump_documents
from .pipeline import PipelineError, draw_cubic
from .slopeset import can_draw_k4, is_affine_image_of_basic, is_good
from .structure import fmax
from .svg import render_svg
from .symgeom import GeometryError, SlopeSet

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("quadslope")


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def read_graphs(text: str, fmt: str) -> List[Graph]:
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        fmt = "edges" if (" " in first or "\t" in first or first.isdigit()) else "g6"
    if fmt == "g6":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphFormatError("no graph in input")
        return [parse_graph6(ln) for ln in lines]
    return [parse_edge_list(text)]


def cmd_draw(args) -> int:
    graphs = read_graphs(_read(args.input), args.format)
    if args.emit == "svg" and len(graphs) != 1:
        raise InputError("svg output takes exactly one graph")
    docs = []
    for g in graphs:
        try:
            drawing, trace = draw_cubic(g, budget=args.budget, seed=args.seed)
        except AssertionError as exc:
            print(f"verification failed: {exc}", file=sys.stderr)
            return EXIT_INVALID
        rep = verify_drawing(g, drawing)
        if not rep.ok:
            print(f"verification failed:\n{rep}", file=sys.stderr)
            return EXIT_INVALID
        log.info("n=%d branch=%s", g.n, trace.branch)
        docs.append(DrawingDocument(drawing, trace.to_json() if args.trace else None))
    if args.emit == "svg":
        _write(args.out, render_svg(docs[0].drawing))
    else:
        _write(args.out, dump_documents(docs) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = DrawingDocument.loads(_read(args.drawing))
    if args.graph is not None:
        g = read_graphs(_read(args.graph), args.format)[0]
        if g != doc.graph:
            raise InputError("graph file and drawing document describe different graphs")
    else:
        g = doc.graph
    slopes = SlopeSet.parse(args.slopes)
    rep = verify_drawing(g, doc.drawing, slopes)
    print(rep)
    return EXIT_OK if rep.ok else EXIT_INVALID


def _parse_range(text: str) -> range:
    try:
        start, end, step = (int(t) for t in text.split(":"))
    except ValueError:
        raise InputError(f"bad range {text!r}; expected START:END:STEP") from None
    if step <= 0 or start < 4 or end < start:
        raise InputError(f"bad range {text!r}")
    return range(start, end + 1, step)


def cmd_bounds(args) -> int:
    for n in _parse_range(args.n_range):
        print(fmax(n))
    return EXIT_OK


def cmd_slopes(args) -> int:
    s = SlopeSet.parse(args.set)
    if len(s) != 4:
        raise InputError(f"need four slopes, got {len(s)}")
    if not is_good(s):
        print("not good")
        return EXIT_OK
    print("good")
    m = is_affine_image_of_basic(s).witness
    print("matrix: " + " ".join(str(e) for row in m.matrix for e in row))
    for v, p in enumerate(can_draw_k4(s).witness.pos):
        print(f"{v} {p.x} {p.y}")
    return EXIT_OK


def cmd_fixture(args) -> int:
    _write(args.out, DrawingDocument(fixture_drawing(args.name)).dumps() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadslope", description="Cubic graph drawings with four slopes.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("draw", help="draw a cubic graph with the basic slopes")
    p.add_argument("--in", dest="input", default="-", metavar="PATH")
    p.add_argument("--format", choices=("g6", "edges", "auto"), default="auto")
    p.add_argument("--out", default=None, metavar="PATH")
    p.add_argument("--emit", choices=("json", "svg"), default="json")
    p.add_argument("--trace", action="store_true", help="include the dispatch trace")
    p.add_argument("--budget", type=int, default=None, help="search node budget per call")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("verify", help="check a drawing document")
    p.add_argument("--graph", default=None, metavar="PATH")
    p.add_argument("--format", choices=("g6", "edges", "auto"), default="auto")
    p.add_argument("--drawing", required=True, metavar="PATH")
    p.add_argument("--slopes", default="basic")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="print [N, 2s-2, mg, g] rows")
    p.add_argument("--n-range", required=True, metavar="START:END:STEP")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("slopes", help="decide whether four slopes are good")
    p.add_argument("--set", required=True, metavar="A,B,C,D")
    p.set_defaults(func=cmd_slopes)

    p = sub.add_parser("fixture", help="export a stored reference drawing")
    p.add_argument("name", choices=FIXTURE_NAMES)
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=cmd_fixture)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except SearchExhausted as exc:
        print(f"search budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, GraphFormatError, DocumentError, PipelineError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
