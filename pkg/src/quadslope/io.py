"""JSON documents holding exact symbolic drawings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .drawing import Drawing
from .graph import Graph
from .symgeom import BASIC, Point, SlopeSet, Slope, SymScalar

FORMAT_VERSION = 1


class DocumentError(ValueError):
    pass


def scalar_to_json(value: SymScalar) -> Dict[str, str]:
    return {str(k): str(q) for k, q in value.terms}


def scalar_from_json(obj: Dict[str, str]) -> SymScalar:
    try:
        return SymScalar({int(k): Fraction(v) for k, v in obj.items()})
    except (ValueError, ZeroDivisionError, AttributeError) as exc:
        raise DocumentError(f"bad symbolic value {obj!r}: {exc}") from None


@dataclass
class DrawingDocument:
    drawing: Drawing
    trace: Optional[Dict[str, Any]] = None
    version: int = FORMAT_VERSION

    @property
    def graph(self) -> Graph:
        return self.drawing.graph

    def to_json(self) -> Dict[str, Any]:
        g = self.drawing.graph
        doc: Dict[str, Any] = {
            "version": self.version,
            "graph": {"n": g.n, "edges": [list(e) for e in g.edges()]},
            "coordinates": [{"x": scalar_to_json(p.x), "y": scalar_to_json(p.y)} for p in self.drawing.pos],
            "slopes": [str(s) for s in self.drawing.slope_set],
        }
        if self.trace is not None:
            doc["trace"] = self.trace
        return doc

    @classmethod
    def from_json(cls, doc: Dict[str, Any]) -> "DrawingDocument":
        if not isinstance(doc, dict):
            raise DocumentError("document must be a JSON object")
        version = doc.get("version")
        if version != FORMAT_VERSION:
            raise DocumentError(f"unsupported document version {version!r}")
        try:
            graph = Graph(doc["graph"]["n"], [tuple(e) for e in doc["graph"]["edges"]])
            pts = [Point(scalar_from_json(c["x"]), scalar_from_json(c["y"])) for c in doc["coordinates"]]
            slopes = SlopeSet(Slope.parse(s) for s in doc.get("slopes", [str(s) for s in BASIC]))
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed document: {exc!r}") from None
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
        if len(pts) != graph.n:
            raise DocumentError(f"{len(pts)} coordinates for {graph.n} vertices")
        return cls(Drawing(graph, pts, slopes), doc.get("trace"), version)

    def dumps(self) -> str:
        # one top-level field per line, values compact
        items = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in self.to_json().items()]
        return "{\n" + ",\n".join(items) + "\n}"

    @classmethod
    def loads(cls, text: str) -> "DrawingDocument":
        try:
            return cls.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, DrawingDocument):
            return NotImplemented
        return self.to_json() == other.to_json()


def dump_documents(docs: List[DrawingDocument]) -> str:
    if len(docs) == 1:
        return docs[0].dumps()
    return "[\n" + ",\n".join(d.dumps() for d in docs) + "\n]"
