"""Drawing cubic graphs with the four basic slopes, and deciding good slope sets."""

from .drawer import SearchExhausted, draw_subcubic, verify_subcubic_contract
from .drawing import Drawing, Report, verify_drawing
from .graph import Graph, encode_graph6, parse_edge_list, parse_graph6
from .pipeline import PipelineTrace, compose_via_m_cut, draw_cubic, place_components
from .slopeset import can_draw_k4, is_affine_image_of_basic, is_good
from .structure import enumerate_cubic_graphs, find_short_supercycle, find_suitable_m_cut, fmax
from .symgeom import BASIC, AffineMap, Point, Slope, SlopeSet, SymScalar

__version__ = "0.1.0"

__all__ = [
    "AffineMap", "BASIC", "Drawing", "Graph", "PipelineTrace", "Point", "Report", "SearchExhausted",
    "Slope", "SlopeSet", "SymScalar", "can_draw_k4", "compose_via_m_cut", "draw_cubic",
    "draw_subcubic", "encode_graph6", "enumerate_cubic_graphs", "find_short_supercycle",
    "find_suitable_m_cut", "fmax", "is_affine_image_of_basic", "is_good", "parse_edge_list",
    "parse_graph6", "place_components", "verify_drawing", "verify_subcubic_contract",
]
