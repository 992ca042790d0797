"""Boundaries, seam pairings, meshing and relaxation of D-forms and pita-forms."""

from .boundary import (
    Arc, BoundarySpec, Line, Turn, circle, emit_boundary, oval, parse_boundary, perimeter,
    point_at, square, stadium, trisphericon_flat,
)
from .export import emit_obj, write_obj
from .hull import convex_hull_check, hull_distances
from .mesh import TriMesh, triangulate
from .relax import EmbeddingResult, RelaxParams, build_sheets, relax, seam_pairs
from .seam import SeamPairing, antiprism_half_height, biscornu_seam3d, make_dform_pairing, make_pita_pairing

__all__ = [
    "Arc", "BoundarySpec", "Line", "Turn", "circle", "emit_boundary", "oval", "parse_boundary",
    "perimeter", "point_at", "square", "stadium", "trisphericon_flat",
    "emit_obj", "write_obj", "convex_hull_check", "hull_distances", "TriMesh", "triangulate",
    "EmbeddingResult", "RelaxParams", "build_sheets", "relax", "seam_pairs",
    "SeamPairing", "antiprism_half_height", "biscornu_seam3d", "make_dform_pairing", "make_pita_pairing",
]
