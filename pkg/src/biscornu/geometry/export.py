"""Wavefront OBJ output for relaxed surfaces."""

from __future__ import annotations

import numpy as np

__all__ = ["emit_obj", "write_obj", "FLOAT_FORMAT"]

FLOAT_FORMAT = "{:.9g}"


def _fmt(x: float) -> str:
    s = FLOAT_FORMAT.format(float(x))
    return "0" if s == "-0" else s


def emit_obj(result) -> str:
    """OBJ text: every sheet's vertices and faces, then the seam as comments.

    Vertices of all sheets are written in sheet order without merging seam
    duplicates, so faces keep their per-sheet connectivity.  The seam
    polyline follows as ``# seam`` / ``# sv x y z`` lines.
    """
    lines = ["# biscornu relaxation", f"# max_edge_strain {_fmt(result.max_edge_strain)}",
             f"# bending_energy {_fmt(result.bending_energy)}"]
    offset = 0
    faces = []
    for k, mesh in enumerate(result.meshes):
        lines.append(f"o sheet{k + 1}")
        for v in np.asarray(mesh.vertices, dtype=float):
            lines.append("v " + " ".join(_fmt(c) for c in v))
        for t in np.asarray(mesh.triangles):
            faces.append(f"f {t[0] + 1 + offset} {t[1] + 1 + offset} {t[2] + 1 + offset}")
        offset += len(mesh.vertices)
    lines.extend(faces)
    lines.append(f"# seam {len(result.seam_curve)}")
    for p in np.asarray(result.seam_curve, dtype=float):
        lines.append("# sv " + " ".join(_fmt(c) for c in p))
    return "\n".join(lines) + "\n"


def write_obj(result, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_obj(result))
