"""Planar disk meshes for boundary sheets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import triangle
from matplotlib.path import Path

from .boundary import BoundarySpec

__all__ = ["TriMesh", "triangulate", "mesh_edges", "interior_hinges"]


def mesh_edges(triangles: np.ndarray) -> np.ndarray:
    """Unique undirected edges, sorted."""
    e = np.concatenate([triangles[:, [0, 1]], triangles[:, [1, 2]], triangles[:, [2, 0]]])
    e = np.sort(e, axis=1)
    return np.unique(e, axis=0)


def interior_hinges(triangles: np.ndarray) -> np.ndarray:
    """Hinges ``(left, right, a, b)`` for every edge shared by two triangles.

    ``left`` is the vertex opposite the directed edge ``a -> b`` in the
    triangle where that direction occurs (counterclockwise winding), and
    ``right`` the opposite vertex in the neighbour.
    """
    directed = {}
    for t in triangles:
        for i in range(3):
            a, b, c = int(t[i]), int(t[(i + 1) % 3]), int(t[(i + 2) % 3])
            directed[(a, b)] = c
    hinges = []
    for (a, b), c in directed.items():
        if a < b and (b, a) in directed:
            hinges.append((c, directed[(b, a)], a, b))
    return np.array(hinges, dtype=np.int64).reshape(-1, 4)


@dataclass
class TriMesh:
    """Triangulated sheet.

    ``boundary`` lists the boundary vertex indices in traversal order and
    ``boundary_params`` their arclength positions on the source curve.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    boundary: np.ndarray
    boundary_params: np.ndarray
    perimeter: float
    edges: np.ndarray = field(default=None)
    rest_lengths: np.ndarray = field(default=None)

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float)
        if self.vertices.shape[1] == 2:
            self.vertices = np.column_stack([self.vertices, np.zeros(len(self.vertices))])
        self.triangles = np.asarray(self.triangles, dtype=np.int64)
        self.boundary = np.asarray(self.boundary, dtype=np.int64)
        self.boundary_params = np.asarray(self.boundary_params, dtype=float)
        if self.edges is None:
            self.edges = mesh_edges(self.triangles)
        if self.rest_lengths is None:
            d = self.vertices[self.edges[:, 1]] - self.vertices[self.edges[:, 0]]
            self.rest_lengths = np.linalg.norm(d, axis=1)
        if np.any(self.rest_lengths <= 0):
            raise ValueError("mesh has a zero-length edge")

    @property
    def boundary_map(self) -> dict:
        return {int(v): float(s) for v, s in zip(self.boundary, self.boundary_params)}

    def area(self) -> float:
        v = self.vertices
        t = self.triangles
        cr = np.cross(v[t[:, 1]] - v[t[:, 0]], v[t[:, 2]] - v[t[:, 0]])
        return 0.5 * float(np.linalg.norm(cr, axis=1).sum())

    def boundary_edges(self) -> set:
        count = {}
        for t in self.triangles:
            for i in range(3):
                e = tuple(sorted((int(t[i]), int(t[(i + 1) % 3]))))
                count[e] = count.get(e, 0) + 1
        return {e for e, c in count.items() if c == 1}

    def copy(self) -> "TriMesh":
        return TriMesh(self.vertices.copy(), self.triangles.copy(), self.boundary.copy(),
                       self.boundary_params.copy(), self.perimeter, self.edges.copy(),
                       self.rest_lengths.copy())


def _segment_distances(points, poly):
    a = poly
    b = np.roll(poly, -1, axis=0)
    ab = b - a
    ap = points[:, None, :] - a[None, :, :]
    t = np.clip((ap * ab).sum(-1) / (ab * ab).sum(-1), 0.0, 1.0)
    closest = a[None] + t[..., None] * ab[None]
    return np.linalg.norm(points[:, None, :] - closest, axis=-1).min(axis=1)


def boundary_samples(b: BoundarySpec, target_edge: float, multiple: int = 1, start: float = 0.0) -> np.ndarray:
    P = b.perimeter
    count = max(3, math.ceil(P / target_edge - 1e-9))
    count = multiple * math.ceil(count / multiple)
    return np.mod(start + P * np.arange(count) / count, P)


def _inward_points(b, s, h, count=2):
    P = b.perimeter
    d = 1e-6 * P
    t = b.point_at((s + d) % P) - b.point_at((s - d) % P)
    t /= np.linalg.norm(t)
    inward = np.array([-t[1], t[0]])
    base = b.point_at(s % P)
    return np.array([base + inward * h * (k + 1) for k in range(count)])


def triangulate(b: BoundarySpec, target_edge: float, params=None, multiple: int = 1,
                fold_params=()) -> TriMesh:
    """Constrained Delaunay mesh of the region bounded by ``b``.

    Boundary vertices are placed at ``params`` (arclengths, increasing
    cyclically) or, by default, evenly with spacing at most ``target_edge``
    and a count divisible by ``multiple``.  Interior vertices come from a
    triangular lattice of the same spacing.  For every arclength in
    ``fold_params`` a short row of vertices is placed along the inward
    normal, so the mesh is locally mirror-symmetric about a pita-form fold.
    """
    if not target_edge > 0:
        raise ValueError("target edge must be positive")
    shortest = min(p.arclength for p in b.pieces if p.arclength > 0)
    if target_edge >= shortest:
        raise ValueError(f"target edge {target_edge} not smaller than shortest piece {shortest}")
    if params is None:
        params = boundary_samples(b, target_edge, multiple)
    params = np.asarray(params, dtype=float)
    bpts = b.sample(params)
    if b.area() < 0:
        raise ValueError("boundary must be traversed counterclockwise")

    h = target_edge
    lo, hi = bpts.min(axis=0), bpts.max(axis=0)
    dy = h * math.sqrt(3) / 2
    rows = np.arange(lo[1] + dy / 2, hi[1], dy)
    pts = []
    for i, y in enumerate(rows):
        shift = 0.5 * h * (i % 2)
        xs = np.arange(lo[0] + shift, hi[0] + h, h)
        pts.append(np.column_stack([xs, np.full_like(xs, y)]))
    cand = np.concatenate(pts) if pts else np.zeros((0, 2))
    dense = Path(b.polygon(per_unit=16.0 / h))
    inside = dense.contains_points(cand)
    cand = cand[inside]
    if len(cand):
        cand = cand[_segment_distances(cand, bpts) > 0.6 * h]
    if len(fold_params):
        seeds = np.concatenate([_inward_points(b, f, h) for f in fold_params])
        seeds = seeds[dense.contains_points(seeds)]
        if len(cand):
            near = np.linalg.norm(cand[:, None] - seeds[None], axis=-1).min(axis=1)
            cand = cand[near > 0.8 * h]
        cand = np.concatenate([seeds, cand])
    allpts = np.concatenate([bpts, cand])

    nb = len(bpts)
    loop = np.column_stack([np.arange(nb), (np.arange(nb) + 1) % nb])
    # constrained Delaunay of the boundary loop; "p" also strips concavities
    out = triangle.triangulate({"vertices": allpts, "segments": loop}, "pQ")
    if len(out["vertices"]) != len(allpts):
        raise ValueError("triangulation inserted extra vertices; the boundary may self-intersect")
    tri = np.asarray(out["triangles"], dtype=np.int64)
    # counterclockwise winding
    v = allpts[tri]
    cr = (v[:, 1, 0] - v[:, 0, 0]) * (v[:, 2, 1] - v[:, 0, 1]) - (v[:, 1, 1] - v[:, 0, 1]) * (v[:, 2, 0] - v[:, 0, 0])
    tri[cr < 0] = tri[cr < 0][:, [0, 2, 1]]
    tri = tri[np.abs(cr) > 1e-12 * h * h]

    mesh = TriMesh(allpts, tri, np.arange(nb), params, b.perimeter)
    expected = {tuple(sorted((i, (i + 1) % nb))) for i in range(nb)}
    if mesh.boundary_edges() != expected:
        raise ValueError("triangulation failed to recover the boundary loop; try a smaller target edge")
    return mesh
