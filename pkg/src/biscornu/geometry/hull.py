"""Containment of a relaxed surface in the convex hull of its seam."""

from __future__ import annotations

import numpy as np
from scipy.spatial import ConvexHull

__all__ = ["convex_hull_check", "hull_distances"]


def _point_triangle_distance(P, A, B, C):
    """Distance from each point in ``P`` (m, 3) to each triangle (t, 3) -> (m, t)."""
    P = P[:, None, :]
    ab, ac = B - A, C - A
    n = np.cross(ab, ac)
    nn = np.einsum("ij,ij->i", n, n)
    ap = P - A
    # barycentric test for the foot of the perpendicular
    t = np.einsum("mtj,tj->mt", ap, n) / nn
    foot = P - t[..., None] * n
    w = foot - A
    d00 = np.einsum("ij,ij->i", ab, ab)
    d01 = np.einsum("ij,ij->i", ab, ac)
    d11 = np.einsum("ij,ij->i", ac, ac)
    d20 = np.einsum("mtj,tj->mt", w, ab)
    d21 = np.einsum("mtj,tj->mt", w, ac)
    den = d00 * d11 - d01 * d01
    v = (d11 * d20 - d01 * d21) / den
    u = (d00 * d21 - d01 * d20) / den
    inside = (v >= 0) & (u >= 0) & (u + v <= 1)
    best = np.where(inside, np.abs(t) * np.sqrt(nn), np.inf)
    for X, Y in ((A, B), (B, C), (C, A)):
        best = np.minimum(best, _point_segment_distance(P, X, Y))
    return best


def _point_segment_distance(P, X, Y):
    d = Y - X
    dd = np.maximum(np.einsum("...j,...j->...", d, d), 1e-300)
    t = np.clip(np.einsum("...j,...j->...", P - X, d) / dd, 0.0, 1.0)
    q = X + t[..., None] * d
    return np.linalg.norm(P - q, axis=-1)


def _polygon_distance(P, hull2):
    """Euclidean distance of 2D points to a convex polygon (0 inside)."""
    eq = hull2.equations
    outside = (P @ eq[:, :2].T + eq[:, 2]).max(axis=1) > 0
    dist = np.zeros(len(P))
    if outside.any():
        V = hull2.points[hull2.vertices]
        W = np.roll(V, -1, axis=0)
        Q = P[outside][:, None, :]
        dist[outside] = _point_segment_distance(Q, V[None], W[None]).min(axis=1)
    return dist


def hull_distances(points, seam) -> np.ndarray:
    """Distance from each point to the convex hull of ``seam`` (0 inside).

    Flat or collinear seams are handled in their affine span, so a flat
    doubled disk is measured against its own planar hull.
    """
    points = np.asarray(points, dtype=float)
    seam = np.asarray(seam, dtype=float)
    centre = seam.mean(axis=0)
    S = seam - centre
    Q = points - centre
    scale = max(float(np.abs(S).max()), 1e-300)
    _, sv, Vt = np.linalg.svd(S, full_matrices=False)
    rank = int((sv > 1e-9 * scale * np.sqrt(len(S))).sum())
    if rank == 3:
        hull = ConvexHull(S)
        plane = (Q @ hull.equations[:, :3].T + hull.equations[:, 3]).max(axis=1)
        dist = np.maximum(plane, 0.0)
        out = plane > 0
        if out.any():
            tri = S[hull.simplices]
            dist[out] = _point_triangle_distance(Q[out], tri[:, 0], tri[:, 1], tri[:, 2]).min(axis=1)
        return dist
    if rank == 2:
        basis = Vt[:2]
        normal = np.cross(basis[0], basis[1])
        hull2 = ConvexHull(S @ basis.T)
        inplane = _polygon_distance(Q @ basis.T, hull2)
        return np.hypot(inplane, Q @ normal)
    if rank == 1:
        axis = Vt[0]
        proj = S @ axis
        lo, hi = centre + proj.min() * axis, centre + proj.max() * axis
        return _point_segment_distance(points, lo, hi)
    return np.linalg.norm(Q, axis=1)


def convex_hull_check(result, epsilon: float) -> float:
    """Fraction of mesh vertices within ``epsilon`` of the seam's convex hull."""
    if epsilon < 0:
        raise ValueError("epsilon must be non-negative")
    seam = np.asarray(result.seam_curve, dtype=float)
    if len(seam) == 0:
        raise ValueError("empty seam curve")
    V = result.vertices
    scale = float(np.abs(seam - seam.mean(0)).max())
    d = hull_distances(V, seam)
    return float((d <= epsilon + 1e-9 * max(scale, 1.0)).mean())
