"""Seam-gluing relaxation of inextensible sheets.

The sheets start flat (the second one mirrored onto the first so the
seam partners roughly face each other), slightly separated in ``z`` with
a seeded random perturbation.  A sequence of stages then minimises

    bending + k_len * strain + k_seam * seam_gap

with a growing seam stiffness, each stage followed by edge-length
projection sweeps.  Finally paired seam vertices are merged into single
vertices and the glued surface is relaxed once more, bending plus strain
only.  All lengths are scaled by the mean rest edge length internally.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .energy import bending_energy, edge_strains, scatter_add, strain_energy
from .mesh import boundary_samples, interior_hinges, triangulate
from .seam import SeamPairing

__all__ = ["RelaxParams", "EmbeddingResult", "relax", "seam_pairs", "project_edges", "build_sheets"]

log = logging.getLogger(__name__)


@dataclass
class RelaxParams:
    iterations: int = 8000
    step_size: float = 0.5  # fraction of the length error removed per projection sweep
    length_tolerance: float = 0.01
    perturbation_seed: int = 0
    stages: int = 6
    seam_stiffness: tuple = (0.05, 50.0)
    length_stiffness: float = 2000.0
    final_length_stiffness: float = 20000.0
    lift: float = 1.5  # initial half-separation, multiple of the RMS in-plane seam mismatch
    perturbation: float = 0.05  # random z noise, in edge lengths
    projection_sweeps: int = 30
    pita_curl: float = 90.0  # initial wrap angle of a pita sheet about its fold axis, degrees

    def __post_init__(self):
        if self.iterations <= 0 or self.stages <= 0:
            raise ValueError("iterations and stages must be positive")
        if not 0 < self.step_size <= 1:
            raise ValueError("step_size must lie in (0, 1]")
        if not self.length_tolerance > 0:
            raise ValueError("length tolerance must be positive")


@dataclass
class EmbeddingResult:
    meshes: list
    seam_curve: np.ndarray
    max_edge_strain: float
    bending_energy: float
    converged: bool
    max_seam_gap: float
    history: dict = field(default_factory=dict)

    @property
    def vertices(self) -> np.ndarray:
        return np.concatenate([m.vertices for m in self.meshes])


def build_sheets(boundaries, pairing: SeamPairing, target_edge: float, multiple: int = 1) -> list:
    """Meshes whose boundary vertices sit exactly at seam-partner arclengths."""
    boundaries = list(boundaries)
    if pairing.mode == "dform":
        b1, b2 = boundaries
        s1 = boundary_samples(b1, target_edge, multiple)
        s2 = np.sort(pairing.partner(s1))
        return [triangulate(b1, target_edge, s1), triangulate(b2, target_edge, s2)]
    (b,) = boundaries
    s = boundary_samples(b, target_edge, 2 * multiple)
    s = np.sort(np.mod(s + pairing.fold, pairing.perimeter))
    return [triangulate(b, target_edge, s, fold_params=pairing.fixed_points())]


def seam_pairs(sheets, pairing: SeamPairing, rtol: float = 1e-6):
    """Global vertex index pairs glued by ``pairing``.

    Indices refer to the concatenation of the sheets' vertex arrays.  Each
    pair appears once; pita-form fixed points are omitted.
    """
    P = pairing.perimeter
    tol = rtol * P + 1e-12
    offsets = np.cumsum([0] + [len(m.vertices) for m in sheets])
    src = sheets[0]
    dst_idx = 1 if pairing.mode == "dform" else 0
    dst = sheets[dst_idx]
    if pairing.mode == "dform" and len(sheets) != 2:
        raise ValueError("a D-form pairing needs exactly two sheets")
    if pairing.mode == "pita" and len(sheets) != 1:
        raise ValueError("a pita-form pairing needs exactly one sheet")
    for m in sheets:
        if abs(m.perimeter - P) > 1e-6 * P:
            raise ValueError("sheet perimeter does not match the pairing")
    order = np.argsort(dst.boundary_params)
    sorted_params = dst.boundary_params[order]
    pairs = []
    seen = set()
    for v, s in zip(src.boundary, src.boundary_params):
        target = float(pairing.partner(s))
        k = np.searchsorted(sorted_params, target)
        best = None
        for cand in (k - 1, k, k + 1, 0, len(sorted_params) - 1):
            if 0 <= cand < len(sorted_params):
                gap = abs(sorted_params[cand] - target)
                gap = min(gap, P - gap)
                if gap <= tol:
                    best = order[cand]
                    break
        if best is None:
            raise ValueError(f"no boundary vertex at partner arclength {target:.9g} of {s:.9g}")
        a = int(offsets[0] + v)
        b = int(offsets[dst_idx] + dst.boundary[best])
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return np.array(pairs, dtype=np.int64).reshape(-1, 2)


def project_edges(X, edges, rest, sweeps, step, pinned_groups=None):
    """Jacobi edge-length projection; returns the projected copy."""
    X = X.copy()
    deg = np.bincount(edges.ravel(), minlength=len(X)).astype(float)
    deg[deg == 0] = 1.0
    for _ in range(sweeps):
        d = X[edges[:, 1]] - X[edges[:, 0]]
        L = np.linalg.norm(d, axis=1)
        corr = (0.5 * step * (L - rest) / L)[:, None] * d
        delta = scatter_add(len(X), edges.T.ravel(), np.concatenate([corr, -corr]))
        X += delta / deg[:, None]
    return X


def _project_to_bound(X, edges, rest, params, bound, max_rounds=20):
    """Projection sweeps, repeated until the strain is back under ``bound``.

    When the sweeps stall, the pure strain energy is minimised from the
    current iterate before sweeping again.
    """
    def strain_only(flat):
        e, g = strain_energy(flat.reshape(-1, 3), edges, rest, grad=True)
        return e, g.ravel()

    for rnd in range(max_rounds):
        X = project_edges(X, edges, rest, params.projection_sweeps, params.step_size)
        strain = float(np.abs(edge_strains(X, edges, rest)).max())
        if strain <= bound:
            break
        if rnd % 5 == 4:
            res = minimize(strain_only, X.ravel(), jac=True, method="L-BFGS-B",
                           options={"maxiter": 200, "ftol": 1e-20, "gtol": 1e-14})
            X = res.x.reshape(-1, 3)
    return X, strain


def _place_second_sheet(P1, P2):
    """Proper rigid motion taking mirrored sheet-2 seam points onto sheet-1 ones."""
    a = P2 - P2.mean(0)
    b = P1 - P1.mean(0)
    U, _, Vt = np.linalg.svd(a.T @ b)
    D = np.diag([1.0, np.sign(np.linalg.det(U @ Vt))])
    rot = U @ D @ Vt
    return rot, P1.mean(0) - P2.mean(0) @ rot


def _initial_positions(sheets, pairing, params, pairs, scale):
    rng = np.random.default_rng(params.perturbation_seed)
    flat1 = sheets[0].vertices[:, :2].copy()
    if pairing.mode == "dform":
        n1 = len(sheets[0].vertices)
        flat2 = sheets[1].vertices[:, :2] * np.array([1.0, -1.0])
        rot, t = _place_second_sheet(flat1[pairs[:, 0]], flat2[pairs[:, 1] - n1])
        flat2 = flat2 @ rot + t
        mismatch = flat1[pairs[:, 0]] - flat2[pairs[:, 1] - n1]
        lift = params.lift * float(np.sqrt((mismatch ** 2).sum(1).mean()))
        X = np.concatenate([
            np.column_stack([flat1, np.full(len(flat1), lift)]),
            np.column_stack([flat2, np.full(len(flat2), -lift)]),
        ])
    else:
        X = _wrap_about_fold(sheets[0], pairing, params.pita_curl)
    X[:, 2] += params.perturbation * scale * rng.standard_normal(len(X))
    return X


def _wrap_about_fold(mesh, pairing, curl_deg):
    """Isometric cylindrical wrap of a flat sheet about the line through its seam fixed points."""
    flat = mesh.vertices[:, :2]
    P = pairing.perimeter
    bp = mesh.boundary_params
    f0, f1 = pairing.fixed_points()

    def nearest(s):
        d = np.abs(bp - s)
        return flat[mesh.boundary[np.argmin(np.minimum(d, P - d))]]

    a, b = nearest(f0), nearest(f1)
    axis = (b - a) / np.linalg.norm(b - a)
    normal = np.array([-axis[1], axis[0]])
    rel = flat - a
    along = rel @ axis
    across = rel @ normal
    dmax = np.abs(across).max()
    if curl_deg <= 0 or dmax == 0:
        return np.column_stack([flat, np.zeros(len(flat))])
    rho = dmax / np.radians(curl_deg)
    across2 = rho * np.sin(across / rho)
    z = rho * (1.0 - np.cos(across / rho))
    xy = a + np.outer(along, axis) + np.outer(across2, normal)
    return np.column_stack([xy, z])


def _global_topology(sheets):
    offsets = np.cumsum([0] + [len(m.vertices) for m in sheets])
    edges, rest, hinges = [], [], []
    for off, m in zip(offsets, sheets):
        edges.append(m.edges + off)
        rest.append(m.rest_lengths)
        hinges.append(interior_hinges(m.triangles) + off)
    return np.concatenate(edges), np.concatenate(rest), np.concatenate(hinges), offsets


def _flip_second_winding(sheets, pairing):
    """Mirroring sheet 2 reverses its winding; restore counterclockwise order."""
    if pairing.mode != "dform":
        return sheets
    m = sheets[1].copy()
    m.triangles = m.triangles[:, [0, 2, 1]]
    return [sheets[0], m]


def relax(sheets, pairing: SeamPairing, params: RelaxParams = None) -> EmbeddingResult:
    params = params or RelaxParams()
    sheets = list(sheets)
    pairs = seam_pairs(sheets, pairing)
    work = _flip_second_winding(sheets, pairing)
    edges, rest, hinges, offsets = _global_topology(work)
    scale = float(rest.mean())
    rest_s = rest / scale

    X = _initial_positions(sheets, pairing, params, pairs, scale) / scale
    nvert = len(X)
    history = {"stage_strain": [], "stage_gap": [], "objective": [], "stage_of_iter": []}

    # seam stages share half the budget; the glued surface gets the rest
    per_stage = max(1, params.iterations // (2 * params.stages))
    final_budget = max(1, params.iterations - per_stage * params.stages)
    k_len = params.length_stiffness
    ks = np.geomspace(params.seam_stiffness[0], params.seam_stiffness[1], params.stages)

    def run(x0, fun, stage, budget):
        last = {}

        def cached(flat):
            f, g = fun(flat)
            last["x"], last["f"] = flat.copy(), f
            return f, g

        def cb(xk):
            f = last["f"] if np.array_equal(xk, last["x"]) else fun(xk)[0]
            history["objective"].append(float(f))
            history["stage_of_iter"].append(stage)

        res = minimize(cached, x0.ravel(), jac=True, method="L-BFGS-B", callback=cb,
                       options={"maxiter": budget, "maxcor": 20, "ftol": 1e-15, "gtol": 1e-10})
        return res.x.reshape(-1, 3)

    bound = np.inf
    for stage, k_s in enumerate(ks):
        def fun(flat, k_s=k_s):
            Y = flat.reshape(-1, 3)
            eb, gb = bending_energy(Y, hinges, grad=True)
            es, gs = strain_energy(Y, edges, rest_s, grad=True)
            d = Y[pairs[:, 0]] - Y[pairs[:, 1]]
            eg = float((d * d).sum())
            gg = scatter_add(len(Y), pairs.T.ravel(), np.concatenate([2 * d, -2 * d]))
            return eb + k_len * es + k_s * eg, (gb + k_len * gs + k_s * gg).ravel()

        X_prev = X
        X = run(X, fun, stage, per_stage)
        X, strain = _project_to_bound(X, edges, rest_s, params, bound)
        if strain > bound:
            # the stage made things worse even after projection: reject it
            log.debug("stage %d rejected (strain %.3g > %.3g)", stage, strain, bound)
            X, strain = X_prev, bound
        bound = min(bound, strain)
        gap = np.linalg.norm(X[pairs[:, 0]] - X[pairs[:, 1]], axis=1).max() if len(pairs) else 0.0
        history["stage_strain"].append(strain)
        history["stage_gap"].append(float(gap) * scale)
        log.debug("stage %d k_seam=%.3g strain=%.3g gap=%.3g", stage, k_s, strain, gap)

    # hard merge: each glued pair becomes one vertex
    parent = np.arange(nvert)
    for a, b in pairs:
        parent[b] = a
    uniq, inverse = np.unique(parent, return_inverse=True)
    Y = scatter_add(len(uniq), inverse, X) / np.bincount(inverse)[:, None]
    m_edges = inverse[edges]
    m_hinges = inverse[hinges]
    k_fin = params.final_length_stiffness

    def fun_merged(flat):
        Z = flat.reshape(-1, 3)
        eb, gb = bending_energy(Z, m_hinges, grad=True)
        es, gs = strain_energy(Z, m_edges, rest_s, grad=True)
        return eb + k_fin * es, (gb + k_fin * gs).ravel()

    Y = run(Y, fun_merged, params.stages, final_budget)
    Y, final_strain = _project_to_bound(Y, m_edges, rest_s, params, bound, max_rounds=60)
    history["stage_strain"].append(final_strain)
    history["stage_gap"].append(0.0)

    Xf = Y[inverse] * scale
    out_meshes = []
    for i, m in enumerate(sheets):
        mm = m.copy()
        mm.vertices = Xf[offsets[i]:offsets[i + 1]].copy()
        out_meshes.append(mm)
    seam = out_meshes[0].vertices[out_meshes[0].boundary]
    eb = bending_energy(Xf / scale, hinges)
    gap = float(np.linalg.norm(Xf[pairs[:, 0]] - Xf[pairs[:, 1]], axis=1).max()) if len(pairs) else 0.0
    return EmbeddingResult(
        meshes=out_meshes,
        seam_curve=seam,
        max_edge_strain=final_strain,
        bending_energy=float(eb),
        converged=final_strain <= params.length_tolerance,
        max_seam_gap=gap,
        history=history,
    )
