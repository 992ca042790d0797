import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from biscornu.errors import IsoperimetricError, ParseError
from biscornu.geometry.boundary import (
    Arc, BoundarySpec, Line, Turn, circle, emit_boundary, oval, parse_boundary, perimeter, point_at,
    square, stadium, trisphericon_flat,
)
from biscornu.geometry.mesh import triangulate
from biscornu.geometry.seam import (
    antiprism_half_height, biscornu_seam3d, make_dform_pairing, make_pita_pairing,
)


# ----------------------------------------------------------------- boundary


def test_square_perimeter_and_corners():
    b = square(1.0)
    assert perimeter(b) == 4.0
    for s, p in [(0, (0, 0)), (1, (1, 0)), (2, (1, 1)), (3, (0, 1)), (0.5, (0.5, 0))]:
        assert np.allclose(point_at(b, s), p, atol=1e-12)


def test_stadium_perimeter_and_area():
    b = stadium(2.0, 1.0)
    assert abs(perimeter(b) - (4 + 2 * math.pi)) < 1e-12
    assert abs(b.area() - (2 * 2 * 1 + math.pi)) < 1e-12


def test_trisphericon_net_is_four_arcs():
    r = 1.0
    b = trisphericon_flat(r)
    arcs = [p for p in b.pieces if isinstance(p, Arc)]
    assert sorted((p.radius, abs(p.sweep_deg)) for p in arcs) == [(1, 180), (1, 180), (2, 90), (2, 90)]
    assert abs(perimeter(b) - 4 * math.pi * r) < 1e-12
    # quarter-disc pair minus and plus the half-discs: area 3 pi r^2
    assert abs(b.area() - 3 * math.pi) < 1e-12
    # the two right-angle corners are reflex: the region is not convex
    assert [p.angle_deg for p in b.pieces if isinstance(p, Turn)] == [-90, -90]


def test_circle_closure():
    b = circle(1.5)
    assert np.allclose(point_at(b, 0), point_at(b, perimeter(b)), atol=1e-12)


@pytest.mark.parametrize("b", [square(2.0), stadium(1.0, 0.5), trisphericon_flat(0.7), oval(3.0, 1.0), circle(1.0)])
def test_closure_and_speed(b):
    P = perimeter(b)
    assert np.allclose(point_at(b, 0.0), point_at(b, P), atol=1e-9)
    s = np.linspace(0, P, 2001)
    pts = b.sample(s)
    # unit-speed parameterisation: chord lengths never exceed arclength steps
    steps = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    assert np.all(steps <= (s[1] - s[0]) + 1e-12)
    assert abs(steps.sum() - P) < 1e-4 * P


def test_open_curve_rejected():
    with pytest.raises(ValueError):
        BoundarySpec((Line(1.0), Turn(90), Line(1.0)))
    open_b = BoundarySpec((Line(1.0),), check_closed=False)
    with pytest.raises(ValueError):
        perimeter(open_b)
    with pytest.raises(ValueError):
        point_at(square(1.0), 4.5)
    with pytest.raises(ValueError):
        point_at(square(1.0), -0.1)


def test_piece_validation():
    with pytest.raises(ValueError):
        Line(0)
    with pytest.raises(ValueError):
        Arc(-1, 90)
    with pytest.raises(ValueError):
        Arc(1, 0)


def test_bnd_parse():
    b = parse_boundary("# stadium\nline 2\narc 1 180\nline 2\narc 1 180\n")
    assert b == stadium(2.0, 1.0)


@pytest.mark.parametrize("text, line", [
    ("line 1\nturn 90\nline x\n", 3),
    ("line 1\nspiral 3\n", 2),
    ("arc 1\n", 1),
    ("line -1\n", 1),
    ("", 1),
])
def test_bnd_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_boundary(text)
    assert exc.value.lineno == line


def test_bnd_open_curve_is_parse_error():
    with pytest.raises(ParseError):
        parse_boundary("line 1\nturn 90\nline 1\n")


@st.composite
def closed_boundaries(draw):
    kind = draw(st.sampled_from(["square", "stadium", "oval", "circle", "tri"]))
    x = draw(st.floats(0.1, 10.0))
    y = draw(st.floats(0.1, 10.0))
    if kind == "square":
        return square(x)
    if kind == "stadium":
        return stadium(x, y)
    if kind == "oval":
        return oval(x + y, y, draw(st.floats(10.0, 170.0)))
    if kind == "circle":
        return circle(x)
    return trisphericon_flat(x)


@settings(max_examples=100, deadline=None)
@given(closed_boundaries())
def test_bnd_roundtrip(b):
    text = emit_boundary(b)
    assert parse_boundary(text) == b
    assert emit_boundary(parse_boundary(text)) == text


# -------------------------------------------------------------------- seams


def test_dform_identity_pairing():
    b = circle(1.0)
    p = make_dform_pairing(b, b, 0.0)
    s = np.linspace(0, perimeter(b), 9, endpoint=False)
    # the reversed traversal at offset 0 glues each point to its mirror image
    pts1 = b.sample(s)
    # the curve starts at the bottom of the circle, so the mirror is x -> -x
    pts2 = b.sample(p(s)) * np.array([-1.0, 1.0])
    assert np.allclose(pts1, pts2, atol=1e-12)


def test_biscornu_corners_meet_midpoints():
    a = 1.0
    b = square(a)
    p = make_dform_pairing(b, b, a / 2)
    for corner in range(4):
        partner = float(p(corner * a))
        assert abs((partner % a) - a / 2) < 1e-12


def test_isoperimetric_violation():
    with pytest.raises(IsoperimetricError):
        make_dform_pairing(square(1.0), square(1.25), 0.0)


@settings(max_examples=50, deadline=None)
@given(st.floats(0, 20), st.lists(st.floats(0, 1), min_size=1, max_size=20))
def test_pairings_are_bijective_and_arclength_preserving(offset, ts):
    b = stadium(2.0, 1.0)
    P = perimeter(b)
    s = np.array(ts) * P * (1 - 1e-12)
    for pairing in (make_dform_pairing(b, b, offset), make_pita_pairing(b, offset)):
        back = pairing(pairing(s))
        d = np.abs(back - s)
        assert np.all(np.minimum(d, P - d) < 1e-9)
        # distances along the seam are preserved up to orientation
        ds = np.subtract.outer(s, s) % P
        dp = np.subtract.outer(pairing(s), pairing(s)) % P
        assert np.allclose(np.minimum(ds, P - ds), np.minimum(dp, P - dp), atol=1e-9)


def test_pita_fixed_points():
    b = stadium(2.0, 1.0)
    f = 2.0 + math.pi / 2
    p = make_pita_pairing(b, f)
    P = perimeter(b)
    f0, f1 = p.fixed_points()
    assert abs(f0 - f) < 1e-12 and abs(f1 - (f + P / 2)) < 1e-12
    for x in (f0, f1):
        assert abs(float(p(x)) - x) < 1e-9


def test_stadium_folded_at_cap_apex_pairs_straight_sides():
    L, r = 2.0, 1.0
    b = stadium(L, r)
    p = make_pita_pairing(b, L + math.pi * r / 2)
    # the ends of the first straight side map onto the ends of the second
    assert abs(float(p(L)) - (L + math.pi * r)) < 1e-12
    assert abs(float(p(0.0)) - (2 * L + math.pi * r)) < 1e-12
    for t in np.linspace(0, L, 7):
        q = b.point_at(float(p(t)))
        assert abs(q[1] - 2 * r) < 1e-9  # lies on the opposite straight side


def test_trisphericon_fold_at_reflex_corner():
    r = 1.0
    b = trisphericon_flat(r)
    P = perimeter(b)
    p = make_pita_pairing(b, math.pi * r)
    f0, f1 = p.fixed_points()
    corners, acc = [], 0.0
    for piece in b.pieces:
        if isinstance(piece, Turn):
            corners.append(acc)
        acc += piece.arclength
    assert np.allclose([f0, f1], corners)
    s = np.linspace(0, P, 400, endpoint=False)
    image = np.sort(p(s) % P)
    assert np.allclose(image, np.sort(s), atol=1e-9)  # every point has a partner
    # the quarter arc of radius 2r folds onto the adjacent semicircle
    assert abs(float(p(0.0)) - 2 * math.pi * r) < 1e-12


# ----------------------------------------------------------------- antiprism


def test_antiprism_seam():
    a = 1.0
    V = biscornu_seam3d(a)
    assert V.shape == (8, 3)
    z = V[:, 2]
    assert np.all(np.sign(z[:-1]) == -np.sign(z[1:]))
    edges = np.linalg.norm(V - np.roll(V, -1, axis=0), axis=1)
    assert np.ptp(edges) < 1e-12
    # total seam length equals the square perimeter: the seam is isometric
    assert abs(edges.sum() - 4 * a) < 1e-12
    upper = V[z > 0]
    sides = np.linalg.norm(upper - np.roll(upper, -1, axis=0), axis=1)
    assert np.allclose(sides, a / math.sqrt(2))


def test_antiprism_height_oracle():
    from scipy.optimize import brentq

    a = 1.0
    R = a / 2
    plan = 2 * R * math.sin(math.pi / 8)
    for factor in (1 / math.sqrt(2), 1.0):
        edge = factor * a / math.sqrt(2)
        c = brentq(lambda c: math.hypot(plan, 2 * c) - edge, 0.0, a)
        assert abs(antiprism_half_height(a, factor) - c) < 1e-12
    assert abs(antiprism_half_height(1.0) - 0.160898) < 1e-6


def test_antiprism_rejects_short_chords():
    with pytest.raises(ValueError):
        biscornu_seam3d(1.0, chord_factor=0.3)


# --------------------------------------------------------------------- mesh


def test_square_mesh_boundary():
    m = triangulate(square(1.0), 0.25)
    assert len(m.boundary) >= 16
    pts = m.vertices[m.boundary, :2]
    on_edge = np.isclose(pts, 0).any(1) | np.isclose(pts, 1).any(1)
    assert on_edge.all()
    gaps = np.diff(np.append(m.boundary_params, m.perimeter))
    assert gaps.max() <= 0.25 + 1e-12


def test_rest_lengths_are_flat_lengths():
    m = triangulate(stadium(2.0, 1.0), 0.2)
    d = np.linalg.norm(m.vertices[m.edges[:, 1]] - m.vertices[m.edges[:, 0]], axis=1)
    assert np.allclose(d, m.rest_lengths) and np.all(m.rest_lengths > 0)


def test_stadium_mesh_area():
    r = 1.0
    b = stadium(2.0, r)
    m = triangulate(b, r / 8)
    exact = 2.0 * 2 * r + math.pi * r ** 2
    assert abs(m.area() - exact) / exact < 0.02


@pytest.mark.parametrize("b", [square(1.0), stadium(2.0, 1.0), trisphericon_flat(1.0), oval(2.0, 1.0)])
def test_mesh_is_a_disk(b):
    m = triangulate(b, perimeter(b) / 50)
    V, E, F = len(m.vertices), len(m.edges), len(m.triangles)
    assert V - E + F == 1
    ring = {tuple(sorted(e)) for e in zip(m.boundary, np.roll(m.boundary, -1))}
    assert ring == m.boundary_edges()
    assert np.all(np.diff(m.boundary_params) > 0)
    # counterclockwise triangles
    v = m.vertices
    t = m.triangles
    cross = np.cross(v[t[:, 1]] - v[t[:, 0]], v[t[:, 2]] - v[t[:, 0]])[:, 2]
    assert np.all(cross > 0)


def test_triangulate_rejects_coarse_edge():
    with pytest.raises(ValueError):
        triangulate(square(1.0), 1.5)
    with pytest.raises(ValueError):
        triangulate(square(1.0), 0.0)
