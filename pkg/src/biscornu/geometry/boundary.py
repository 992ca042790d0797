"""Closed planar boundaries built from straight and circular pieces.

A boundary is traced like a turtle: it starts at the origin heading along
``+x``; ``Line`` moves forward, ``Arc`` moves along a circle turning left
for positive sweep, and ``Turn`` rotates the heading in place (a corner).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..errors import ParseError

__all__ = [
    "Line",
    "Arc",
    "Turn",
    "BoundarySpec",
    "perimeter",
    "point_at",
    "square",
    "circle",
    "stadium",
    "oval",
    "trisphericon_flat",
    "parse_boundary",
    "emit_boundary",
    "CLOSURE_TOL",
]

CLOSURE_TOL = 1e-9


@dataclass(frozen=True)
class Line:
    length: float

    def __post_init__(self):
        if not self.length > 0:
            raise ValueError(f"line length must be positive, got {self.length}")

    @property
    def arclength(self):
        return self.length


@dataclass(frozen=True)
class Arc:
    """Circular arc; ``sweep_deg`` positive turns left."""

    radius: float
    sweep_deg: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"arc radius must be positive, got {self.radius}")
        if self.sweep_deg == 0:
            raise ValueError("arc sweep must be non-zero")

    @property
    def sweep(self):
        return math.radians(self.sweep_deg)

    @property
    def arclength(self):
        return self.radius * abs(self.sweep)


@dataclass(frozen=True)
class Turn:
    """Corner: heading change in degrees, positive turns left."""

    angle_deg: float

    @property
    def angle(self):
        return math.radians(self.angle_deg)

    @property
    def arclength(self):
        return 0.0


Piece = Union[Line, Arc, Turn]


def _advance(piece, pos, heading, t):
    """State after travelling arclength ``t`` into ``piece``."""
    x, y = pos
    if isinstance(piece, Line):
        return (x + t * math.cos(heading), y + t * math.sin(heading)), heading
    if isinstance(piece, Arc):
        sign = 1.0 if piece.sweep > 0 else -1.0
        cx = x - sign * piece.radius * math.sin(heading)
        cy = y + sign * piece.radius * math.cos(heading)
        phi = sign * t / piece.radius
        h2 = heading + phi
        return (cx + sign * piece.radius * math.sin(h2), cy - sign * piece.radius * math.cos(h2)), h2
    return (x, y), heading + piece.angle


@dataclass(frozen=True)
class BoundarySpec:
    pieces: tuple
    check_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not any(p.arclength > 0 for p in self.pieces):
            raise ValueError("boundary has zero length")
        # piece start states, used by point_at
        starts = []
        pos, heading = (0.0, 0.0), 0.0
        for p in self.pieces:
            starts.append((pos, heading))
            pos, heading = _advance(p, pos, heading, p.arclength if not isinstance(p, Turn) else 0.0)
        object.__setattr__(self, "_starts", tuple(starts))
        object.__setattr__(self, "_end", pos)
        if self.check_closed and not self.is_closed:
            raise ValueError(f"boundary does not close: ends at {pos}, gap {self.closure_gap:.3g}")

    @property
    def closure_gap(self) -> float:
        return math.hypot(*self._end)

    @property
    def is_closed(self) -> bool:
        return self.closure_gap <= CLOSURE_TOL * max(1.0, self.perimeter)

    @property
    def perimeter(self) -> float:
        return math.fsum(p.arclength for p in self.pieces)

    def breakpoints(self) -> np.ndarray:
        """Arclength at the start of every piece of positive length."""
        out, s = [], 0.0
        for p in self.pieces:
            if p.arclength > 0:
                out.append(s)
            s += p.arclength
        return np.array(out)

    def point_at(self, s: float) -> np.ndarray:
        return point_at(self, s)

    def sample(self, params) -> np.ndarray:
        return np.array([point_at(self, float(s) % self.perimeter) for s in params])

    def polygon(self, per_unit: float = 64.0) -> np.ndarray:
        npts = max(16, int(math.ceil(self.perimeter * per_unit)))
        return self.sample(np.linspace(0.0, self.perimeter, npts, endpoint=False))

    def area(self) -> float:
        """Signed enclosed area (exact for lines and arcs)."""
        total = 0.0
        for p, (pos, heading) in zip(self.pieces, self._starts):
            if isinstance(p, Turn):
                continue
            end, _ = _advance(p, pos, heading, p.arclength)
            total += 0.5 * (pos[0] * end[1] - end[0] * pos[1])
            if isinstance(p, Arc):
                # circular segment between chord and arc
                phi = abs(p.sweep)
                seg = 0.5 * p.radius ** 2 * (phi - math.sin(phi))
                total += seg if p.sweep > 0 else -seg
        return total


def perimeter(b: BoundarySpec) -> float:
    if not b.is_closed:
        raise ValueError("perimeter of an open boundary is undefined")
    return b.perimeter


def point_at(b: BoundarySpec, s: float) -> np.ndarray:
    if not b.is_closed:
        raise ValueError("boundary is not closed")
    P = b.perimeter
    if not 0.0 <= s <= P:
        raise ValueError(f"arclength {s} outside [0, {P}]")
    acc = 0.0
    last = None
    for p, (pos, heading) in zip(b.pieces, b._starts):
        L = p.arclength
        if L == 0:
            continue
        last = (p, pos, heading)
        if s <= acc + L:
            pt, _ = _advance(p, pos, heading, s - acc)
            return np.array(pt)
        acc += L
    p, pos, heading = last
    pt, _ = _advance(p, pos, heading, p.arclength)
    return np.array(pt)


# ------------------------------------------------------------- constructors


def square(a: float) -> BoundarySpec:
    q = 90.0
    return BoundarySpec((Line(a), Turn(q), Line(a), Turn(q), Line(a), Turn(q), Line(a), Turn(q)))


def circle(r: float) -> BoundarySpec:
    return BoundarySpec((Arc(r, 360.0),))


def stadium(length: float, r: float) -> BoundarySpec:
    """Two parallel sides of ``length`` capped by semicircles of radius ``r``."""
    return BoundarySpec((Line(length), Arc(r, 180.0), Line(length), Arc(r, 180.0)))


def oval(big: float, small: float, small_sweep: float = 60.0) -> BoundarySpec:
    """Smooth convex four-arc oval.

    Arcs of radius ``small`` sweeping ``small_sweep`` degrees alternate with
    arcs of radius ``big`` sweeping the supplement; the curve is tangent
    continuous and closes for any positive radii because it is centrally
    symmetric.
    """
    a1 = small_sweep
    a2 = 180.0 - small_sweep
    return BoundarySpec((Arc(small, a1), Arc(big, a2), Arc(small, a1), Arc(big, a2)))


def trisphericon_flat(r: float) -> BoundarySpec:
    """The trisphericon net: quarter-circles of radius ``2r`` and semicircles of radius ``r``.

    Traversed counterclockwise from the top tip: quarter arc, right-angle
    corner, semicircle, quarter arc, right-angle corner, semicircle.  The
    zig-zag of three ``2r`` construction segments joining the arc centres
    lies inside the region and is not part of the boundary.
    """
    q, h = 90.0, 180.0
    return BoundarySpec((Arc(2 * r, q), Turn(-q), Arc(r, h), Arc(2 * r, q), Turn(-q), Arc(r, h)))


# ---------------------------------------------------------------- file I/O


def parse_boundary(text: str) -> BoundarySpec:
    """``.bnd`` text: ``line <len>``, ``arc <radius> <sweep_deg>``, ``turn <deg>``."""
    pieces = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        try:
            vals = [float(v) for v in args]
        except ValueError:
            raise ParseError(f"non-numeric value in {line!r}", lineno) from None
        try:
            if kind == "line" and len(vals) == 1:
                pieces.append(Line(vals[0]))
            elif kind == "arc" and len(vals) == 2:
                pieces.append(Arc(vals[0], vals[1]))
            elif kind == "turn" and len(vals) == 1:
                pieces.append(Turn(vals[0]))
            else:
                raise ParseError(f"expected 'line <len>', 'arc <r> <deg>' or 'turn <deg>', got {line!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), lineno) from None
    if not pieces:
        raise ParseError("boundary file has no pieces", 1)
    try:
        return BoundarySpec(tuple(pieces))
    except ValueError as exc:
        raise ParseError(str(exc), len(text.splitlines())) from None


def _g(v: float) -> str:
    return f"{v:.17g}"


def emit_boundary(b: BoundarySpec) -> str:
    out = []
    for p in b.pieces:
        if isinstance(p, Line):
            out.append(f"line {_g(p.length)}")
        elif isinstance(p, Arc):
            out.append(f"arc {_g(p.radius)} {_g(p.sweep_deg)}")
        else:
            out.append(f"turn {_g(p.angle_deg)}")
    return "\n".join(out) + "\n"
