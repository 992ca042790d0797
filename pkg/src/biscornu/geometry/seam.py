"""Seam pairings between boundary curves and the biscornu antiprism seam."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import IsoperimetricError
from .boundary import BoundarySpec, perimeter

__all__ = [
    "SeamPairing",
    "make_dform_pairing",
    "make_pita_pairing",
    "biscornu_seam3d",
    "antiprism_half_height",
    "ISOPERIMETRIC_RTOL",
]

ISOPERIMETRIC_RTOL = 1e-6


@dataclass(frozen=True)
class SeamPairing:
    """Arclength correspondence along a seam.

    ``mode`` is ``"dform"`` (point ``s`` of the first sheet meets point
    ``offset - s`` of the second, i.e. the second boundary is traversed
    backwards) or ``"pita"`` (point ``t`` meets ``2 * fold - t`` on the same
    sheet).
    """

    mode: str
    perimeter: float
    offset: float = 0.0
    fold: float = 0.0

    def partner(self, s):
        P = self.perimeter
        if self.mode == "dform":
            return np.mod(self.offset - np.asarray(s, dtype=float), P)
        return np.mod(2.0 * self.fold - np.asarray(s, dtype=float), P)

    def __call__(self, s):
        return self.partner(s)

    @property
    def sheet_count(self) -> int:
        return 2 if self.mode == "dform" else 1

    def fixed_points(self):
        """Points glued to themselves (pita-forms only)."""
        if self.mode != "pita":
            return ()
        P = self.perimeter
        return (self.fold % P, (self.fold + P / 2) % P)


def make_dform_pairing(b1: BoundarySpec, b2: BoundarySpec, start_offset: float) -> SeamPairing:
    p1, p2 = perimeter(b1), perimeter(b2)
    if abs(p1 - p2) > ISOPERIMETRIC_RTOL * p1:
        raise IsoperimetricError(f"perimeters differ: {p1:.9g} vs {p2:.9g}")
    return SeamPairing("dform", p1, offset=float(start_offset) % p1)


def make_pita_pairing(b: BoundarySpec, fold_point: float) -> SeamPairing:
    P = perimeter(b)
    return SeamPairing("pita", P, fold=float(fold_point) % P)


def antiprism_half_height(a: float, chord_factor: float = 1 / math.sqrt(2)) -> float:
    """Half the distance between the two square planes of the seam antiprism."""
    R = a / 2
    edge = chord_factor * a / math.sqrt(2)
    plan = 2 * R * math.sin(math.pi / 8)
    if edge < plan:
        raise ValueError(f"chord_factor {chord_factor} too small: zig-zag edge shorter than its plan projection")
    return 0.5 * math.sqrt(edge ** 2 - plan ** 2)


def biscornu_seam3d(a: float, chord_factor: float = 1 / math.sqrt(2)) -> np.ndarray:
    """The eight seam vertices of a biscornu made from squares of side ``a``.

    Vertices are returned in seam-label order ``1, α, 2, β, 3, γ, 4, δ``,
    at plan angles ``-45 + 45 p`` degrees on a circle of radius ``a / 2``
    (so each set of four spans a square of side ``a / sqrt(2)``).  Top-square
    corners sit at ``z = -c`` and bottom-square corners at ``z = +c``.
    Every zig-zag edge has length ``chord_factor * a / sqrt(2)``; the default
    makes it the half-side ``a / 2``, the arclength between a corner and the
    adjacent edge midpoint, so the seam is an isometric polyhedral biscornu.
    """
    if not a > 0:
        raise ValueError("side length must be positive")
    c = antiprism_half_height(a, chord_factor)
    R = a / 2
    p = np.arange(8)
    theta = np.radians(-45.0 + 45.0 * p)
    z = np.where(p % 2 == 0, -c, c)
    return np.column_stack([R * np.cos(theta), R * np.sin(theta), z])
