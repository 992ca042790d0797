"""The dihedral group of the square acting on stitch charts.

Points are handled in doubled, centred lattice coordinates
(``X = 2x - n``, ``Y = 2y - n``) so every isometry stays integral for odd
and even ``n`` alike.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chart import StitchChart

__all__ = [
    "D4Element",
    "D4_ELEMENTS",
    "SQUARE_CLASSES",
    "apply_d4",
    "stabilizer_square",
    "classify_square",
    "square_class_of",
]


@dataclass(frozen=True, order=True)
class D4Element:
    """``rot`` counterclockwise quarter-turns after an optional mirror.

    The mirror is the reflection across the vertical mid-axis
    (``x -> n - x``) and is applied first.
    """

    rot: int = 0
    flip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rot", int(self.rot) % 4)
        object.__setattr__(self, "flip", bool(self.flip))

    def __mul__(self, other: "D4Element") -> "D4Element":
        # R^a F^f R^b F^g = R^(a + (-1)^f b) F^(f + g)
        sign = -1 if self.flip else 1
        return D4Element(self.rot + sign * other.rot, self.flip != other.flip)

    def inverse(self) -> "D4Element":
        if self.flip:
            return self
        return D4Element(-self.rot, False)

    @property
    def is_axis_mirror(self) -> bool:
        return self.flip and self.rot % 2 == 0

    @property
    def is_diagonal_mirror(self) -> bool:
        return self.flip and self.rot % 2 == 1

    def apply_point(self, X: int, Y: int) -> tuple:
        """Map a centred doubled-coordinate point."""
        if self.flip:
            X = -X
        for _ in range(self.rot):
            X, Y = -Y, X
        return X, Y

    def __repr__(self):
        return f"D4Element(rot={self.rot}, flip={self.flip})"


IDENTITY = D4Element()
D4_ELEMENTS = tuple(D4Element(k, f) for f in (False, True) for k in range(4))

SQUARE_CLASSES = ("C1", "C2", "C4", "D1_axis", "D1_diag", "D2_axis", "D2_diag", "D4")


def _map_segments(g: D4Element, n: int, segs, horizontal: bool):
    hout, vout = [], []
    for x, y in segs:
        if horizontal:
            X, Y = 2 * x + 1 - n, 2 * y - n
        else:
            X, Y = 2 * x - n, 2 * y + 1 - n
        X, Y = g.apply_point(X, Y)
        X += n
        Y += n
        if X % 2:
            hout.append(((X - 1) // 2, Y // 2))
        else:
            vout.append((X // 2, (Y - 1) // 2))
    return hout, vout


def apply_d4(g: D4Element, c: StitchChart) -> StitchChart:
    if g == IDENTITY:
        return c
    h1, v1 = _map_segments(g, c.n, c.hseg, True)
    h2, v2 = _map_segments(g, c.n, c.vseg, False)
    return StitchChart(c.n, frozenset(h1 + h2), frozenset(v1 + v2))


def stabilizer_square(c: StitchChart) -> frozenset:
    return frozenset(g for g in D4_ELEMENTS if apply_d4(g, c) == c)


def square_class_of(subgroup) -> str:
    """Conjugacy-class label of a subgroup of D4."""
    elems = set(subgroup)
    order = len(elems)
    if order == 8:
        return "D4"
    if order == 1:
        return "C1"
    mirrors = [g for g in elems if g.flip]
    if order == 2:
        if not mirrors:
            return "C2"
        return "D1_axis" if mirrors[0].is_axis_mirror else "D1_diag"
    if order == 4:
        if not mirrors:
            return "C4"
        return "D2_axis" if mirrors[0].is_axis_mirror else "D2_diag"
    raise ValueError(f"not a subgroup of D4: {sorted(elems)}")


def classify_square(c: StitchChart) -> str:
    return square_class_of(stabilizer_square(c))
