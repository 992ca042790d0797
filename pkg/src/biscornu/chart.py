"""Square stitch charts and hitomezashi generation.

A chart of size ``n`` lives on the integer lattice ``[0, n] x [0, n]`` with
the origin at the bottom-left corner and ``y`` pointing up.  A horizontal
segment ``(x, y)`` joins ``(x, y)`` to ``(x + 1, y)``; a vertical segment
``(x, y)`` joins ``(x, y)`` to ``(x, y + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError

__all__ = [
    "StitchChart",
    "SeedPair",
    "hitomezashi",
    "random_chart",
    "parse_chart",
    "emit_chart",
    "parse_chart_body",
    "emit_chart_body",
]


@dataclass(frozen=True)
class StitchChart:
    n: int
    hseg: frozenset = frozenset()
    vseg: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"chart size must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        hseg = frozenset((int(x), int(y)) for x, y in self.hseg)
        vseg = frozenset((int(x), int(y)) for x, y in self.vseg)
        n = self.n
        for x, y in hseg:
            if not (0 <= x < n and 0 <= y <= n):
                raise ValueError(f"horizontal segment ({x}, {y}) out of range for n={n}")
        for x, y in vseg:
            if not (0 <= x <= n and 0 <= y < n):
                raise ValueError(f"vertical segment ({x}, {y}) out of range for n={n}")
        object.__setattr__(self, "hseg", hseg)
        object.__setattr__(self, "vseg", vseg)

    @classmethod
    def empty(cls, n: int) -> "StitchChart":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "StitchChart":
        hseg = {(x, y) for x in range(n) for y in range(n + 1)}
        vseg = {(x, y) for x in range(n + 1) for y in range(n)}
        return cls(n, frozenset(hseg), frozenset(vseg))

    def __len__(self):
        return len(self.hseg) + len(self.vseg)

    def union(self, other: "StitchChart") -> "StitchChart":
        if other.n != self.n:
            raise ValueError("charts differ in size")
        return StitchChart(self.n, self.hseg | other.hseg, self.vseg | other.vseg)

    def __or__(self, other):
        return self.union(other)

    def raster(self) -> np.ndarray:
        """Boolean image on the doubled lattice; segment midpoints are set.

        Index ``[X, Y]`` with ``X = 2x + 1, Y = 2y`` for horizontal segments
        and ``X = 2x, Y = 2y + 1`` for vertical ones.
        """
        img = np.zeros((2 * self.n + 1, 2 * self.n + 1), dtype=bool)
        for x, y in self.hseg:
            img[2 * x + 1, 2 * y] = True
        for x, y in self.vseg:
            img[2 * x, 2 * y + 1] = True
        return img

    @classmethod
    def from_raster(cls, img: np.ndarray) -> "StitchChart":
        m = img.shape[0]
        n = (m - 1) // 2
        xs, ys = np.nonzero(img)
        hseg, vseg = set(), set()
        for X, Y in zip(xs.tolist(), ys.tolist()):
            if X % 2 == 1 and Y % 2 == 0:
                hseg.add(((X - 1) // 2, Y // 2))
            elif X % 2 == 0 and Y % 2 == 1:
                vseg.add((X // 2, (Y - 1) // 2))
            else:
                raise ValueError(f"raster cell ({X}, {Y}) is not a segment midpoint")
        return cls(n, frozenset(hseg), frozenset(vseg))


@dataclass(frozen=True)
class SeedPair:
    rows: tuple
    cols: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(_bits(self.rows)))
        object.__setattr__(self, "cols", tuple(_bits(self.cols)))

    @classmethod
    def from_strings(cls, rows: str, cols: str) -> "SeedPair":
        return cls(tuple(int(c) for c in rows), tuple(int(c) for c in cols))


def _bits(seq: Iterable) -> list:
    out = [int(b) for b in seq]
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"seed bits must be 0 or 1, got {out}")
    return out


def hitomezashi(seeds: SeedPair, n: int) -> StitchChart:
    """Running-stitch chart from row and column offset bits.

    Row ``y`` carries the horizontal segments whose ``x`` has the parity of
    ``seeds.rows[y]``; column ``x`` carries the vertical segments whose ``y``
    has the parity of ``seeds.cols[x]``.
    """
    if len(seeds.rows) != n + 1 or len(seeds.cols) != n + 1:
        raise ValueError(
            f"need {n + 1} row and column seeds, got {len(seeds.rows)} and {len(seeds.cols)}"
        )
    hseg = {(x, y) for y in range(n + 1) for x in range(n) if x % 2 == seeds.rows[y]}
    vseg = {(x, y) for x in range(n + 1) for y in range(n) if y % 2 == seeds.cols[x]}
    return StitchChart(n, frozenset(hseg), frozenset(vseg))


def random_chart(n: int, density: float, rng_seed: int) -> StitchChart:
    """Aleatoric chart: each candidate segment kept with probability ``density``."""
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    rng = np.random.default_rng(rng_seed)
    h_candidates = [(x, y) for y in range(n + 1) for x in range(n)]
    v_candidates = [(x, y) for x in range(n + 1) for y in range(n)]
    draws = rng.random(len(h_candidates) + len(v_candidates))
    keep = draws < density
    hseg = {c for c, k in zip(h_candidates, keep[: len(h_candidates)]) if k}
    vseg = {c for c, k in zip(v_candidates, keep[len(h_candidates):]) if k}
    return StitchChart(n, frozenset(hseg), frozenset(vseg))


# ---------------------------------------------------------------- file format


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_chart_body(lines: Sequence[tuple], n: int) -> StitchChart:
    """Build a chart from ``(lineno, text)`` pairs holding ``h``/``v`` records."""
    hseg, vseg = set(), set()
    for lineno, text in lines:
        parts = text.split()
        if len(parts) != 3 or parts[0] not in ("h", "v"):
            raise ParseError(f"expected 'h <x> <y>' or 'v <x> <y>', got {text!r}", lineno)
        try:
            x, y = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"non-integer coordinate in {text!r}", lineno) from None
        if parts[0] == "h":
            if not (0 <= x < n and 0 <= y <= n):
                raise ParseError(f"h segment ({x}, {y}) out of range: need 0 <= x < {n}, 0 <= y <= {n}", lineno)
            target = hseg
        else:
            if not (0 <= x <= n and 0 <= y < n):
                raise ParseError(f"v segment ({x}, {y}) out of range: need 0 <= x <= {n}, 0 <= y < {n}", lineno)
            target = vseg
        if (x, y) in target:
            raise ParseError(f"duplicate segment {parts[0]} {x} {y}", lineno)
        target.add((x, y))
    return StitchChart(n, frozenset(hseg), frozenset(vseg))


def parse_size_line(lineno: int, text: str) -> int:
    parts = text.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(f"expected 'n <int>', got {text!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"chart size is not an integer: {parts[1]!r}", lineno) from None
    if n < 1:
        raise ParseError(f"chart size must be positive, got {n}", lineno)
    return n


def content_lines(text: str) -> list:
    """Non-blank, comment-stripped lines as ``(lineno, text)`` pairs."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if line:
            out.append((i, line))
    return out


def parse_chart(text: str) -> StitchChart:
    lines = content_lines(text)
    if not lines:
        raise ParseError("empty chart file: missing 'n <int>' line", 1)
    n = parse_size_line(*lines[0])
    return parse_chart_body(lines[1:], n)


def emit_chart_body(chart: StitchChart) -> str:
    out = [f"h {x} {y}\n" for x, y in sorted(chart.hseg, key=lambda p: (p[1], p[0]))]
    out += [f"v {x} {y}\n" for x, y in sorted(chart.vseg)]
    return "".join(out)


def emit_chart(chart: StitchChart) -> str:
    """Canonical text: size line, horizontal segments row by row, then vertical ones."""
    return f"n {chart.n}\n" + emit_chart_body(chart)
